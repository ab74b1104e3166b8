#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamearith/interval.hpp"
#include "tamearith/rational.hpp"

namespace tamearith {

/// The map zeta_n -> zeta_n^k on Q(zeta_n), gcd(k, n) = 1.
struct GaloisElement {
    long n = 1;
    long k = 1;

    GaloisElement() = default;
    GaloisElement(long n_, long k_);
};

/// Element of Q(zeta_n) in reduced power-basis form: coeffs[i] multiplies
/// zeta_n^i, i < phi(n), reduced modulo the n-th cyclotomic polynomial.
/// Equality of values at the same conductor is coefficient equality; values
/// at different conductors compare through the lcm lift.
class CyclotomicNumber {
public:
    CyclotomicNumber() : n_(1), coeffs_(1, Rat(0)) {}
    CyclotomicNumber(const Rat& q) : n_(1), coeffs_(1, q) {}
    CyclotomicNumber(long value) : n_(1), coeffs_(1, Rat(value)) {}

    static CyclotomicNumber zeta(long n, long k = 1);
    static CyclotomicNumber from_coeffs(long n, std::vector<Rat> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rat> to_rational() const;

    /// Re-express at conductor m (n | m required).
    CyclotomicNumber lifted(long m) const;

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a);
    CyclotomicNumber inv() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

    /// True when every power-basis coefficient is p-integral.
    bool p_integral(unsigned long p) const;

    std::string to_string() const;

private:
    long n_;
    std::vector<Rat> coeffs_;
};

CyclotomicNumber galois_apply(const GaloisElement& w, const CyclotomicNumber& a);
CyclotomicNumber conjugate(const CyclotomicNumber& a);
Rat norm_to_Q(const CyclotomicNumber& a);

/// Certified enclosure of the image of a under zeta_n -> exp(2*pi*i*k/n).
ComplexInterval embed(const CyclotomicNumber& a, const GaloisElement& w);
ComplexInterval embed(const CyclotomicNumber& a);

long euler_phi(long n);
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Residues coprime to n, ascending (the Galois group of Q(zeta_n)/Q).
std::vector<long> coprime_residues(long n);

CyclotomicNumber pow_cyc(const CyclotomicNumber& a, long e);

} // namespace tamearith

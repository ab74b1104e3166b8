#pragma once

#include <cmath>
#include <string>

#include "tamearith/error.hpp"
#include "tamearith/rational.hpp"

namespace tamearith {

/// Unevaluated double-double sum hi + lo, |lo| <= ulp(hi)/2.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

DD dd_add(DD a, DD b);
DD dd_sub(DD a, DD b);
DD dd_mul(DD a, DD b);
DD dd_div(DD a, DD b);
DD dd_neg(DD a);
DD dd_sqrt(DD a);
DD dd_from_rat(const Rat& q);
DD dd_from_decimal(const std::string& text);
DD dd_pi();

/// Midpoint-radius real interval. All arithmetic rounds the radius outward.
struct RealInterval {
    DD mid;
    double rad = 0.0;

    RealInterval() = default;
    RealInterval(double m, double r = 0.0) : mid(m), rad(r) {}
    RealInterval(DD m, double r) : mid(m), rad(r) {}

    static RealInterval exact(const Rat& q);

    double midpoint() const { return mid.value(); }
    bool contains_zero() const { return std::abs(mid.value()) <= rad; }
    bool strictly_positive() const { return mid.value() - rad > 0.0; }
    bool strictly_negative() const { return mid.value() + rad < 0.0; }
};

RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a);
RealInterval operator*(const RealInterval& a, const RealInterval& b);
RealInterval operator/(const RealInterval& a, const RealInterval& b);
RealInterval sqrt(const RealInterval& a);
RealInterval pow_int(const RealInterval& a, long e);

/// Does the interval contain the exact rational value?
bool contains(const RealInterval& a, const Rat& q);

/// True when both intervals admit a common point.
bool overlap(const RealInterval& a, const RealInterval& b);

struct ComplexInterval {
    RealInterval re, im;

    ComplexInterval() = default;
    ComplexInterval(RealInterval r, RealInterval i) : re(r), im(i) {}
    ComplexInterval(double r, double i = 0.0) : re(r), im(i) {}

    static ComplexInterval exact(const Rat& q) { return {RealInterval::exact(q), RealInterval()}; }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval conj(const ComplexInterval& a);
RealInterval abs(const ComplexInterval& a);
RealInterval abs_sq(const ComplexInterval& a);
bool overlap(const ComplexInterval& a, const ComplexInterval& b);

/// Certified enclosure of exp(2*pi*i*k/n). Precision of the midpoint follows
/// the global precision knob.
ComplexInterval root_of_unity(long n, long k);

/// Sign of a declared-real interval; throws PrecisionInsufficient when the
/// real part straddles zero or the imaginary part is not certified small.
int certified_sign(const ComplexInterval& x, double tol = 1e-9);

/// Working precision for internally generated embeddings (53 or 106 bits).
/// Fixed at startup; not thread safe to change mid-run.
namespace precision {
int bits();
void set_bits(int bits);
} // namespace precision

} // namespace tamearith

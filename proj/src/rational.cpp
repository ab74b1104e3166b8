#include "tamearith/rational.hpp"

namespace tamearith {

Rat pow_rat(const Rat& base, long exp) {
    if (exp == 0) return Rat(1);
    require(base != 0 || exp > 0, errc::division_by_zero, "0 raised to negative power");
    Rat b = exp > 0 ? base : Rat(1) / base;
    unsigned long e = exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
    Rat out(1);
    Rat acc = b;
    while (e) {
        if (e & 1) out *= acc;
        if (e >>= 1) acc *= acc;
    }
    out.canonicalize();
    return out;
}

long val_p(const Rat& q, unsigned long p) {
    require(q != 0, errc::division_by_zero, "valuation of zero");
    Int pp(static_cast<unsigned long>(p));
    long v = 0;
    Int num = q.get_num();
    while (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) {
        num /= pp;
        ++v;
    }
    Int den = q.get_den();
    while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) {
        den /= pp;
        --v;
    }
    return v;
}

std::optional<Int> exact_sqrt(const Int& a) {
    if (a < 0) return std::nullopt;
    if (mpz_perfect_square_p(a.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
        return r;
    }
    return std::nullopt;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_sqrt(Int(q.get_num()));
    if (!n) return std::nullopt;
    auto d = exact_sqrt(Int(q.get_den()));
    if (!d) return std::nullopt;
    return rat(*n, *d);
}

bool is_prime(unsigned long n) {
    Int z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) > 0;
}

std::vector<unsigned long> prime_support(const Rat& q) {
    std::vector<unsigned long> out;
    require(q != 0, errc::division_by_zero, "prime support of zero");
    auto collect = [&out](Int n) {
        n = abs(n);
        for (unsigned long p = 2; n > 1; p += (p == 2 ? 1 : 2)) {
            if (Int(p) * Int(p) > n) {
                unsigned long big = mpz_get_ui(n.get_mpz_t());
                if (n > 1) out.push_back(big);
                break;
            }
            if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                out.push_back(p);
                while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= static_cast<unsigned long>(p);
            }
        }
    };
    collect(q.get_num());
    collect(q.get_den());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double to_double(const Rat& q) { return q.get_d(); }

std::string to_string(const Rat& q) { return q.get_str(); }

} // namespace tamearith

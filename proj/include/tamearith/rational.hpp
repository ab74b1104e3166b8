#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamearith/error.hpp"

namespace tamearith {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    require(den != 0, errc::division_by_zero, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    require(den != 0, errc::division_by_zero, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat pow_rat(const Rat& base, long exp);

/// p-adic valuation of a nonzero rational.
long val_p(const Rat& q, unsigned long p);

/// Largest b with b*b == a, if a is a perfect square.
std::optional<Int> exact_sqrt(const Int& a);

/// Exact square root of a nonnegative rational, if one exists.
std::optional<Rat> exact_sqrt(const Rat& q);

bool is_prime(unsigned long n);

/// Primes dividing numerator or denominator.
std::vector<unsigned long> prime_support(const Rat& q);

double to_double(const Rat& q);

std::string to_string(const Rat& q);

} // namespace tamearith

#include "tamearith/interval.hpp"

#include <algorithm>
#include <cctype>

namespace tamearith {

namespace {

constexpr double kDDEps = 5.0e-31;   // relative error budget per dd operation
constexpr double kDblEps = 2.3e-16;  // a couple of ulps

struct TwoDouble {
    double s, e;
};

inline TwoDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double e = (a - (s - bb)) + (b - bb);
    return {s, e};
}

inline TwoDouble quick_two_sum(double a, double b) {
    double s = a + b;
    double e = b - (s - a);
    return {s, e};
}

inline TwoDouble two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

} // namespace

DD dd_add(DD a, DD b) {
    auto [s1, s2] = two_sum(a.hi, b.hi);
    auto [t1, t2] = two_sum(a.lo, b.lo);
    s2 += t1;
    auto [r1, r2] = quick_two_sum(s1, s2);
    r2 += t2;
    auto [z1, z2] = quick_two_sum(r1, r2);
    return {z1, z2};
}

DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

DD dd_mul(DD a, DD b) {
    auto [p1, p2] = two_prod(a.hi, b.hi);
    p2 += a.hi * b.lo + a.lo * b.hi;
    auto [z1, z2] = quick_two_sum(p1, p2);
    return {z1, z2};
}

DD dd_div(DD a, DD b) {
    require(b.hi != 0.0, errc::division_by_zero, "dd division by zero");
    double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, DD(q1)));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, DD(q2)));
    double q3 = r.hi / b.hi;
    auto [s1, s2] = quick_two_sum(q1, q2);
    return dd_add(DD(s1, s2), DD(q3));
}

DD dd_sqrt(DD a) {
    require(a.hi >= 0.0, errc::internal, "dd sqrt of negative");
    if (a.hi == 0.0) return DD(0.0);
    double x = 1.0 / std::sqrt(a.hi);
    double y = a.hi * x;
    DD yy = dd_mul(DD(y), DD(y));
    DD diff = dd_sub(a, yy);
    double corr = diff.hi * x * 0.5;
    auto [s1, s2] = quick_two_sum(y, corr);
    return {s1, s2};
}

DD dd_from_rat(const Rat& q) {
    // hi = rounded value, lo = rounded remainder: good to ~2^-104.
    double hi = q.get_d();
    Rat rem = q - Rat(hi);
    double lo = rem.get_d();
    auto [s1, s2] = quick_two_sum(hi, lo);
    return {s1, s2};
}

DD dd_from_decimal(const std::string& text) {
    // Parse sign, digits, optional fraction and exponent into an exact
    // rational, then round.
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    require(!t.empty(), errc::descriptor_invalid, "empty decimal literal");
    bool neg = false;
    size_t i = 0;
    if (t[i] == '+' || t[i] == '-') {
        neg = t[i] == '-';
        ++i;
    }
    Int num = 0;
    long frac_digits = 0;
    bool in_frac = false, any = false;
    for (; i < t.size(); ++i) {
        char c = t[i];
        if (c == '.') {
            require(!in_frac, errc::descriptor_invalid, "bad decimal: " + text);
            in_frac = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            require(std::isdigit(static_cast<unsigned char>(c)), errc::descriptor_invalid,
                    "bad decimal: " + text);
            num = num * 10 + (c - '0');
            if (in_frac) ++frac_digits;
            any = true;
        }
    }
    require(any, errc::descriptor_invalid, "bad decimal: " + text);
    long exp10 = 0;
    if (i < t.size()) {
        exp10 = std::stol(t.substr(i + 1));
    }
    Rat q(num);
    long e = exp10 - frac_digits;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
    if (e >= 0)
        q *= Rat(pow10);
    else
        q /= Rat(pow10);
    if (neg) q = -q;
    q.canonicalize();
    return dd_from_rat(q);
}

DD dd_pi() { return {3.141592653589793116e+00, 1.224646799147353207e-16}; }

RealInterval RealInterval::exact(const Rat& q) {
    DD m = dd_from_rat(q);
    double r = std::abs(m.value()) * kDDEps;
    return {m, r};
}

namespace {

inline RealInterval make(DD mid, double rad) {
    rad += std::abs(mid.value()) * kDDEps;
    return {mid, rad};
}

} // namespace

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    return make(dd_add(a.mid, b.mid), a.rad + b.rad);
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    return make(dd_sub(a.mid, b.mid), a.rad + b.rad);
}

RealInterval operator-(const RealInterval& a) { return {dd_neg(a.mid), a.rad}; }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    double rad = std::abs(a.mid.value()) * b.rad + std::abs(b.mid.value()) * a.rad + a.rad * b.rad;
    return make(dd_mul(a.mid, b.mid), rad);
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    require(!b.contains_zero(), errc::precision_insufficient, "interval division by zero straddle");
    // |a/b - mid| <= (|a|rad_b + |b|rad_a) / (|b|(|b|-rad_b)) conservatively
    double bm = std::abs(b.mid.value());
    double denom = bm * (bm - b.rad);
    double rad = (std::abs(a.mid.value()) * b.rad + bm * a.rad) / denom;
    return make(dd_div(a.mid, b.mid), rad);
}

RealInterval sqrt(const RealInterval& a) {
    double m = a.mid.value();
    require(m - a.rad >= -1e-300, errc::precision_insufficient, "interval sqrt of negative");
    if (m <= a.rad) {
        // Interval touches zero: enclose [0, sqrt(hi)].
        double hi = std::sqrt(std::max(0.0, m + a.rad));
        return {DD(hi / 2), hi / 2 + hi * kDblEps};
    }
    DD mid = dd_sqrt(a.mid);
    double rad = a.rad / (2.0 * std::sqrt(m - a.rad));
    return make(mid, rad);
}

RealInterval pow_int(const RealInterval& a, long e) {
    if (e == 0) return RealInterval(1.0);
    RealInterval base = a;
    if (e < 0) {
        base = RealInterval(1.0) / a;
        e = -e;
    }
    RealInterval out(1.0);
    while (e) {
        if (e & 1) out = out * base;
        if (e >>= 1) base = base * base;
    }
    return out;
}

bool contains(const RealInterval& a, const Rat& q) {
    // |mid - q| <= rad, decided with a dd enclosure of the difference.
    DD d = dd_sub(a.mid, dd_from_rat(q));
    return std::abs(d.value()) <= a.rad + std::abs(a.mid.value()) * kDDEps + 1e-300;
}

bool overlap(const RealInterval& a, const RealInterval& b) {
    DD d = dd_sub(a.mid, b.mid);
    return std::abs(d.value()) <= a.rad + b.rad + (std::abs(a.mid.value()) + std::abs(b.mid.value())) * kDDEps;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    RealInterval n = abs_sq(b);
    ComplexInterval num = a * conj(b);
    return {num.re / n, num.im / n};
}

ComplexInterval conj(const ComplexInterval& a) { return {a.re, -a.im}; }

RealInterval abs_sq(const ComplexInterval& a) { return a.re * a.re + a.im * a.im; }

RealInterval abs(const ComplexInterval& a) { return sqrt(abs_sq(a)); }

bool overlap(const ComplexInterval& a, const ComplexInterval& b) {
    return overlap(a.re, b.re) && overlap(a.im, b.im);
}

namespace precision {

namespace {
int g_bits = 53;
}

int bits() { return g_bits; }

void set_bits(int bits) {
    require(bits == 53 || bits == 106, errc::descriptor_invalid, "precision bits must be 53 or 106");
    g_bits = bits;
}

} // namespace precision

namespace {

// sin and cos of a dd value |x| <= pi/4 by Taylor series.
void dd_sincos_small(DD x, DD& s, DD& c) {
    DD x2 = dd_mul(x, x);
    DD term = x;
    DD sum_s = x;
    for (int k = 1; k < 26; ++k) {
        term = dd_mul(term, x2);
        term = dd_div(term, DD(static_cast<double>((2 * k) * (2 * k + 1))));
        if (k % 2 == 1)
            sum_s = dd_sub(sum_s, term);
        else
            sum_s = dd_add(sum_s, term);
        if (std::abs(term.hi) < 1e-35) break;
    }
    DD term_c(1.0);
    DD sum_c(1.0);
    for (int k = 1; k < 26; ++k) {
        term_c = dd_mul(term_c, x2);
        term_c = dd_div(term_c, DD(static_cast<double>((2 * k - 1) * (2 * k))));
        if (k % 2 == 1)
            sum_c = dd_sub(sum_c, term_c);
        else
            sum_c = dd_add(sum_c, term_c);
        if (std::abs(term_c.hi) < 1e-35) break;
    }
    s = sum_s;
    c = sum_c;
}

} // namespace

ComplexInterval root_of_unity(long n, long k) {
    require(n >= 1, errc::descriptor_invalid, "root_of_unity conductor must be >= 1");
    long r = ((k % n) + n) % n;
    if ((4 * r) % n == 0) {
        // quarter turns are exact
        long quarter = 4 * r / n;
        static const double re[4] = {1.0, 0.0, -1.0, 0.0};
        static const double im[4] = {0.0, 1.0, 0.0, -1.0};
        return {RealInterval(re[quarter]), RealInterval(im[quarter])};
    }
    if (precision::bits() <= 53) {
        double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(r) / static_cast<double>(n);
        double c = std::cos(ang), s = std::sin(ang);
        double rad = 4.0 * kDblEps;
        return {RealInterval(DD(c), rad), RealInterval(DD(s), rad)};
    }
    // angle = 2*pi*r/n, reduced to |t| <= 1/8 of a turn, then two doublings
    Rat t = rat(static_cast<long>(r), n);  // in [0,1)
    if (t > rat(1, 2)) t -= 1;             // now in (-1/2, 1/2]
    DD x4 = dd_mul(dd_div(dd_pi(), DD(2.0)), dd_from_rat(t));  // 2*pi*t/4
    DD s4, c4;
    dd_sincos_small(x4, s4, c4);
    // doubling twice: (c,s) -> (c^2 - s^2, 2sc)
    DD c2 = dd_sub(dd_mul(c4, c4), dd_mul(s4, s4));
    DD s2 = dd_mul(DD(2.0), dd_mul(s4, c4));
    DD c1 = dd_sub(dd_mul(c2, c2), dd_mul(s2, s2));
    DD s1 = dd_mul(DD(2.0), dd_mul(s2, c2));
    double rad = 64.0 * kDDEps;
    return {RealInterval(c1, rad), RealInterval(s1, rad)};
}

int certified_sign(const ComplexInterval& x, double tol) {
    double scale = std::max(1.0, std::abs(x.re.mid.value()));
    require(std::abs(x.im.mid.value()) <= x.im.rad + tol * scale, errc::precision_insufficient,
            "imaginary part not certified zero for a declared-real quantity");
    if (x.re.strictly_positive()) return 1;
    if (x.re.strictly_negative()) return -1;
    fail(errc::precision_insufficient, "real interval straddles zero; raise working precision");
}

} // namespace tamearith

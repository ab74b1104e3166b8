#include "tamearith/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tamearith {

namespace {

// Integer polynomials as coefficient vectors, lowest degree first.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rat>;

void z_trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division of integer polynomials (remainder must vanish).
ZPoly z_div_exact(ZPoly num, const ZPoly& den) {
    z_trim(num);
    ZPoly out(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        Int q = num.back() / den.back();
        size_t shift = num.size() - den.size();
        out[shift] = q;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        z_trim(num);
    }
    return out;
}

struct ConductorData {
    long phi;
    ZPoly cyclo;                       // Phi_n, monic
    std::vector<std::vector<Int>> pw;  // x^k mod Phi_n for 0 <= k < max(n, 2*phi-1)
};

std::map<long, ConductorData> g_cache;
std::mutex g_cache_mutex;

const ConductorData& conductor_data(long n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(n);
    if (it != g_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, built bottom-up; the
    // recursion is shallow because divisors are cached first.
    std::function<ZPoly(long)> phi_poly = [&](long m) -> ZPoly {
        auto found = g_cache.find(m);
        if (found != g_cache.end()) return found->second.cyclo;
        ZPoly num(m + 1, Int(0));
        num[0] = -1;
        num[m] = 1;
        ZPoly den{Int(1)};
        for (long d = 1; d < m; ++d)
            if (m % d == 0) den = z_mul(den, phi_poly(d));
        return z_div_exact(num, den);
    };

    ConductorData data;
    data.cyclo = phi_poly(n);
    data.phi = static_cast<long>(data.cyclo.size()) - 1;
    long deg = data.phi;
    long count = std::max<long>(n, 2 * deg - 1);
    data.pw.assign(count, std::vector<Int>(deg, Int(0)));
    for (long k = 0; k < std::min<long>(deg, count); ++k) data.pw[k][k] = 1;
    for (long k = deg; k < count; ++k) {
        // x^k = x * x^{k-1} mod Phi_n
        const auto& prev = data.pw[k - 1];
        std::vector<Int> cur(deg, Int(0));
        for (long i = 0; i + 1 < deg; ++i) cur[i + 1] = prev[i];
        const Int& top = prev[deg - 1];
        if (top != 0)
            for (long i = 0; i < deg; ++i) cur[i] -= top * data.cyclo[i];
        data.pw[k] = std::move(cur);
    }
    auto [pos, inserted] = g_cache.emplace(n, std::move(data));
    (void)inserted;
    return pos->second;
}

QPoly q_mod_cyclo(const QPoly& f, long n) {
    const auto& data = conductor_data(n);
    long deg = data.phi;
    QPoly out(deg, Rat(0));
    for (size_t k = 0; k < f.size(); ++k) {
        if (f[k] == 0) continue;
        if (static_cast<long>(k) < deg) {
            out[k] += f[k];
        } else {
            const auto& row = data.pw[k];
            for (long i = 0; i < deg; ++i)
                if (row[i] != 0) out[i] += f[k] * Rat(row[i]);
        }
    }
    for (auto& c : out) c.canonicalize();
    return out;
}

void q_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    q_trim(out);
    return out;
}

// Division with remainder over Q[x].
void q_divmod(QPoly num, const QPoly& den, QPoly& quot, QPoly& rem) {
    q_trim(num);
    quot.assign(num.size() >= den.size() && !den.empty() ? num.size() - den.size() + 1 : 0,
                Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat q = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = q;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
        q_trim(num);
    }
    rem = std::move(num);
}

} // namespace

long euler_phi(long n) { return conductor_data(n).phi; }

const std::vector<Int>& cyclotomic_polynomial(long n) { return conductor_data(n).cyclo; }

std::vector<long> coprime_residues(long n) {
    std::vector<long> out;
    for (long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k % n == 0 ? n : k);
    if (n == 1) return {1};
    return out;
}

GaloisElement::GaloisElement(long n_in, long k_in) : n(n_in) {
    require(n >= 1, errc::descriptor_invalid, "Galois element needs conductor >= 1");
    k = ((k_in % n) + n) % n;
    if (n == 1) k = 1;
    require(std::gcd(k, n) == 1, errc::not_coprime,
            "Galois exponent " + std::to_string(k_in) + " not coprime to " + std::to_string(n));
}

CyclotomicNumber CyclotomicNumber::zeta(long n, long k) {
    require(n >= 1, errc::descriptor_invalid, "conductor must be >= 1");
    const auto& data = conductor_data(n);
    long r = ((k % n) + n) % n;
    std::vector<Rat> coeffs(data.phi, Rat(0));
    const auto& row = data.pw[r];
    for (long i = 0; i < data.phi; ++i) coeffs[i] = Rat(row[i]);
    CyclotomicNumber out;
    out.n_ = n;
    out.coeffs_ = std::move(coeffs);
    return out;
}

CyclotomicNumber CyclotomicNumber::from_coeffs(long n, std::vector<Rat> coeffs) {
    QPoly reduced = q_mod_cyclo(coeffs, n);
    CyclotomicNumber out;
    out.n_ = n;
    out.coeffs_ = std::move(reduced);
    return out;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rat> CyclotomicNumber::to_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lifted(long m) const {
    if (m == n_) return *this;
    require(m % n_ == 0, errc::descriptor_invalid, "conductor lift must be a multiple");
    long step = m / n_;
    QPoly raw(static_cast<size_t>(euler_phi(n_) - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
    return from_coeffs(m, std::move(raw));
}

namespace {
long common_conductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return std::lcm(a.conductor(), b.conductor());
}
} // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = common_conductor(a, b);
    CyclotomicNumber x = a.lifted(m), y = b.lifted(m);
    std::vector<Rat> coeffs = x.coeffs();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] += y.coeffs()[i];
        coeffs[i].canonicalize();
    }
    return CyclotomicNumber::from_coeffs(m, std::move(coeffs));
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
    std::vector<Rat> coeffs = a.coeffs();
    for (auto& c : coeffs) c = -c;
    return CyclotomicNumber::from_coeffs(a.conductor(), std::move(coeffs));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = common_conductor(a, b);
    CyclotomicNumber x = a.lifted(m), y = b.lifted(m);
    QPoly prod = q_mul(x.coeffs(), y.coeffs());
    return CyclotomicNumber::from_coeffs(m, std::move(prod));
}

CyclotomicNumber CyclotomicNumber::inv() const {
    require(!is_zero(), errc::division_by_zero, "inverse of zero cyclotomic");
    // Extended Euclid against Phi_n over Q[x]: u*f + v*Phi = gcd = const.
    const auto& data = conductor_data(n_);
    QPoly r0(data.cyclo.size());
    for (size_t i = 0; i < data.cyclo.size(); ++i) r0[i] = Rat(data.cyclo[i]);
    QPoly r1 = coeffs_;
    q_trim(r1);
    QPoly s0{}, s1{Rat(1)};  // coefficients of f in the Bezout combination
    while (true) {
        q_trim(r1);
        require(!r1.empty(), errc::internal, "cyclotomic inverse: unexpected zero remainder");
        if (r1.size() == 1) break;
        QPoly quot, rem;
        q_divmod(r0, r1, quot, rem);
        QPoly s2 = s0;
        QPoly qs = q_mul(quot, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rat lead = r1[0];
    QPoly out = s1;
    for (auto& c : out) {
        c /= lead;
        c.canonicalize();
    }
    return from_coeffs(n_, std::move(out));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = common_conductor(a, b);
    return a.lifted(m).coeffs() == b.lifted(m).coeffs();
}

bool CyclotomicNumber::p_integral(unsigned long p) const {
    for (const auto& c : coeffs_)
        if (c != 0 && mpz_divisible_ui_p(c.get_den().get_mpz_t(), p)) return false;
    return true;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z" << n_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CyclotomicNumber galois_apply(const GaloisElement& w, const CyclotomicNumber& a) {
    long m = std::lcm(w.n, a.conductor());
    long k = w.k;
    if (m != w.n) {
        // extend (n,k) to an automorphism of Q(zeta_m): any k' = k mod n with
        // gcd(k', m) = 1 restricts to w on Q(zeta_n); take the least one
        long kk = -1;
        for (long t = 0; t < m / w.n; ++t) {
            long cand = (k + t * w.n) % m;
            if (cand == 0) cand = m;
            if (std::gcd(cand, m) == 1) {
                kk = cand % m;
                break;
            }
        }
        require(kk >= 0, errc::not_coprime, "cannot lift galois exponent to common conductor");
        k = kk;
    }
    CyclotomicNumber x = a.lifted(m);
    QPoly raw(m, Rat(0));
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] == 0) continue;
        long e = (static_cast<long>(i) * k) % m;
        raw[e] += x.coeffs()[i];
    }
    return CyclotomicNumber::from_coeffs(m, std::move(raw));
}

CyclotomicNumber conjugate(const CyclotomicNumber& a) {
    long n = a.conductor();
    if (n <= 2) return a;
    return galois_apply(GaloisElement(n, n - 1), a);
}

Rat norm_to_Q(const CyclotomicNumber& a) {
    long n = a.conductor();
    CyclotomicNumber prod(Rat(1));
    for (long k : coprime_residues(n)) prod *= galois_apply(GaloisElement(n, k), a);
    auto q = prod.to_rational();
    require(q.has_value(), errc::internal, "norm did not land in Q");
    return *q;
}

ComplexInterval embed(const CyclotomicNumber& a, const GaloisElement& w) {
    long n = a.conductor();
    ComplexInterval acc(RealInterval(0.0), RealInterval(0.0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        if (c == 0) continue;
        ComplexInterval z = root_of_unity(n, static_cast<long>(i) * w.k % n);
        ComplexInterval term{z.re * RealInterval::exact(c), z.im * RealInterval::exact(c)};
        acc = acc + term;
    }
    return acc;
}

ComplexInterval embed(const CyclotomicNumber& a) { return embed(a, GaloisElement(a.conductor(), 1)); }

CyclotomicNumber pow_cyc(const CyclotomicNumber& a, long e) {
    if (e == 0) return CyclotomicNumber(Rat(1));
    CyclotomicNumber base = e > 0 ? a : a.inv();
    unsigned long exp = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    CyclotomicNumber out(Rat(1));
    CyclotomicNumber acc = base;
    while (exp) {
        if (exp & 1) out *= acc;
        if (exp >>= 1) acc *= acc;
    }
    return out;
}

} // namespace tamearith

#include "tamearith/character.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace tamearith {

namespace {

// ---- arithmetic mod a word-sized prime ----

struct Fp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (__uint128_t)a * b % p; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpMatrix = std::vector<std::vector<uint64_t>>;

// columns of `space` span a subspace; returns basis of the kernel of
// (m - lambda I) restricted to that subspace, as columns in ambient coords
std::vector<std::vector<uint64_t>> split_eigenspace(const Fp& fp, const FpMatrix& m,
                                                    uint64_t lambda,
                                                    const std::vector<std::vector<uint64_t>>& space) {
    size_t n = m.size();
    size_t d = space.size();
    // rows: (m - lambda) * space_j expressed in ambient coordinates -> system
    // find x in F^d with (m - lambda I) * (space * x) = 0
    std::vector<std::vector<uint64_t>> sys(n, std::vector<uint64_t>(d, 0));
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < n; ++i) {
            uint64_t acc = 0;
            for (size_t k = 0; k < n; ++k) acc = fp.add(acc, fp.mul(m[i][k], space[j][k]));
            acc = fp.sub(acc, fp.mul(lambda, space[j][i]));
            sys[i][j] = acc;
        }
    }
    // gaussian elimination on sys (n x d), kernel in coordinates of the space basis
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < d && r < n; ++c) {
        size_t pr = r;
        while (pr < n && sys[pr][c] == 0) ++pr;
        if (pr == n) continue;
        std::swap(sys[pr], sys[r]);
        uint64_t piv_inv = fp.inv(sys[r][c]);
        for (size_t j = c; j < d; ++j) sys[r][j] = fp.mul(sys[r][j], piv_inv);
        for (size_t i = 0; i < n; ++i) {
            if (i == r || sys[i][c] == 0) continue;
            uint64_t f = sys[i][c];
            for (size_t j = c; j < d; ++j) sys[i][j] = fp.sub(sys[i][j], fp.mul(f, sys[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(d, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<uint64_t>> kernel;
    for (size_t c = 0; c < d; ++c) {
        if (is_pivot[c]) continue;
        std::vector<uint64_t> coef(d, 0);
        coef[c] = 1;
        for (size_t rr = 0; rr < pivot_col.size(); ++rr)
            coef[pivot_col[rr]] = fp.sub(0, sys[rr][c]);
        // back to ambient coordinates
        std::vector<uint64_t> vec(n, 0);
        for (size_t j = 0; j < d; ++j) {
            if (coef[j] == 0) continue;
            for (size_t i = 0; i < n; ++i) vec[i] = fp.add(vec[i], fp.mul(coef[j], space[j][i]));
        }
        kernel.push_back(std::move(vec));
    }
    return kernel;
}

uint64_t smallest_primitive_root(const Fp& fp) {
    uint64_t p = fp.p;
    std::vector<uint64_t> prime_factors;
    uint64_t m = p - 1;
    for (uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_factors.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : prime_factors)
            if (fp.pow(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    fail(errc::internal, "no primitive root found");
}

bool value_less(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = std::lcm(a.conductor(), b.conductor());
    const CyclotomicNumber la = a.lifted(m), lb = b.lifted(m);
    for (size_t i = 0; i < la.coeffs().size(); ++i) {
        if (la.coeffs()[i] != lb.coeffs()[i]) return la.coeffs()[i] < lb.coeffs()[i];
    }
    return false;
}

} // namespace

CyclotomicNumber VirtualCharacter::value_at_class(size_t cls) const {
    CyclotomicNumber out(0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        out += CyclotomicNumber(Rat(coeffs[i])) * table->irreducibles[i].values[cls];
    }
    return out;
}

CyclotomicNumber VirtualCharacter::value_at_element(int g) const {
    return value_at_class(table->classes.class_of[g]);
}

long VirtualCharacter::degree() const {
    long d = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) d += coeffs[i] * table->irreducibles[i].degree;
    return d;
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
    require(table == o.table, errc::group_mismatch, "virtual characters over different tables");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
    require(table == o.table, errc::group_mismatch, "virtual characters over different tables");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

VirtualCharacter VirtualCharacter::operator*(long n) const {
    VirtualCharacter out = *this;
    for (auto& c : out.coeffs) c *= n;
    return out;
}

std::vector<size_t> CharacterTable::galois_permutation(long k) const {
    long e = exponent();
    require(std::gcd(k, e) == 1, errc::not_coprime, "galois exponent not coprime to group exponent");
    GaloisElement w(e, k);
    std::vector<size_t> perm(irreducibles.size());
    for (size_t i = 0; i < irreducibles.size(); ++i) {
        // sigma(chi)(g) = sigma(chi(g)); find the matching irreducible
        bool found = false;
        for (size_t j = 0; j < irreducibles.size(); ++j) {
            bool match = true;
            for (size_t c = 0; c < classes.count() && match; ++c) {
                match = galois_apply(w, irreducibles[i].values[c]) == irreducibles[j].values[c];
            }
            if (match) {
                perm[i] = j;
                found = true;
                break;
            }
        }
        require(found, errc::supplied_table_invalid,
                "character table not stable under the Galois action");
    }
    return perm;
}

int CharacterTable::frobenius_schur(size_t irr) const {
    const auto& g = *group;
    CyclotomicNumber sum(0);
    for (int x = 0; x < g.order(); ++x) {
        int sq = g.mul(x, x);
        sum += irreducibles[irr].values[classes.class_of[sq]];
    }
    auto q = sum.to_rational();
    require(q.has_value(), errc::internal, "FS sum not rational");
    Rat v = *q / Rat(g.order());
    require(v == -1 || v == 0 || v == 1, errc::not_irreducible,
            "Frobenius-Schur indicator outside {-1,0,1}");
    return static_cast<int>(v.get_num().get_si());
}

VirtualCharacter CharacterTable::virtual_char(std::vector<long> coeffs) const {
    require(coeffs.size() == irreducibles.size(), errc::internal, "coefficient count mismatch");
    return VirtualCharacter{shared_from_this(), std::move(coeffs)};
}

VirtualCharacter CharacterTable::irreducible_char(size_t irr) const {
    std::vector<long> c(irreducibles.size(), 0);
    c[irr] = 1;
    return virtual_char(std::move(c));
}

VirtualCharacter CharacterTable::regular_char() const {
    std::vector<long> c(irreducibles.size());
    for (size_t i = 0; i < irreducibles.size(); ++i) c[i] = irreducibles[i].degree;
    return virtual_char(std::move(c));
}

VirtualCharacter CharacterTable::trivial_char() const { return irreducible_char(trivial_); }

void CharacterTable::finalize() {
    const auto& g = *group;
    size_t r = classes.count();
    require(irreducibles.size() == r, errc::supplied_table_invalid,
            "number of characters must equal number of classes");

    // locate trivial character
    bool found_trivial = false;
    for (size_t i = 0; i < r; ++i) {
        bool all_one = true;
        for (size_t c = 0; c < r && all_one; ++c)
            all_one = irreducibles[i].values[c] == CyclotomicNumber(1);
        if (all_one) {
            trivial_ = i;
            found_trivial = true;
            break;
        }
    }
    require(found_trivial, errc::supplied_table_invalid, "trivial character missing");

    // degrees: positive integers; sum of squares = |G|
    Rat degree_sq_sum(0);
    for (auto& chi : irreducibles) {
        auto d = chi.values[classes.class_of[g.identity()]].to_rational();
        require(d.has_value() && d->get_den() == 1 && *d > 0, errc::supplied_table_invalid,
                "character degree not a positive integer");
        chi.degree = static_cast<long>(d->get_num().get_si());
        degree_sq_sum += *d * *d;
    }
    require(degree_sq_sum == Rat(g.order()), errc::supplied_table_invalid,
            "sum of squared degrees differs from group order");

    // exact row orthogonality
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b) {
            CyclotomicNumber acc(0);
            for (size_t c = 0; c < r; ++c) {
                CyclotomicNumber contribution =
                    irreducibles[a].values[c] * conjugate(irreducibles[b].values[c]);
                acc += CyclotomicNumber(Rat(static_cast<long>(classes.classes[c].size()))) *
                       contribution;
            }
            CyclotomicNumber expect(a == b ? Rat(g.order()) : Rat(0));
            require(acc == expect, errc::supplied_table_invalid,
                    "character table fails exact row orthogonality");
        }

    // algebraic integrality of values (power basis of a cyclotomic field is
    // an integral basis, so integrality = integer coefficients)
    for (const auto& chi : irreducibles)
        for (const auto& v : chi.values)
            for (const auto& coeff : v.coeffs())
                require(coeff.get_den() == 1, errc::supplied_table_invalid,
                        "character value is not an algebraic integer");

    // Galois stability: chi(g)^omega = chi(g^k)
    long e = exponent();
    for (long k : coprime_residues(e)) {
        GaloisElement w(e, k);
        for (const auto& chi : irreducibles)
            for (size_t c = 0; c < r; ++c) {
                int rep = classes.representatives[c];
                int powc = classes.class_of[g.power(rep, k)];
                require(galois_apply(w, chi.values[c]) == chi.values[powc],
                        errc::supplied_table_invalid,
                        "character values not Galois-stable against the power map");
            }
    }

    // conjugate pairing
    conj_partner_.assign(r, r);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < r; ++j) {
            bool match = true;
            for (size_t c = 0; c < r && match; ++c)
                match = conjugate(irreducibles[i].values[c]) == irreducibles[j].values[c];
            if (match) {
                conj_partner_[i] = j;
                break;
            }
        }
        require(conj_partner_[i] < r, errc::supplied_table_invalid, "conjugate character missing");
    }
}

namespace {

std::vector<Character> dixon_characters(const FiniteGroup& g, const ConjClassData& classes) {
    size_t r = classes.count();
    long e = g.exponent();

    // deterministic prime: smallest l = 1 mod exponent with l > 2*sqrt(|G|)*exponent
    double bound = 2.0 * std::sqrt(static_cast<double>(g.order())) * static_cast<double>(e);
    uint64_t l = static_cast<uint64_t>(e) + 1;
    while (l <= bound || (l - 1) % static_cast<uint64_t>(e) != 0 || !is_prime(l)) ++l;
    Fp fp{l};

    // class structure constants: N_i[j][k] = #{x in C_i : x * rep_j-ish ...}
    // a_{ijk} = #{(x,y) in C_i x C_j : xy = rep_k}
    // a_{ijk} = #{(x,y) in C_i x C_j : xy = rep_k}; the omega vectors are
    // common eigenvectors of the matrices (a_{ijk})_{jk}
    std::vector<FpMatrix> mats(r, FpMatrix(r, std::vector<uint64_t>(r, 0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            for (int x : classes.classes[i])
                for (int y : classes.classes[j]) {
                    int z = g.mul(x, y);
                    size_t k = static_cast<size_t>(classes.class_of[z]);
                    if (classes.representatives[k] == z) mats[i][j][k] = fp.add(mats[i][j][k], 1);
                }

    // common eigenvectors: split spaces matrix by matrix
    std::vector<std::vector<std::vector<uint64_t>>> spaces;
    {
        std::vector<std::vector<uint64_t>> full;
        for (size_t i = 0; i < r; ++i) {
            std::vector<uint64_t> v(r, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (size_t i = 0; i < r; ++i) {
        std::vector<std::vector<std::vector<uint64_t>>> next;
        for (auto& space : spaces) {
            if (space.size() == 1) {
                next.push_back(std::move(space));
                continue;
            }
            size_t before = 0;
            for (uint64_t lam = 0; lam < l && before < space.size(); ++lam) {
                auto kern = split_eigenspace(fp, mats[i], lam, space);
                if (!kern.empty()) {
                    before += kern.size();
                    next.push_back(std::move(kern));
                }
            }
            require(before == space.size(), errc::internal, "eigenspace split lost dimensions");
        }
        spaces = std::move(next);
    }
    require(spaces.size() == r, errc::internal, "Dixon: wrong number of common eigenspaces");
    for (const auto& s : spaces)
        require(s.size() == 1, errc::internal, "Dixon: eigenspace not one-dimensional");

    size_t id_class = static_cast<size_t>(classes.class_of[g.identity()]);

    // omega vectors, normalized so the identity-class coordinate is 1
    std::vector<std::vector<uint64_t>> omegas;
    for (auto& s : spaces) {
        auto v = s[0];
        require(v[id_class] != 0, errc::internal, "Dixon: eigenvector vanishes at identity class");
        uint64_t scale = fp.inv(v[id_class]);
        for (auto& x : v) x = fp.mul(x, scale);
        omegas.push_back(std::move(v));
    }

    // degrees from 1/chi(1)^2 = sum_i omega_i omega_{i*} / (|C_i| |G|)
    uint64_t order_inv = fp.inv(g.order() % l);
    std::vector<uint64_t> degrees_mod(r);
    std::vector<long> degrees(r);
    for (size_t t = 0; t < r; ++t) {
        uint64_t acc = 0;
        for (size_t i = 0; i < r; ++i) {
            uint64_t term = fp.mul(omegas[t][i], omegas[t][classes.inverse_class[i]]);
            term = fp.mul(term, fp.inv(classes.classes[i].size() % l));
            acc = fp.add(acc, term);
        }
        acc = fp.mul(acc, order_inv);  // = 1/chi(1)^2 mod l
        uint64_t d2 = fp.inv(acc);
        long deg = -1;
        for (long cand = 1; cand * cand <= g.order(); ++cand)
            if (fp.mul(cand % l, cand % l) == d2) {
                deg = cand;
                break;
            }
        require(deg > 0, errc::internal, "Dixon: degree recovery failed");
        degrees[t] = deg;
        degrees_mod[t] = static_cast<uint64_t>(deg) % l;
    }

    // character values mod l: chi(g_i) = deg * omega_i / |C_i|
    std::vector<std::vector<uint64_t>> chi_mod(r, std::vector<uint64_t>(r));
    for (size_t t = 0; t < r; ++t)
        for (size_t i = 0; i < r; ++i)
            chi_mod[t][i] = fp.mul(fp.mul(degrees_mod[t], omegas[t][i]),
                                   fp.inv(classes.classes[i].size() % l));

    // lift to cyclotomic integers: chi(g) = sum_u n_u zeta_e^u with
    // n_u = e^{-1} sum_s chi_mod(g^s) w^{-su}, w a fixed e-th root mod l
    uint64_t w = fp.pow(smallest_primitive_root(fp), (l - 1) / static_cast<uint64_t>(e));
    uint64_t e_inv = fp.inv(static_cast<uint64_t>(e) % l);
    std::vector<Character> chars(r);
    for (size_t t = 0; t < r; ++t) {
        chars[t].values.resize(r);
        chars[t].degree = degrees[t];
        for (size_t i = 0; i < r; ++i) {
            int rep = classes.representatives[i];
            std::vector<Rat> raw(static_cast<size_t>(e), Rat(0));
            for (long u = 0; u < e; ++u) {
                uint64_t acc = 0;
                for (long s = 0; s < e; ++s) {
                    size_t cls = static_cast<size_t>(classes.class_of[g.power(rep, s)]);
                    uint64_t neg_exp = static_cast<uint64_t>((e - (s * u) % e) % e);
                    acc = fp.add(acc, fp.mul(chi_mod[t][cls], fp.pow(w, neg_exp)));
                }
                acc = fp.mul(acc, e_inv);
                // n_u is a small nonnegative integer
                require(acc <= static_cast<uint64_t>(g.order()), errc::internal,
                        "Dixon lift coefficient out of range");
                raw[static_cast<size_t>(u)] = Rat(static_cast<long>(acc));
            }
            chars[t].values[i] = CyclotomicNumber::from_coeffs(e, std::move(raw));
        }
    }
    return chars;
}

} // namespace

TablePtr character_table(std::shared_ptr<const FiniteGroup> g,
                         std::optional<std::vector<Character>> supplied) {
    auto table = std::make_shared<CharacterTable>();
    table->group = g;
    table->classes = conjugacy_classes(*g);

    if (supplied) {
        table->irreducibles = std::move(*supplied);
    } else {
        table->irreducibles = dixon_characters(*g, table->classes);
        // canonical order: trivial first, then by (degree, lexicographic values)
        size_t r = table->classes.count();
        std::vector<size_t> order(r);
        std::iota(order.begin(), order.end(), 0);
        auto is_trivial = [&](size_t i) {
            for (size_t c = 0; c < r; ++c)
                if (table->irreducibles[i].values[c] != CyclotomicNumber(1)) return false;
            return true;
        };
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            bool ta = is_trivial(a), tb = is_trivial(b);
            if (ta != tb) return ta;
            if (table->irreducibles[a].degree != table->irreducibles[b].degree)
                return table->irreducibles[a].degree < table->irreducibles[b].degree;
            for (size_t c = 0; c < r; ++c) {
                if (!(table->irreducibles[a].values[c] == table->irreducibles[b].values[c]))
                    return value_less(table->irreducibles[a].values[c],
                                      table->irreducibles[b].values[c]);
            }
            return false;
        });
        std::vector<Character> sorted;
        for (size_t i : order) sorted.push_back(std::move(table->irreducibles[i]));
        table->irreducibles = std::move(sorted);
    }

    table->reps.assign(table->irreducibles.size(), std::nullopt);
    table->finalize();
    return table;
}

Rat inner_product_exact(const VirtualCharacter& a, const VirtualCharacter& b) {
    require(a.table == b.table, errc::group_mismatch, "inner product across different groups");
    const auto& t = *a.table;
    CyclotomicNumber acc(0);
    for (size_t c = 0; c < t.classes.count(); ++c) {
        CyclotomicNumber bv = b.value_at_class(t.classes.inverse_class[c]);
        acc += CyclotomicNumber(Rat(static_cast<long>(t.classes.classes[c].size()))) *
               a.value_at_class(c) * bv;
    }
    auto q = acc.to_rational();
    require(q.has_value(), errc::internal, "inner product not rational");
    Rat out = *q / Rat(t.group->order());
    out.canonicalize();
    return out;
}

long inner_product(const VirtualCharacter& a, const VirtualCharacter& b) {
    Rat q = inner_product_exact(a, b);
    require(q.get_den() == 1, errc::internal, "inner product not integral");
    return static_cast<long>(q.get_num().get_si());
}

std::vector<SymplecticGenerator> symplectic_generators(const TablePtr& table) {
    std::vector<SymplecticGenerator> out;
    size_t r = table->size();
    for (size_t i = 0; i < r; ++i) {
        int fs = table->frobenius_schur(i);
        if (fs == -1) {
            SymplecticGenerator g{table->irreducible_char(i),
                                  SymplecticGenerator::Kind::quaternionic, i,
                                  "chi" + std::to_string(i)};
            out.push_back(std::move(g));
        } else if (fs == 0) {
            size_t j = table->conjugate_index(i);
            if (i < j) {
                auto vc = table->irreducible_char(i);
                vc += table->irreducible_char(j);
                SymplecticGenerator g{std::move(vc), SymplecticGenerator::Kind::conjugate_pair, i,
                                      "chi" + std::to_string(i) + "+chi" + std::to_string(j)};
                out.push_back(std::move(g));
            }
        } else {
            SymplecticGenerator g{table->irreducible_char(i) * 2,
                                  SymplecticGenerator::Kind::doubled_orthogonal, i,
                                  "2*chi" + std::to_string(i)};
            out.push_back(std::move(g));
        }
    }
    return out;
}

VirtualCharacter restrict_char(const VirtualCharacter& psi, const Subgroup& h,
                               const TablePtr& sub_table) {
    // values of psi on subgroup classes, decomposed in the subgroup table
    size_t rs = sub_table->classes.count();
    std::vector<long> coeffs(sub_table->size(), 0);
    for (size_t j = 0; j < sub_table->size(); ++j) {
        CyclotomicNumber acc(0);
        for (size_t c = 0; c < rs; ++c) {
            int local_rep = sub_table->classes.representatives[c];
            int parent_elt = h.to_parent[local_rep];
            CyclotomicNumber val = psi.value_at_element(parent_elt);
            // (psi|_H, chi_j) = |H|^{-1} sum_h psi(h) chi_j(h^{-1})
            int inv_local = sub_table->group->inv(local_rep);
            acc += CyclotomicNumber(Rat(static_cast<long>(sub_table->classes.classes[c].size()))) *
                   val * sub_table->irreducibles[j].values[sub_table->classes.class_of[inv_local]];
        }
        auto q = acc.to_rational();
        require(q.has_value(), errc::internal, "restriction multiplicity not rational");
        Rat m = *q / Rat(sub_table->group->order());
        require(m.get_den() == 1, errc::internal, "restriction multiplicity not integral");
        coeffs[j] = static_cast<long>(m.get_num().get_si());
    }
    return sub_table->virtual_char(std::move(coeffs));
}

VirtualCharacter induce(const Subgroup& h, const TablePtr& sub_table,
                        const VirtualCharacter& psi_h, const TablePtr& parent_table) {
    require(psi_h.table == sub_table, errc::group_mismatch, "inducing from a different table");
    const auto& gp = *parent_table->group;
    size_t r = parent_table->classes.count();
    // induced values: Ind(psi)(g) = |H|^{-1} sum_{x in G, x^{-1} g x in H} psi(x^{-1} g x)
    std::vector<CyclotomicNumber> values(r, CyclotomicNumber(0));
    for (size_t c = 0; c < r; ++c) {
        int g0 = parent_table->classes.representatives[c];
        CyclotomicNumber acc(0);
        for (int x = 0; x < gp.order(); ++x) {
            int y = gp.conj(gp.inv(x), g0);
            auto it = h.to_local.find(y);
            if (it == h.to_local.end()) continue;
            acc += psi_h.value_at_element(it->second);
        }
        Rat scale = rat(1, sub_table->group->order());
        values[c] = CyclotomicNumber(scale) * acc;
    }
    // decompose in parent irreducibles
    std::vector<long> coeffs(parent_table->size(), 0);
    for (size_t j = 0; j < parent_table->size(); ++j) {
        CyclotomicNumber acc(0);
        for (size_t c = 0; c < r; ++c) {
            int rep = parent_table->classes.representatives[c];
            int inv = gp.inv(rep);
            acc += CyclotomicNumber(Rat(static_cast<long>(parent_table->classes.classes[c].size()))) *
                   values[c] * parent_table->irreducibles[j].values[parent_table->classes.class_of[inv]];
        }
        auto q = acc.to_rational();
        require(q.has_value(), errc::internal, "induction multiplicity not rational");
        Rat m = *q / Rat(gp.order());
        require(m.get_den() == 1, errc::internal, "induction multiplicity not integral");
        coeffs[j] = static_cast<long>(m.get_num().get_si());
    }
    return parent_table->virtual_char(std::move(coeffs));
}

VirtualCharacter augmentation_character(const TablePtr& sub_table) {
    auto reg = sub_table->regular_char();
    auto triv = sub_table->trivial_char();
    return reg - triv;
}

CyclotomicNumber det_character(const IrreducibleRep& rep, int g) {
    return det(rep.matrices[g]);
}

void validate_rep(const CharacterTable& table, size_t irr, const IrreducibleRep& rep) {
    const auto& g = *table.group;
    require(static_cast<long>(rep.matrices.size()) == g.order(), errc::descriptor_invalid,
            "representation must supply one matrix per element");
    require(rep.dim == table.irreducibles[irr].degree, errc::descriptor_invalid,
            "representation dimension disagrees with character degree");
    for (int a = 0; a < g.order(); ++a) {
        require(rep.matrices[a].rows() == static_cast<size_t>(rep.dim) &&
                    rep.matrices[a].cols() == static_cast<size_t>(rep.dim),
                errc::descriptor_invalid, "representation matrix has wrong shape");
        CyclotomicNumber tr(0);
        for (long i = 0; i < rep.dim; ++i) tr += rep.matrices[a](i, i);
        require(tr == table.value(irr, a), errc::descriptor_invalid,
                "representation trace disagrees with character value");
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            require(rep.matrices[a] * rep.matrices[b] == rep.matrices[g.mul(a, b)],
                    errc::descriptor_invalid, "representation is not multiplicative");
}

std::vector<IrreducibleRep> abelian_reps(const CharacterTable& table) {
    require(table.group->is_abelian(), errc::descriptor_invalid,
            "automatic representations exist only for abelian groups");
    std::vector<IrreducibleRep> out(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        IrreducibleRep rep;
        rep.dim = 1;
        rep.matrices.resize(table.group->order());
        for (int g = 0; g < table.group->order(); ++g) {
            CycMatrix m(1, 1);
            m(0, 0) = table.value(i, g);
            rep.matrices[g] = std::move(m);
        }
        out[i] = std::move(rep);
    }
    return out;
}

} // namespace tamearith

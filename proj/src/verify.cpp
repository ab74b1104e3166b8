#include "tamearith/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "tamearith/parallel.hpp"

namespace tamearith {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs one named check, catching library errors into a failure record.
void run_check(SuiteResult& suite, const std::string& name,
               const std::function<std::string()>& body) {
    auto start = Clock::now();
    CheckResult out;
    out.name = name;
    try {
        out.detail = body();
        out.pass = true;
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = e.what();
    }
    out.seconds = since(start);
    suite.checks.push_back(std::move(out));
}

bool arch_close(const ArchValue& a, const ArchValue& b, double tol) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    if (a.exact_sq && b.exact_sq) return *a.exact_sq == *b.exact_sq;
    double x = a.iv.midpoint(), y = b.iv.midpoint();
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

std::vector<int> cyclic_subgroup(const FiniteGroup& g, int x) {
    std::vector<int> elems;
    int y = g.identity();
    do {
        elems.push_back(y);
        y = g.mul(y, x);
    } while (y != g.identity());
    return elems;
}

GroupRingElem random_elem(std::mt19937_64& rng, const FiniteGroup& g, long lo, long hi) {
    std::uniform_int_distribution<long> coeff(lo, hi);
    GroupRingElem e = group_ring_zero(g);
    for (int h = 0; h < g.order(); ++h) e[h] = Rat(coeff(rng));
    return e;
}

} // namespace

std::vector<GroupBundle> corpus_groups(const std::string& corpus) {
    std::vector<GroupBundle> out;
    for (const char* name : {"c2", "c3", "c4", "c2xc2", "s3", "d4", "q8", "c6"})
        out.push_back(load_group_file(corpus + "/groups/" + name + ".json"));
    return out;
}

std::vector<TameFieldDescriptor> corpus_fields(const std::string& corpus) {
    std::vector<TameFieldDescriptor> out;
    for (const char* name : {"qzeta5", "qzeta7", "qzeta8", "s3_x3_x_1", "q8_5_29"})
        out.push_back(load_field_file(corpus + "/fields/" + std::string(name) + ".json", corpus));
    return out;
}

UnitPair random_gl_zg(std::mt19937_64& rng, const FiniteGroup& g, size_t d, int factors) {
    UnitPair out{GroupRingMatrix::identity(d, g), GroupRingMatrix::identity(d, g)};
    if (d == 0) return out;
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<size_t> pick(0, d - 1);
    std::uniform_int_distribution<int> elt(0, static_cast<int>(g.order()) - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int f = 0; f < factors; ++f) {
        GroupRingMatrix step = GroupRingMatrix::identity(d, g);
        GroupRingMatrix step_inv = GroupRingMatrix::identity(d, g);
        if (d >= 2 && kind(rng) != 0) {
            // elementary: row_i += eta row_j
            size_t i = pick(rng), j = pick(rng);
            if (i == j) j = (j + 1) % d;
            GroupRingElem eta = group_ring_zero(g);
            eta[elt(rng)] = Rat(coeff(rng));
            step(i, j) = eta;
            step_inv(i, j) = gr_scale(eta, Rat(-1));
        } else {
            // signed monomial: row_i *= +- h
            size_t i = pick(rng);
            int h = elt(rng);
            Rat s = sign(rng) ? Rat(1) : Rat(-1);
            step(i, i) = group_ring_of(g, h, s);
            step_inv(i, i) = group_ring_of(g, g.inv(h), Rat(1) / s);
        }
        // accumulate in the module-map composition so that m_inv is the
        // matrix of the inverse map
        out.m = grm_compose(g, out.m, step);
        out.m_inv = grm_compose(g, step_inv, out.m_inv);
    }
    return out;
}

UnitPair random_gl_zpg(std::mt19937_64& rng, const FiniteGroup& g, size_t d, unsigned long p) {
    // base-change semantics: a product of elementary, signed monomial and
    // p-unit scalar factors in the ordinary matrix algebra
    UnitPair out{GroupRingMatrix::identity(d, g), GroupRingMatrix::identity(d, g)};
    if (d == 0) return out;
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<size_t> pick(0, d - 1);
    std::uniform_int_distribution<int> elt(0, static_cast<int>(g.order()) - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int f = 0; f < 4; ++f) {
        GroupRingMatrix step = GroupRingMatrix::identity(d, g);
        GroupRingMatrix step_inv = GroupRingMatrix::identity(d, g);
        if (d >= 2 && kind(rng) != 0) {
            size_t i = pick(rng), j = pick(rng);
            if (i == j) j = (j + 1) % d;
            GroupRingElem eta = group_ring_zero(g);
            eta[elt(rng)] = Rat(coeff(rng));
            step(i, j) = eta;
            step_inv(i, j) = gr_scale(eta, Rat(-1));
        } else {
            size_t i = pick(rng);
            int h = elt(rng);
            step(i, i) = group_ring_of(g, h, Rat(1));
            step_inv(i, i) = group_ring_of(g, g.inv(h), Rat(1));
        }
        out.m = grm_mul(g, out.m, step);
        out.m_inv = grm_mul(g, step_inv, out.m_inv);
    }
    std::uniform_int_distribution<long> us(1, 6);
    long u = us(rng);
    while (std::gcd(static_cast<unsigned long>(u), p) != 1ul) ++u;
    size_t i = pick(rng);
    GroupRingMatrix step = GroupRingMatrix::identity(d, g);
    GroupRingMatrix step_inv = GroupRingMatrix::identity(d, g);
    step(i, i) = gr_scale(group_ring_unit(g), Rat(u));
    step_inv(i, i) = gr_scale(group_ring_unit(g), rat(1, u));
    out.m = grm_mul(g, out.m, step);
    out.m_inv = grm_mul(g, step_inv, out.m_inv);
    return out;
}

GroupRingMatrix random_gl_qg(std::mt19937_64& rng, const GroupBundle& bundle, size_t d) {
    const auto& g = *bundle.group;
    for (int attempt = 0; attempt < 64; ++attempt) {
        GroupRingMatrix m(d, d, g);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) m(i, j) = random_elem(rng, g, -2, 2);
        try {
            det_of_unit(m, *bundle.table, bundle.reps);
            return m;
        } catch (const error&) {
            continue;
        }
    }
    fail(errc::internal, "no invertible random matrix found");
}

FormMatrix random_invariant_form(std::mt19937_64& rng, const FiniteGroup& g, long rank) {
    long n = g.order();
    size_t dim = static_cast<size_t>(rank) * n;
    // K = average over G of R(h)^T (L^T L + t I) R(h): rational, G-invariant,
    // positive definite
    std::uniform_int_distribution<long> coeff(-1, 1);
    RatMatrix l(dim, dim, Rat(0));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) l(i, j) = Rat(coeff(rng));
    RatMatrix base(dim, dim, Rat(0));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            Rat acc(0);
            for (size_t k = 0; k < dim; ++k) acc += l(k, i) * l(k, j);
            base(i, j) = acc;
        }
        base(i, i) += Rat(2);
    }
    auto index_of = [&](long j, int h) { return static_cast<size_t>(j) * n + h; };
    FormMatrix out;
    out.exact = true;
    out.c = CycMatrix(dim, dim, CyclotomicNumber(0));
    for (long j = 0; j < rank; ++j)
        for (long j2 = 0; j2 < rank; ++j2)
            for (int g1 = 0; g1 < n; ++g1)
                for (int g2 = 0; g2 < n; ++g2) {
                    Rat acc(0);
                    for (int h = 0; h < n; ++h)
                        acc += base(index_of(j, g.mul(h, g1)), index_of(j2, g.mul(h, g2)));
                    acc /= Rat(n);
                    out.c(index_of(j, g1), index_of(j2, g2)) = CyclotomicNumber(acc);
                }
    return out;
}

ComplexFixture random_complex(std::mt19937_64& rng, const GroupBundle& bundle) {
    const auto& g = *bundle.group;
    // staircase: ranks (r0, r1, r2) with boundary ranks k0: D0 = U1 J0 U0,
    // D1 = U2 J1 U1^{-1}, J1 J0 = 0 via disjoint blocks
    std::uniform_int_distribution<long> rk(1, 2);
    long k0 = rk(rng) % 2 + 0;       // 0 or 1
    long h1 = rk(rng) % 2;           // extra kernel dimension in degree 1
    long k1 = rk(rng) % 2;           // rank of the second boundary
    long r0 = k0 + rk(rng) % 2 + 1;  // k0 plus some cohomology
    long r1 = k0 + h1 + k1;
    long r2 = k1 + rk(rng) % 2;
    if (r1 == 0) {
        r1 = 1;
        h1 = 1;
    }
    ComplexFixture out;
    out.complex.group = bundle.group;
    out.complex.lo = 0;
    out.complex.ranks = {r0, r1, r2};
    GroupRingMatrix j0(static_cast<size_t>(r1), static_cast<size_t>(r0), g);
    for (long t = 0; t < k0; ++t) j0(static_cast<size_t>(t), static_cast<size_t>(t)) = group_ring_unit(g);
    GroupRingMatrix j1(static_cast<size_t>(r2), static_cast<size_t>(r1), g);
    for (long t = 0; t < k1; ++t)
        j1(static_cast<size_t>(t), static_cast<size_t>(k0 + h1 + t)) = group_ring_unit(g);
    auto u0 = random_gl_zg(rng, g, static_cast<size_t>(r0));
    auto u1 = random_gl_zg(rng, g, static_cast<size_t>(r1));
    auto u2 = random_gl_zg(rng, g, static_cast<size_t>(r2));
    out.complex.boundaries.push_back(grm_compose(g, u1.m, grm_compose(g, j0, u0.m)));
    out.complex.boundaries.push_back(grm_compose(g, u2.m, grm_compose(g, j1, u1.m_inv)));
    out.complex.validate();
    for (long r : out.complex.ranks)
        out.forms.forms.push_back(random_invariant_form(rng, g, r));
    return out;
}

QuasiIsoFixture random_quasi_iso_pair(std::mt19937_64& rng, const GroupBundle& bundle) {
    const auto& g = *bundle.group;
    QuasiIsoFixture out;
    ComplexFixture base = random_complex(rng, bundle);
    out.d_forms = base.forms;
    out.d = hermitian_to_metrised(base.complex, base.forms, bundle.table, bundle.reps);

    // P_i = U_i (D_i + A_i) with A the acyclic two-term identity complex in
    // degrees (1, 2); alpha = projection after U^{-1}
    long a_rank = 1;
    PerfectComplex p;
    p.group = bundle.group;
    p.lo = base.complex.lo;
    p.ranks = base.complex.ranks;
    p.ranks[1] += a_rank;
    p.ranks[2] += a_rank;
    std::vector<UnitPair> twists;
    for (long r : p.ranks) twists.push_back(random_gl_zg(rng, g, static_cast<size_t>(r)));

    auto embed_block = [&](const GroupRingMatrix& dmat, size_t rows, size_t cols,
                           bool acyclic_link, size_t d_rows, size_t d_cols) {
        GroupRingMatrix b(rows, cols, g);
        for (size_t r = 0; r < d_rows; ++r)
            for (size_t c = 0; c < d_cols; ++c) b(r, c) = dmat(r, c);
        if (acyclic_link) b(rows - 1, cols - 1) = group_ring_unit(g);
        return b;
    };
    // boundary 0: (d1 + a) x d0: no acyclic link yet (A starts in degree 1)
    GroupRingMatrix b0 = embed_block(base.complex.boundaries[0], static_cast<size_t>(p.ranks[1]),
                                     static_cast<size_t>(p.ranks[0]), false,
                                     base.complex.boundaries[0].rows,
                                     base.complex.boundaries[0].cols);
    GroupRingMatrix b1 = embed_block(base.complex.boundaries[1], static_cast<size_t>(p.ranks[2]),
                                     static_cast<size_t>(p.ranks[1]), true,
                                     base.complex.boundaries[1].rows,
                                     base.complex.boundaries[1].cols);
    p.boundaries.push_back(grm_compose(g, twists[1].m, grm_compose(g, b0, twists[0].m_inv)));
    p.boundaries.push_back(grm_compose(g, twists[2].m, grm_compose(g, b1, twists[1].m_inv)));
    p.validate();
    out.p = p;

    for (size_t i = 0; i < 3; ++i) {
        size_t d_rank = static_cast<size_t>(base.complex.ranks[i]);
        GroupRingMatrix proj(d_rank, static_cast<size_t>(p.ranks[i]), g);
        for (size_t r = 0; r < d_rank; ++r) proj(r, r) = group_ring_unit(g);
        out.alpha.push_back(grm_compose(g, proj, twists[i].m_inv));
    }
    return out;
}

Int snf_abs_det(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    require(n > 0 && m[0].size() == n, errc::internal, "SNF oracle expects a square matrix");
    Int det(1);
    for (size_t c = 0; c < n; ++c) {
        // find a nonzero pivot in the lower-right block
        size_t pr = c, pc = c;
        bool found = false;
        for (size_t i = c; i < n && !found; ++i)
            for (size_t j = c; j < n && !found; ++j)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) return Int(0);
        std::swap(m[pr], m[c]);
        for (size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][c]);
        // clear row and column by the euclidean algorithm
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = c + 1; i < n; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[c][c];
                for (size_t j = c; j < n; ++j) m[i][j] -= q * m[c][j];
                if (m[i][c] != 0) {
                    std::swap(m[i], m[c]);
                    dirty = true;
                }
            }
            for (size_t j = c + 1; j < n; ++j) {
                if (m[c][j] == 0) continue;
                Int q = m[c][j] / m[c][c];
                for (size_t i = c; i < n; ++i) m[i][j] -= q * m[i][c];
                if (m[c][j] != 0) {
                    for (size_t i = 0; i < n; ++i) std::swap(m[i][j], m[i][c]);
                    dirty = true;
                }
            }
        }
        det *= m[c][c];
    }
    return abs(det);
}

namespace {

// ---------------------------------------------------------------- suites

SuiteResult suite_cyclo(const VerifyOptions& opt) {
    SuiteResult out{"cyclo", {}};
    run_check(out, "embedding containment and ring laws on random pairs", [&] {
        std::mt19937_64 rng(opt.seed * 7919 + 1);
        std::uniform_int_distribution<long> num(-6, 6);
        std::uniform_int_distribution<long> den(1, 4);
        long checked = 0;
        for (long n : {3L, 4L, 5L, 7L, 8L, 12L}) {
            for (int iter = 0; iter < 1000; ++iter) {
                std::vector<Rat> ca(euler_phi(n)), cb(euler_phi(n));
                for (auto& c : ca) c = rat(num(rng), den(rng));
                for (auto& c : cb) c = rat(num(rng), den(rng));
                auto a = CyclotomicNumber::from_coeffs(n, ca);
                auto b = CyclotomicNumber::from_coeffs(n, cb);
                require(overlap(embed(a + b), embed(a) + embed(b)), errc::internal,
                        "containment failed");
                require(conjugate(conjugate(a)) == a, errc::internal, "conjugation involution");
                if (!a.is_zero() && !b.is_zero())
                    require(norm_to_Q(a * b) == norm_to_Q(a) * norm_to_Q(b), errc::internal,
                            "norm multiplicativity");
                long k = coprime_residues(n)[static_cast<size_t>(iter) %
                                             coprime_residues(n).size()];
                GaloisElement w(n, k);
                require(galois_apply(w, a * b) == galois_apply(w, a) * galois_apply(w, b),
                        errc::internal, "galois ring homomorphism");
                require(galois_apply(w, a + b) == galois_apply(w, a) + galois_apply(w, b),
                        errc::internal, "galois additivity");
                ++checked;
            }
            // composing all automorphisms reproduces the norm
            std::vector<Rat> cc(euler_phi(n));
            for (auto& c : cc) c = rat(num(rng), den(rng));
            auto a = CyclotomicNumber::from_coeffs(n, cc);
            CyclotomicNumber prod(1);
            for (long k : coprime_residues(n)) prod *= galois_apply(GaloisElement(n, k), a);
            require(a.is_zero() || prod == CyclotomicNumber(norm_to_Q(a)), errc::internal,
                    "conjugate product is not the norm");
        }
        return std::to_string(checked) + " random pairs over six conductors";
    });
    return out;
}

SuiteResult suite_groupchar(const VerifyOptions& opt) {
    SuiteResult out{"groupchar", {}};
    auto groups = corpus_groups(opt.corpus);
    run_check(out, "exact orthogonality and degree identities", [&] {
        for (const auto& b : groups) {
            size_t r = b.table->size();
            for (size_t x = 0; x < r; ++x)
                for (size_t y = 0; y < r; ++y) {
                    CyclotomicNumber acc(0);
                    for (size_t c = 0; c < r; ++c)
                        acc += CyclotomicNumber(
                                   Rat(static_cast<long>(b.table->classes.classes[c].size()))) *
                               b.table->irreducibles[x].values[c] *
                               conjugate(b.table->irreducibles[y].values[c]);
                    require(acc == CyclotomicNumber(x == y ? Rat(b.group->order()) : Rat(0)),
                            errc::internal, "orthogonality failed for " + b.name);
                }
            long sum = 0;
            for (const auto& chi : b.table->irreducibles) sum += chi.degree * chi.degree;
            require(sum == b.group->order(), errc::internal, "degree identity failed");
        }
        return std::to_string(groups.size()) + " groups";
    });
    run_check(out, "Frobenius-Schur indicators in {-1,0,1}", [&] {
        int count = 0;
        for (const auto& b : groups)
            for (size_t i = 0; i < b.table->size(); ++i) {
                int fs = b.table->frobenius_schur(i);
                require(fs >= -1 && fs <= 1, errc::internal, "FS out of range");
                ++count;
            }
        return std::to_string(count) + " irreducibles";
    });
    run_check(out, "Frobenius reciprocity on random triples", [&] {
        std::mt19937_64 rng(opt.seed * 104729 + 2);
        long checked = 0;
        for (const auto& b : groups) {
            // random cyclic subgroups; 100 triples per group
            std::uniform_int_distribution<int> elt(0, static_cast<int>(b.group->order()) - 1);
            std::uniform_int_distribution<long> coeff(-3, 3);
            for (int iter = 0; iter < 100; ++iter) {
                auto sub = make_subgroup(b.group, cyclic_subgroup(*b.group, elt(rng)), "H");
                auto sub_table = character_table(std::shared_ptr<const FiniteGroup>(sub.group));
                std::vector<long> a(sub_table->size()), c(b.table->size());
                for (auto& x : a) x = coeff(rng);
                for (auto& x : c) x = coeff(rng);
                auto theta = sub_table->virtual_char(a);
                auto psi = b.table->virtual_char(c);
                require(inner_product(induce(sub, sub_table, theta, b.table), psi) ==
                            inner_product(theta, restrict_char(psi, sub, sub_table)),
                        errc::internal, "reciprocity failed for " + b.name);
                ++checked;
            }
        }
        return std::to_string(checked) + " triples";
    });
    run_check(out, "symplectic generators pair evenly with cyclic inertia", [&] {
        long checked = 0;
        for (const auto& b : groups) {
            auto gens = symplectic_generators(b.table);
            for (int x = 0; x < b.group->order(); ++x) {
                auto sub = make_subgroup(b.group, cyclic_subgroup(*b.group, x), "I");
                auto sub_table = character_table(std::shared_ptr<const FiniteGroup>(sub.group));
                auto u = augmentation_character(sub_table);
                for (const auto& gen : gens) {
                    long pairing =
                        inner_product(restrict_char(gen.character, sub, sub_table), u);
                    require(pairing % 2 == 0, errc::internal, "odd inertia pairing");
                    ++checked;
                }
            }
        }
        return std::to_string(checked) + " pairings";
    });
    return out;
}

SuiteResult suite_classrep(const VerifyOptions& opt) {
    SuiteResult out{"classrep", {}};
    auto groups = corpus_groups(opt.corpus);
    run_check(out, "abelian group law on representatives", [&] {
        std::mt19937_64 rng(opt.seed * 31 + 3);
        std::uniform_int_distribution<long> num(1, 5);
        const auto& b = groups[2];  // C4
        long checked = 0;
        for (int iter = 0; iter < 60; ++iter) {
            auto mk = [&]() {
                ArithClassRep r = ArithClassRep::identity(b.table);
                for (unsigned long p : {2ul, 3ul, 5ul}) {
                    if (rng() % 2) continue;
                    r.fin.support.insert(p);
                    std::vector<CyclotomicNumber> vals;
                    for (size_t i = 0; i < b.table->size(); ++i)
                        vals.push_back(CyclotomicNumber(rat(num(rng), num(rng))));
                    r.fin.values[p] = std::move(vals);
                }
                for (auto& a : r.arch.values) a = ArchValue::from_rat_abs(rat(num(rng), num(rng)));
                return r;
            };
            auto x = mk(), y = mk(), z = mk();
            auto lhs = mul(mul(x, y), z);
            auto rhs = mul(x, mul(y, z));
            for (unsigned long p : lhs.fin.support)
                for (size_t i = 0; i < b.table->size(); ++i)
                    require(lhs.fin.at(p, i) == rhs.fin.at(p, i), errc::internal,
                            "associativity failed");
            auto e = mul(x, inv(x));
            for (unsigned long p : e.fin.support)
                for (size_t i = 0; i < b.table->size(); ++i)
                    require(e.fin.at(p, i) == CyclotomicNumber(1), errc::internal,
                            "inverse failed");
            auto t1 = tilde(mul(x, y));
            auto t2 = mul(tilde(x), tilde(y));
            for (unsigned long p : t1.fin.support)
                for (size_t i = 0; i < b.table->size(); ++i)
                    require(t1.fin.at(p, i) == t2.fin.at(p, i), errc::internal,
                            "tilde is not a homomorphism");
            ++checked;
        }
        return std::to_string(checked) + " random triples";
    });
    run_check(out, "Det outputs are Galois equivariant", [&] {
        std::mt19937_64 rng(opt.seed * 17 + 4);
        long checked = 0;
        for (const auto& b : groups) {
            for (int iter = 0; iter < 4; ++iter) {
                auto x = random_gl_qg(rng, b, 2);
                auto dets = det_of_unit(x, *b.table, b.reps);
                long e = b.group->exponent();
                for (long k : coprime_residues(e)) {
                    auto perm = b.table->galois_permutation(k);
                    GaloisElement w(e, k);
                    for (size_t i = 0; i < b.table->size(); ++i)
                        require(dets[perm[i]] == galois_apply(w, dets[i]), errc::internal,
                                "Det is not Galois equivariant for " + b.name);
                }
                ++checked;
            }
        }
        return std::to_string(checked) + " random units across the corpus";
    });
    run_check(out, "pfaffian exponent additivity", [&] {
        auto fields = corpus_fields(opt.corpus);
        long checked = 0;
        for (const auto& f : fields) {
            auto gens = symplectic_generators(f.table);
            for (size_t r = 0; r < f.ram.size(); ++r)
                for (const auto& g1 : gens)
                    for (const auto& g2 : gens) {
                        auto sum = g1.character + g2.character;
                        require(pfaffian_at(f, r, sum) ==
                                    pfaffian_at(f, r, g1.character) *
                                        pfaffian_at(f, r, g2.character),
                                errc::internal, "pfaffian not additive");
                        ++checked;
                    }
        }
        return std::to_string(checked) + " generator pairs";
    });
    run_check(out, "degree map is a homomorphism with rational squares", [&] {
        auto trivial = character_table(std::make_shared<FiniteGroup>(FiniteGroup::cyclic(1)));
        std::mt19937_64 rng(opt.seed * 11 + 5);
        std::uniform_int_distribution<long> num(1, 9);
        for (int iter = 0; iter < 100; ++iter) {
            auto mk = [&]() {
                ArithClassRep r = ArithClassRep::identity(trivial);
                for (unsigned long p : {2ul, 3ul, 5ul})
                    if (rng() % 2) {
                        r.fin.support.insert(p);
                        r.fin.values[p] = {CyclotomicNumber(rat(num(rng), num(rng)))};
                    }
                r.arch.values[0] = ArchValue::from_rat_abs(rat(num(rng), num(rng)));
                return r;
            };
            auto x = mk(), y = mk();
            auto gx = degree_map_trivialG(x), gy = degree_map_trivialG(y);
            auto gxy = degree_map_trivialG(mul(x, y));
            require(gx.exact && gy.exact && gxy.exact, errc::internal, "gamma not exact");
            require(*gxy.exact == *gx.exact * *gy.exact, errc::internal,
                    "gamma not multiplicative");
            require(square_rationality(x) == *gx.exact * *gx.exact, errc::internal,
                    "square rationality mismatch");
        }
        return "100 random trivial-group classes";
    });
    return out;
}

SuiteResult suite_metcomplex(const VerifyOptions& opt) {
    SuiteResult out{"metcomplex", {}};
    auto groups = corpus_groups(opt.corpus);
    run_check(out, "base-change well-definedness (local and global)", [&] {
        std::mt19937_64 rng(opt.seed * 13 + 6);
        long checked = 0;
        for (const auto& b : groups) {
            auto fixture = random_complex(rng, b);
            auto m = hermitian_to_metrised(fixture.complex, fixture.forms, b.table, b.reps);
            auto base_cls = arithmetic_class_std(m, b.table, b.reps);
            size_t nirr = b.table->size();
            for (int iter = 0; iter < 8; ++iter) {
                // local perturbation at p: class projections unchanged
                unsigned long p = (iter % 2) ? 3ul : 5ul;
                std::map<unsigned long, std::vector<GroupRingMatrix>> p_bases;
                std::vector<GroupRingMatrix> mats;
                std::vector<std::vector<CyclotomicNumber>> zdets;
                for (long r : fixture.complex.ranks) {
                    auto z = random_gl_zpg(rng, *b.group, static_cast<size_t>(r), p);
                    zdets.push_back(det_of_unit(z.m, *b.table, b.reps));
                    mats.push_back(std::move(z.m));
                }
                p_bases[p] = mats;
                std::vector<GroupRingMatrix> q_bases;
                for (long r : fixture.complex.ranks)
                    q_bases.push_back(GroupRingMatrix::identity(static_cast<size_t>(r), *b.group));
                auto cls = arithmetic_class(m, b.table, b.reps, q_bases, p_bases);
                // archimedean coordinates unchanged
                for (size_t i = 0; i < nirr; ++i)
                    require(arch_close(cls.arch.values[i], base_cls.arch.values[i], opt.tol),
                            errc::internal, "archimedean coordinate moved under local change");
                // finite quotient at p factors exactly as Det of the unit
                for (size_t i = 0; i < nirr; ++i) {
                    CyclotomicNumber expt(1);
                    for (size_t t = 0; t < mats.size(); ++t) {
                        int s = ((fixture.complex.lo + static_cast<long>(t)) % 2 + 2) % 2 == 0
                                    ? 1
                                    : -1;
                        expt *= pow_cyc(zdets[t][i], -s);
                    }
                    require(cls.fin.at(p, i) == expt * base_cls.fin.at(p, i), errc::internal,
                            "finite quotient is not Det of the base change");
                }
                // trivial-coordinate content is invariant
                require(content_trivial_coordinate(cls) ==
                            content_trivial_coordinate(base_cls),
                        errc::internal, "content of the trivial coordinate moved");
                ++checked;
            }
            for (int iter = 0; iter < 4; ++iter) {
                // global perturbation: the quotient is Det(eta) x |Det(eta)|
                std::vector<GroupRingMatrix> q_bases;
                std::vector<std::vector<CyclotomicNumber>> edets;
                for (long r : fixture.complex.ranks) {
                    auto eta = random_gl_qg(rng, b, static_cast<size_t>(r));
                    edets.push_back(det_of_unit(eta, *b.table, b.reps));
                    q_bases.push_back(std::move(eta));
                }
                auto cls = arithmetic_class(m, b.table, b.reps, q_bases, {});
                for (size_t i = 0; i < nirr; ++i) {
                    CyclotomicNumber expt(1);
                    for (size_t t = 0; t < edets.size(); ++t) {
                        int s = ((fixture.complex.lo + static_cast<long>(t)) % 2 + 2) % 2 == 0
                                    ? 1
                                    : -1;
                        expt *= pow_cyc(edets[t][i], s);
                    }
                    // finite coordinate at every supported prime equals the
                    // diagonal Det value
                    for (unsigned long p : cls.fin.support)
                        require(cls.fin.at(p, i) == expt * base_cls.fin.at(p, i),
                                errc::internal, "diagonal Det mismatch");
                    // archimedean coordinate moved by |Det|
                    auto expect = base_cls.arch.values[i].times(arch_abs(expt));
                    require(arch_close(cls.arch.values[i], expect, opt.tol), errc::internal,
                            "|Det| drift in the archimedean coordinate");
                }
                ++checked;
            }
        }
        return std::to_string(checked) + " perturbations across the corpus";
    });
    run_check(out, "W-basis independence of the archimedean coordinate", [&] {
        std::mt19937_64 rng(opt.seed * 41 + 7);
        long checked = 0;
        for (const auto& b : groups) {
            if (b.group->is_abelian()) continue;
            auto fixture = random_complex(rng, b);
            auto m = hermitian_to_metrised(fixture.complex, fixture.forms, b.table, b.reps);
            auto cls = arithmetic_class_std(m, b.table, b.reps);
            // conjugate each representation by a random monomial unitary
            auto reps2 = b.reps;
            for (size_t i = 0; i < reps2.size(); ++i) {
                long dim = reps2[i].dim;
                if (dim == 1) continue;
                CycMatrix s(static_cast<size_t>(dim), static_cast<size_t>(dim),
                            CyclotomicNumber(0));
                std::vector<size_t> perm(static_cast<size_t>(dim));
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                long e = b.group->exponent();
                for (long r = 0; r < dim; ++r)
                    s(static_cast<size_t>(r), perm[static_cast<size_t>(r)]) =
                        CyclotomicNumber::zeta(e, static_cast<long>(rng() % e));
                CycMatrix s_inv = conjugate_transpose(s);
                for (auto& matg : reps2[i].matrices) matg = s * matg * s_inv;
                validate_rep(*b.table, i, reps2[i]);
            }
            auto m2 = hermitian_to_metrised(fixture.complex, fixture.forms, b.table, reps2);
            auto cls2 = arithmetic_class_std(m2, b.table, reps2);
            for (size_t i = 0; i < b.table->size(); ++i)
                require(arch_close(cls.arch.values[i], cls2.arch.values[i], opt.tol),
                        errc::internal, "archimedean coordinate depends on the W-basis");
            ++checked;
        }
        return std::to_string(checked) + " rebased corpora";
    });
    run_check(out, "quasi-isomorphism invariance with transported metrics", [&] {
        std::mt19937_64 rng(opt.seed * 43 + 8);
        long checked = 0;
        for (const auto& b : groups) {
            for (int iter = 0; iter < 3; ++iter) {
                auto fix = random_quasi_iso_pair(rng, b);
                auto metrics_p =
                    quasi_iso_transport(fix.p, fix.d.complex, fix.alpha, fix.d.metrics,
                                        b.table, b.reps);
                MetrisedComplex mp{fix.p, metrics_p};
                auto cls_p = arithmetic_class_std(mp, b.table, b.reps);
                auto cls_d = arithmetic_class_std(fix.d, b.table, b.reps);
                for (size_t i = 0; i < b.table->size(); ++i)
                    require(arch_close(cls_p.arch.values[i], cls_d.arch.values[i], opt.tol),
                            errc::internal, "classes differ across a quasi-isomorphism");
                for (unsigned long p : cls_p.fin.support)
                    for (size_t i = 0; i < b.table->size(); ++i)
                        require(cls_p.fin.at(p, i) == cls_d.fin.at(p, i), errc::internal,
                                "finite coordinates differ across a quasi-isomorphism");
                ++checked;
            }
        }
        return std::to_string(checked) + " transported pairs";
    });
    run_check(out, "km scale equals |det| of the boundary (SNF oracle)", [&] {
        std::mt19937_64 rng(opt.seed * 47 + 9);
        auto trivial = character_table(std::make_shared<FiniteGroup>(FiniteGroup::cyclic(1)));
        auto treps = abelian_reps(*trivial);
        std::uniform_int_distribution<long> entry(-4, 4);
        long checked = 0;
        for (int iter = 0; iter < 40; ++iter) {
            size_t r = 1 + static_cast<size_t>(iter % 3);
            PerfectComplex p;
            p.group = trivial->group;
            p.lo = 0;
            p.ranks = {static_cast<long>(r), static_cast<long>(r)};
            GroupRingMatrix bmat(r, r, *trivial->group);
            std::vector<std::vector<Int>> zmat(r, std::vector<Int>(r));
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) {
                    long v = entry(rng);
                    bmat(i, j) = GroupRingElem{Rat(v)};
                    zmat[i][j] = v;
                }
            Int oracle = snf_abs_det(zmat);
            if (oracle == 0) continue;
            p.boundaries = {bmat};
            auto km = km_isomorphism(p, treps[0]);
            auto val = arch_abs(km.kappa);
            require(val.exact && *val.exact == Rat(oracle), errc::internal,
                    "km scale disagrees with the SNF determinant");
            ++checked;
        }
        return std::to_string(checked) + " integer boundaries";
    });
    run_check(out, "isometry of the isotypic identification", [&] {
        long checked = 0;
        for (const auto& b : corpus_groups(opt.corpus)) {
            for (size_t i = 0; i < b.table->size(); ++i)
                checked += lemma_2_3_isometry_check(*b.group, *b.table, i, b.reps[i], 20,
                                                    opt.seed * 53 + i, 1e-12);
        }
        return std::to_string(checked) + " random vectors";
    });
    run_check(out, "parallel evaluation matches the serial reference", [&] {
        std::mt19937_64 rng(opt.seed * 59 + 10);
        auto b = corpus_groups(opt.corpus)[6];  // Q8
        auto fixture = random_complex(rng, b);
        bool was = parallel::enabled();
        parallel::set_enabled(false);
        auto m1 = hermitian_to_metrised(fixture.complex, fixture.forms, b.table, b.reps);
        auto c1 = arithmetic_class_std(m1, b.table, b.reps);
        parallel::set_enabled(true);
        auto m2 = hermitian_to_metrised(fixture.complex, fixture.forms, b.table, b.reps);
        auto c2 = arithmetic_class_std(m2, b.table, b.reps);
        parallel::set_enabled(was);
        for (size_t i = 0; i < b.table->size(); ++i) {
            require(c1.arch.values[i].iv.midpoint() == c2.arch.values[i].iv.midpoint(),
                    errc::internal, "parallel and serial results differ");
            bool sq = c1.arch.values[i].exact_sq.has_value() ==
                      c2.arch.values[i].exact_sq.has_value();
            require(sq, errc::internal, "exactness flags differ between modes");
        }
        return "bitwise identical coordinates";
    });
    return out;
}

SuiteResult suite_tamefield(const VerifyOptions& opt) {
    SuiteResult out{"tamefield", {}};
    auto fields = corpus_fields(opt.corpus);
    run_check(out, "Galois action formula on every corpus field", [&] {
        long checked = 0;
        for (const auto& f : fields)
            for (int g = 0; g < f.group->order(); ++g)
                for (size_t irr = 0; irr < f.table->size(); ++irr) {
                    require(galois_action_check(f, irr, g).ok, errc::internal,
                            "Galois action formula failed for " + f.name);
                    ++checked;
                }
        return std::to_string(checked) + " (element, character) pairs";
    });
    run_check(out, "resolvent multiplicativity", [&] {
        long checked = 0;
        for (const auto& f : fields) {
            auto gens = symplectic_generators(f.table);
            for (const auto& gen : gens) {
                ComplexInterval lhs = resolvent_virtual(f, gen.character);
                ComplexInterval rhs(RealInterval(1.0), RealInterval(0.0));
                for (size_t i = 0; i < gen.character.coeffs.size(); ++i)
                    for (long c = 0; c < gen.character.coeffs[i]; ++c)
                        rhs = rhs * resolvent(f, i);
                require(overlap(lhs, rhs), errc::internal, "resolvent product mismatch");
                ++checked;
            }
        }
        return std::to_string(checked) + " symplectic generators";
    });
    run_check(out, "gauss sum identities for q in {5, 7, 13, 25}", [&] {
        long checked = 0;
        for (auto [p, q] : std::vector<std::pair<unsigned long, unsigned long>>{
                 {5, 5}, {7, 7}, {13, 13}, {5, 25}}) {
            long e = static_cast<long>(q) - 1;
            for (long k = 1; k < e; ++k) {
                auto tau = tame_gauss_sum(p, q, e, k);
                require(tau.value * conjugate(tau.value) ==
                            CyclotomicNumber(Rat(static_cast<long>(q))),
                        errc::internal, "|tau|^2 != q");
                auto tau_bar = tame_gauss_sum(p, q, e, (e - k) % e);
                CyclotomicNumber chi_m1 =
                    CyclotomicNumber::zeta(e, k * ((static_cast<long>(q) - 1) / 2));
                require(tau.value * tau_bar.value ==
                            chi_m1 * CyclotomicNumber(Rat(static_cast<long>(q))),
                        errc::internal, "tau tau-bar != chi(-1) q");
                ++checked;
            }
        }
        return std::to_string(checked) + " characters";
    });
    run_check(out, "pfaffian magnitude identity", [&] {
        long checked = 0;
        for (const auto& f : fields) {
            auto gens = symplectic_generators(f.table);
            for (size_t r = 0; r < f.ram.size(); ++r)
                for (const auto& gen : gens) {
                    Rat pf = pfaffian_at(f, r, gen.character);
                    long cond = artin_conductor_p(f, gen.character, f.ram[r].p);
                    require(pf * pf == pow_rat(Rat(static_cast<long>(f.ram[r].p)), cond),
                            errc::internal, "Pf^2 != p^cond for " + f.name);
                    ++checked;
                }
        }
        return std::to_string(checked) + " (prime, generator) pairs";
    });
    run_check(out, "resolvent signs equal the archimedean epsilon signs", [&] {
        long checked = 0;
        for (const auto& f : fields) {
            auto res = theorem_5_10_check(f);
            require(res.all_match, errc::internal, "sign mismatch for " + f.name);
            checked += static_cast<long>(res.eps_signs.size());
        }
        return std::to_string(checked) + " symplectic generators";
    });
    return out;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"groupchar", "cyclo", "classrep", "metcomplex", "tamefield"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "cyclo") return suite_cyclo(opt);
    if (name == "groupchar") return suite_groupchar(opt);
    if (name == "classrep") return suite_classrep(opt);
    if (name == "metcomplex") return suite_metcomplex(opt);
    if (name == "tamefield") return suite_tamefield(opt);
    fail(errc::descriptor_invalid, "unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    return out;
}

} // namespace tamearith

#include "tamearith/classrep.hpp"

#include <algorithm>
#include <numeric>

namespace tamearith {

const CyclotomicNumber& IdelicCharMap::at(unsigned long p, size_t irr) const {
    static const CyclotomicNumber one(1);
    auto it = values.find(p);
    if (it == values.end()) return one;
    return it->second[irr];
}

void ArchValue::normalize() {
    if (exact && !exact_sq) {
        exact_sq = *exact * *exact;
        exact_sq->canonicalize();
    }
    if (!exact && exact_sq) {
        if (auto root = exact_sqrt(*exact_sq)) {
            exact = *root;
            iv = RealInterval::exact(*exact);
        }
    }
}

ArchValue ArchValue::one() {
    ArchValue out;
    out.iv = RealInterval(1.0);
    out.exact = Rat(1);
    out.exact_sq = Rat(1);
    return out;
}

ArchValue ArchValue::from_rat_abs(const Rat& q) {
    require(q != 0, errc::division_by_zero, "archimedean value must be nonzero");
    Rat a = q < 0 ? Rat(-q) : q;
    a.canonicalize();
    ArchValue out;
    out.iv = RealInterval::exact(a);
    out.exact = a;
    out.normalize();
    return out;
}

ArchValue ArchValue::from_rat_sq(const Rat& square) {
    require(square > 0, errc::division_by_zero, "archimedean square must be positive");
    ArchValue out;
    out.iv = sqrt(RealInterval::exact(square));
    out.exact_sq = square;
    out.normalize();
    return out;
}

ArchValue ArchValue::from_interval(RealInterval v) {
    ArchValue out;
    out.iv = v;
    return out;
}

ArchValue ArchValue::times(const ArchValue& o) const {
    ArchValue out;
    out.iv = iv * o.iv;
    if (exact && o.exact) {
        out.exact = *exact * *o.exact;
        out.exact->canonicalize();
    }
    if (exact_sq && o.exact_sq) {
        out.exact_sq = *exact_sq * *o.exact_sq;
        out.exact_sq->canonicalize();
    }
    out.normalize();
    if (out.exact) out.iv = RealInterval::exact(*out.exact);
    return out;
}

ArchValue ArchValue::inverse() const {
    ArchValue out;
    out.iv = RealInterval(1.0) / iv;
    if (exact) out.exact = Rat(1) / *exact;
    if (exact_sq) out.exact_sq = Rat(1) / *exact_sq;
    out.normalize();
    return out;
}

ArchValue ArchValue::pow(long e) const {
    ArchValue out;
    out.iv = pow_int(iv, e);
    if (exact) out.exact = pow_rat(*exact, e);
    if (exact_sq) out.exact_sq = pow_rat(*exact_sq, e);
    out.normalize();
    return out;
}

ArithClassRep ArithClassRep::identity(const TablePtr& table) {
    ArithClassRep out;
    out.table = table;
    out.arch.values.assign(table->size(), ArchValue::one());
    return out;
}

CyclotomicNumber ArithClassRep::fin_value(unsigned long p, size_t irr) const {
    return fin.at(p, irr);
}

ArithClassRep mul(const ArithClassRep& a, const ArithClassRep& b) {
    require(a.table == b.table, errc::group_mismatch, "class representatives over different groups");
    ArithClassRep out;
    out.table = a.table;
    out.fin.support = a.fin.support;
    for (unsigned long p : b.fin.support) out.fin.support.insert(p);
    size_t n = a.table->size();
    for (unsigned long p : out.fin.support) {
        std::vector<CyclotomicNumber> vals(n, CyclotomicNumber(1));
        for (size_t i = 0; i < n; ++i) vals[i] = a.fin.at(p, i) * b.fin.at(p, i);
        out.fin.values[p] = std::move(vals);
    }
    out.arch.values.resize(n);
    for (size_t i = 0; i < n; ++i) out.arch.values[i] = a.arch.values[i].times(b.arch.values[i]);
    return out;
}

ArithClassRep inv(const ArithClassRep& a) {
    ArithClassRep out;
    out.table = a.table;
    out.fin.support = a.fin.support;
    size_t n = a.table->size();
    for (unsigned long p : a.fin.support) {
        std::vector<CyclotomicNumber> vals(n, CyclotomicNumber(1));
        for (size_t i = 0; i < n; ++i) vals[i] = a.fin.at(p, i).inv();
        out.fin.values[p] = std::move(vals);
    }
    out.arch.values.resize(n);
    for (size_t i = 0; i < n; ++i) out.arch.values[i] = a.arch.values[i].inverse();
    return out;
}

ArithClassRep tilde(const ArithClassRep& a) {
    size_t n = a.table->size();
    size_t triv = a.table->trivial_index();
    ArithClassRep out;
    out.table = a.table;
    out.fin.support = a.fin.support;
    for (unsigned long p : a.fin.support) {
        std::vector<CyclotomicNumber> vals(n, CyclotomicNumber(1));
        CyclotomicNumber base = a.fin.at(p, triv);
        CyclotomicNumber base_inv = base.inv();
        for (size_t i = 0; i < n; ++i) {
            long deg = a.table->irreducibles[i].degree;
            vals[i] = a.fin.at(p, i) * pow_cyc(base_inv, deg);
        }
        out.fin.values[p] = std::move(vals);
    }
    out.arch.values.resize(n);
    const ArchValue& base = a.arch.values[triv];
    for (size_t i = 0; i < n; ++i) {
        long deg = a.table->irreducibles[i].degree;
        out.arch.values[i] = a.arch.values[i].times(base.pow(-deg));
    }
    return out;
}

SymplecticRestriction restrict_symplectic(const ArithClassRep& a,
                                          const std::vector<SymplecticGenerator>& gens) {
    SymplecticRestriction out;
    out.generators = gens;
    out.support = a.fin.support;
    out.fin.resize(gens.size());
    out.arch.resize(gens.size());
    for (size_t gidx = 0; gidx < gens.size(); ++gidx) {
        const auto& coeffs = gens[gidx].character.coeffs;
        for (unsigned long p : a.fin.support) {
            CyclotomicNumber v(1);
            for (size_t i = 0; i < coeffs.size(); ++i) {
                if (coeffs[i] == 0) continue;
                v *= pow_cyc(a.fin.at(p, i), coeffs[i]);
            }
            out.fin[gidx][p] = std::move(v);
        }
        ArchValue av = ArchValue::one();
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            av = av.times(a.arch.values[i].pow(coeffs[i]));
        }
        out.arch[gidx] = std::move(av);
    }
    return out;
}

RationalSymplecticClass theta_rational(const SymplecticRestriction& s) {
    // On the visibly-rational normal form the extracted rational is the
    // signed content of the finite part divided by the exact archimedean
    // witness: unit parts away from each supporting prime are integral-unit
    // data and do not move the rational class.
    RationalSymplecticClass out;
    out.values.resize(s.generators.size());
    for (size_t g = 0; g < s.generators.size(); ++g) {
        Rat content(1);
        int sign = 1;
        for (const auto& [p, v] : s.fin[g]) {
            auto q = v.to_rational();
            require(q.has_value(), errc::not_visibly_rational,
                    "finite value at prime " + std::to_string(p) +
                        " is not rational on generator " + s.generators[g].label);
            require(*q != 0, errc::not_visibly_rational, "zero finite value");
            content *= pow_rat(Rat(static_cast<long>(p)), val_p(*q, p));
            if (*q < 0) sign = -sign;
        }
        require(s.arch[g].exact.has_value(), errc::not_visibly_rational,
                "archimedean value has no exact rational witness on generator " +
                    s.generators[g].label);
        Rat theta = Rat(sign) * content / *s.arch[g].exact;
        theta.canonicalize();
        out.values[g] = theta;
    }
    return out;
}

GroupRingElem group_ring_zero(const FiniteGroup& g) { return GroupRingElem(g.order(), Rat(0)); }

GroupRingElem group_ring_unit(const FiniteGroup& g) {
    auto e = group_ring_zero(g);
    e[g.identity()] = Rat(1);
    return e;
}

GroupRingElem group_ring_of(const FiniteGroup& g, int element, const Rat& coeff) {
    auto e = group_ring_zero(g);
    e[element] = coeff;
    return e;
}

GroupRingElem gr_add(const FiniteGroup&, const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

GroupRingElem gr_mul(const FiniteGroup& g, const GroupRingElem& a, const GroupRingElem& b) {
    GroupRingElem out = group_ring_zero(g);
    for (int x = 0; x < g.order(); ++x) {
        if (a[x] == 0) continue;
        for (int y = 0; y < g.order(); ++y) {
            if (b[y] == 0) continue;
            out[g.mul(x, y)] += a[x] * b[y];
        }
    }
    return out;
}

GroupRingElem gr_scale(const GroupRingElem& a, const Rat& c) {
    GroupRingElem out = a;
    for (auto& x : out) x *= c;
    return out;
}

Rat gr_augmentation(const GroupRingElem& a) {
    Rat out(0);
    for (const auto& x : a) out += x;
    out.canonicalize();
    return out;
}

bool gr_p_integral(const GroupRingElem& a, unsigned long p) {
    for (const auto& x : a)
        if (x != 0 && mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) return false;
    return true;
}

GroupRingMatrix GroupRingMatrix::identity(size_t n, const FiniteGroup& g) {
    GroupRingMatrix out(n, n, g);
    for (size_t i = 0; i < n; ++i) out(i, i) = group_ring_unit(g);
    return out;
}

GroupRingMatrix grm_mul(const FiniteGroup& g, const GroupRingMatrix& a, const GroupRingMatrix& b) {
    require(a.cols == b.rows, errc::internal, "group-ring matrix shape mismatch");
    GroupRingMatrix out(a.rows, b.cols, g);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k)
            for (size_t j = 0; j < b.cols; ++j)
                out(i, j) = gr_add(g, out(i, j), gr_mul(g, a(i, k), b(k, j)));
    return out;
}

GroupRingMatrix grm_compose(const FiniteGroup& g, const GroupRingMatrix& a,
                            const GroupRingMatrix& b) {
    require(a.cols == b.rows, errc::internal, "group-ring matrix shape mismatch");
    GroupRingMatrix out(a.rows, b.cols, g);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k)
            for (size_t j = 0; j < b.cols; ++j)
                out(i, j) = gr_add(g, out(i, j), gr_mul(g, b(k, j), a(i, k)));
    return out;
}

GroupRingMatrix grm_transpose(const GroupRingMatrix& a) {
    GroupRingMatrix out;
    out.rows = a.cols;
    out.cols = a.rows;
    out.entries.resize(a.entries.size());
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) out.entries[j * out.cols + i] = a(i, j);
    return out;
}

GroupRingMatrix grm_inverse(const FiniteGroup& g, const GroupRingMatrix& a) {
    require(a.rows == a.cols, errc::singular, "inverse of non-square group-ring matrix");
    size_t d = a.rows;
    size_t n = static_cast<size_t>(g.order());
    // regular representation: left multiplication by the entry on each Q[G]
    // coordinate block; the inverse stays inside M_d(Q[G])
    RatMatrix big(d * n, d * n, Rat(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const auto& x = a(i, j);
            for (int h = 0; h < g.order(); ++h) {
                if (x[h] == 0) continue;
                for (int y = 0; y < g.order(); ++y) {
                    // h*y is the image basis element of y under left mult by h
                    big(i * n + static_cast<size_t>(g.mul(h, y)), j * n + static_cast<size_t>(y)) +=
                        x[h];
                }
            }
        }
    RatMatrix big_inv = inverse(big);
    GroupRingMatrix out(d, d, g);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            GroupRingElem e = group_ring_zero(g);
            for (int h = 0; h < g.order(); ++h)
                e[h] = big_inv(i * n + static_cast<size_t>(h),
                               j * n + static_cast<size_t>(g.identity()));
            out(i, j) = std::move(e);
        }
    // verify: the read-back must reproduce the inverse
    auto prod = grm_mul(g, a, out);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const auto& e = prod(i, j);
            for (int h = 0; h < g.order(); ++h) {
                Rat expect = (i == j && h == g.identity()) ? Rat(1) : Rat(0);
                require(e[h] == expect, errc::internal, "group-ring inverse verification failed");
            }
        }
    return out;
}

bool grm_p_integral(const GroupRingMatrix& a, unsigned long p) {
    for (const auto& e : a.entries)
        if (!gr_p_integral(e, p)) return false;
    return true;
}

GroupRingMatrix grm_compose_inverse(const FiniteGroup& g, const GroupRingMatrix& a) {
    // the composition algebra is the ordinary one over the opposite ring;
    // the element inversion x -> x^{-1} on the group identifies the two
    auto op_map = [&g](const GroupRingMatrix& m) {
        GroupRingMatrix out = m;
        for (auto& e : out.entries) {
            GroupRingElem flipped = group_ring_zero(g);
            for (int h = 0; h < g.order(); ++h) flipped[g.inv(h)] = e[h];
            e = std::move(flipped);
        }
        return out;
    };
    return op_map(grm_inverse(g, op_map(a)));
}

CycMatrix rep_of_elem(const IrreducibleRep& rep, const GroupRingElem& x) {
    size_t m = static_cast<size_t>(rep.dim);
    CycMatrix out(m, m, CyclotomicNumber(0));
    for (size_t h = 0; h < x.size(); ++h) {
        if (x[h] == 0) continue;
        const CycMatrix& t = rep.matrices[h];
        CyclotomicNumber c{x[h]};
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) out(i, j) += c * t(i, j);
    }
    return out;
}

std::vector<CyclotomicNumber> det_values(const GroupRingMatrix& x, const CharacterTable& table,
                                         const std::vector<IrreducibleRep>& reps) {
    require(x.rows == x.cols, errc::internal, "Det of non-square matrix");
    require(reps.size() == table.size(), errc::descriptor_invalid,
            "Det needs a representation for every irreducible");
    std::vector<CyclotomicNumber> out(table.size());
    for (size_t irr = 0; irr < table.size(); ++irr) {
        size_t m = static_cast<size_t>(reps[irr].dim);
        CycMatrix blown(x.rows * m, x.cols * m, CyclotomicNumber(0));
        for (size_t i = 0; i < x.rows; ++i)
            for (size_t j = 0; j < x.cols; ++j) {
                CycMatrix block = rep_of_elem(reps[irr], x(i, j));
                for (size_t bi = 0; bi < m; ++bi)
                    for (size_t bj = 0; bj < m; ++bj) blown(i * m + bi, j * m + bj) = block(bi, bj);
            }
        out[irr] = det(blown);
    }
    return out;
}

std::vector<CyclotomicNumber> det_of_unit(const GroupRingMatrix& x, const CharacterTable& table,
                                          const std::vector<IrreducibleRep>& reps) {
    auto out = det_values(x, table, reps);
    for (size_t i = 0; i < out.size(); ++i)
        require(!out[i].is_zero(), errc::singular,
                "Det value vanishes at irreducible " + std::to_string(i));
    return out;
}

ArithClassRep torsion_class(const TorsionModulePresentation& m, const TablePtr& table,
                            const std::vector<IrreducibleRep>& reps) {
    require(grm_p_integral(m.alpha, m.p), errc::descriptor_invalid,
            "torsion presentation entries must be p-integral");
    auto dets = det_of_unit(m.alpha, *table, reps);
    ArithClassRep out = ArithClassRep::identity(table);
    out.fin.support.insert(m.p);
    out.fin.values[m.p] = std::move(dets);
    return out;
}

Rat pfaffian_p(const TameLocalData& ram, const VirtualCharacter& psi) {
    require(psi.table->group == ram.inertia.parent, errc::group_mismatch,
            "character and inertia data belong to different groups");
    require(ram.inertia.group->exponent() == ram.inertia.group->order(), errc::descriptor_invalid,
            "inertia group must be cyclic");
    require(std::gcd(static_cast<unsigned long>(ram.inertia.group->order()), ram.p) == 1ul,
            errc::descriptor_invalid, "inertia order not coprime to p (wild ramification)");
    auto u = augmentation_character(ram.inertia_table);
    auto res = restrict_char(psi, ram.inertia, ram.inertia_table);
    long pairing = inner_product(res, u);
    require(pairing % 2 == 0, errc::odd_pairing,
            "(psi, Ind u) is odd; the character is not symplectic");
    return pow_rat(rat(-static_cast<long>(ram.p)), pairing / 2);
}

ArchValue delta_K(long k_degree, const Rat& dK_abs, long group_order, long psi_degree) {
    require(dK_abs > 0, errc::descriptor_invalid, "|d_K| must be positive");
    Rat base = pow_rat(Rat(group_order), k_degree) * dK_abs;
    if (psi_degree % 2 == 0) return ArchValue::from_rat_abs(pow_rat(base, psi_degree / 2));
    if (auto root = exact_sqrt(base)) return ArchValue::from_rat_abs(pow_rat(*root, psi_degree));
    RealInterval iv = pow_int(sqrt(RealInterval::exact(base)), psi_degree);
    return ArchValue::from_interval(iv);
}

Rat xi_S(const std::vector<unsigned long>& S, long d, long chiY, long psi_degree) {
    long prod = psi_degree * d * chiY;
    require(prod % 2 == 0, errc::odd_product, "psi(1) * d * chi(Y) must be even");
    Rat out(1);
    for (unsigned long p : S) out *= pow_rat(Rat(static_cast<long>(p)), -prod / 2);
    out.canonicalize();
    return out;
}

Rat content_trivial_coordinate(const ArithClassRep& a) {
    size_t triv = a.table->trivial_index();
    Rat out(1);
    for (unsigned long p : a.fin.support) {
        auto q = a.fin.at(p, triv).to_rational();
        require(q.has_value(), errc::not_visibly_rational,
                "trivial-coordinate value not rational at p=" + std::to_string(p));
        require(*q != 0, errc::not_visibly_rational, "zero finite value");
        out *= pow_rat(Rat(static_cast<long>(p)), val_p(*q, p));
    }
    out.canonicalize();
    return out;
}

ArchValue degree_map_trivialG(const ArithClassRep& a) {
    require(a.table->size() == 1, errc::group_mismatch, "degree map requires the trivial group");
    Rat content = content_trivial_coordinate(a);
    return ArchValue::from_rat_abs(content).times(a.arch.values[0].inverse());
}

Rat square_rationality(const ArithClassRep& a) {
    ArchValue gamma = degree_map_trivialG(a);
    require(gamma.exact.has_value(), errc::not_rational_square,
            "gamma has no exact rational value");
    Rat out = *gamma.exact * *gamma.exact;
    out.canonicalize();
    return out;
}

ArithClassRep ind_from_trivial(const ArithClassRep& a, const TablePtr& target) {
    require(a.table->size() == 1, errc::group_mismatch, "induction source must be trivial group");
    ArithClassRep out = ArithClassRep::identity(target);
    out.fin.support = a.fin.support;
    size_t n = target->size();
    for (unsigned long p : a.fin.support) {
        std::vector<CyclotomicNumber> vals(n, CyclotomicNumber(1));
        CyclotomicNumber base = a.fin.at(p, 0);
        for (size_t i = 0; i < n; ++i) vals[i] = pow_cyc(base, target->irreducibles[i].degree);
        out.fin.values[p] = std::move(vals);
    }
    for (size_t i = 0; i < n; ++i)
        out.arch.values[i] = a.arch.values[0].pow(target->irreducibles[i].degree);
    return out;
}

ArithClassRep project_trivial_coordinate(const ArithClassRep& a, const TablePtr& trivial_table) {
    require(trivial_table->size() == 1, errc::group_mismatch, "target must be the trivial group");
    ArithClassRep out = ArithClassRep::identity(trivial_table);
    size_t triv = a.table->trivial_index();
    out.fin.support = a.fin.support;
    for (unsigned long p : a.fin.support)
        out.fin.values[p] = {a.fin.at(p, triv)};
    out.arch.values[0] = a.arch.values[triv];
    return out;
}

} // namespace tamearith

#include "tamearith/metcomplex.hpp"

#include <algorithm>
#include <random>

#include "tamearith/parallel.hpp"

namespace tamearith {

namespace {

inline int degree_sign(long degree) { return ((degree % 2) + 2) % 2 == 0 ? 1 : -1; }

GroupRingElem gr_bar(const FiniteGroup& g, const GroupRingElem& x) {
    GroupRingElem out = group_ring_zero(g);
    for (int h = 0; h < g.order(); ++h) out[g.inv(h)] = x[h];
    return out;
}

} // namespace

void PerfectComplex::validate() const {
    require(!ranks.empty(), errc::descriptor_invalid, "complex needs at least one term");
    for (long r : ranks)
        require(r >= 0, errc::descriptor_invalid, "negative rank");
    require(boundaries.size() + 1 == ranks.size(), errc::descriptor_invalid,
            "boundary count must be one less than term count");
    for (size_t i = 0; i < boundaries.size(); ++i) {
        const auto& b = boundaries[i];
        require(b.rows == static_cast<size_t>(ranks[i + 1]) &&
                    b.cols == static_cast<size_t>(ranks[i]),
                errc::descriptor_invalid, "boundary shape mismatch");
        for (const auto& e : b.entries)
            for (const auto& c : e)
                require(c.get_den() == 1, errc::descriptor_invalid,
                        "boundary entries must have integer coefficients");
    }
    // d . d = 0 in the module-map composition
    for (size_t i = 0; i + 1 < boundaries.size(); ++i) {
        auto prod = grm_compose(*group, boundaries[i + 1], boundaries[i]);
        for (const auto& e : prod.entries)
            for (const auto& c : e)
                require(c == 0, errc::descriptor_invalid, "d composed with d is nonzero");
    }
}

ComplexInterval FormMatrix::entry_interval(size_t i, size_t j) const {
    if (exact) return embed(c(i, j));
    return iv(i, j);
}

FormMatrix FormMatrix::identity(size_t n) {
    FormMatrix f;
    f.exact = true;
    f.c = CycMatrix::identity(n);
    return f;
}

FormMatrix FormMatrix::scaled_identity(size_t n, const Rat& t) {
    FormMatrix f;
    f.exact = true;
    f.c = CycMatrix(n, n, CyclotomicNumber(0));
    for (size_t i = 0; i < n; ++i) f.c(i, i) = CyclotomicNumber(t);
    return f;
}

FormMatrix standard_form_mu(const FiniteGroup& g, long rank) {
    return FormMatrix::identity(static_cast<size_t>(rank) * g.order());
}

FormMatrix standard_form_nu(const FiniteGroup& g, long rank) {
    return FormMatrix::scaled_identity(static_cast<size_t>(rank) * g.order(), Rat(g.order()));
}

void validate_forms(const PerfectComplex& p, const HermitianFormSpec& spec) {
    require(spec.forms.size() == p.terms(), errc::descriptor_invalid,
            "one hermitian form per term required");
    long n = p.group->order();
    for (size_t t = 0; t < p.terms(); ++t) {
        const auto& f = spec.forms[t];
        size_t dim = static_cast<size_t>(p.ranks[t]) * n;
        require(f.dim() == dim, errc::descriptor_invalid, "form dimension mismatch");
        // hermitian symmetry
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                if (f.exact)
                    require(f.c(i, j) == conjugate(f.c(j, i)), errc::descriptor_invalid,
                            "form is not conjugate-symmetric");
                else
                    require(overlap(f.iv(i, j), conj(f.iv(j, i))), errc::descriptor_invalid,
                            "form is not conjugate-symmetric within certified intervals");
            }
        // G-invariance: k(h x, h y) = k(x, y); basis index is j*n + g
        for (int h = 0; h < n; ++h) {
            for (long j = 0; j < p.ranks[t]; ++j)
                for (long j2 = 0; j2 < p.ranks[t]; ++j2)
                    for (int g1 = 0; g1 < n; ++g1)
                        for (int g2 = 0; g2 < n; ++g2) {
                            size_t a = static_cast<size_t>(j) * n + g1;
                            size_t b = static_cast<size_t>(j2) * n + g2;
                            size_t ha = static_cast<size_t>(j) * n + p.group->mul(h, g1);
                            size_t hb = static_cast<size_t>(j2) * n + p.group->mul(h, g2);
                            if (f.exact)
                                require(f.c(ha, hb) == f.c(a, b), errc::descriptor_invalid,
                                        "form is not G-invariant");
                            else
                                require(overlap(f.iv(ha, hb), f.iv(a, b)),
                                        errc::descriptor_invalid,
                                        "form is not G-invariant within certified intervals");
                        }
        }
        // certified positive definiteness via leading principal minors
        for (size_t k = 1; k <= dim; ++k) {
            Matrix<ComplexInterval> lead(k, k);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) lead(i, j) = f.entry_interval(i, j);
            ComplexInterval d = det_interval(lead);
            require(d.re.strictly_positive(), errc::descriptor_invalid,
                    "form is not certified positive definite");
        }
    }
}

WBasis orthonormal_w_basis(const CharacterTable& table, size_t irr, const IrreducibleRep& rep) {
    const auto& g = *table.group;
    long n = g.order();
    long m = rep.dim;
    // e_{kl} = (m/|G|) sum_g T(g^{-1})_{lk} g, w = e / sqrt(m)
    WBasis out;
    out.m = m;
    out.mats.resize(static_cast<size_t>(m) * m);
    for (long l = 0; l < m; ++l)
        for (long k = 0; k < m; ++k) {
            CycMatrix col(static_cast<size_t>(n), 1, CyclotomicNumber(0));
            for (int h = 0; h < n; ++h)
                col(h, 0) = CyclotomicNumber(rat(m, n)) * rep.matrices[g.inv(h)](l, k);
            out.mats[static_cast<size_t>(l) * m + k] = std::move(col);
        }
    // nu-orthonormality of the scaled elements: nu(e_kl, e_k'l') = m delta delta
    for (size_t a = 0; a < out.mats.size(); ++a)
        for (size_t b = 0; b < out.mats.size(); ++b) {
            CyclotomicNumber acc(0);
            for (int h = 0; h < n; ++h) acc += out.mats[a](h, 0) * conjugate(out.mats[b](h, 0));
            acc *= CyclotomicNumber(Rat(n));
            CyclotomicNumber expect(a == b ? Rat(m) : Rat(0));
            require(acc == expect, errc::precision_insufficient,
                    "matrix-coefficient basis is not nu-orthogonal; supply a unitary "
                    "representation");
        }
    return out;
}

IsotypicSpace isotypic_basis(const PerfectComplex& p, size_t term_idx, size_t irr,
                             const CharacterTable& table, const IrreducibleRep& rep) {
    const auto& g = *p.group;
    long n = g.order();
    long m = rep.dim;
    long d = p.ranks[term_idx];
    WBasis w = orthonormal_w_basis(table, irr, rep);
    IsotypicSpace out;
    out.irr = irr;
    // r(a^{ij})(1 tensor w) = sum_g (g a^{ij}) tensor (g w): the coordinate
    // at ((j', g'), h) is delta_{j j'} (g' w)_h; the 1/sqrt(m) scaling of w
    // is immaterial for a basis
    for (long j = 0; j < d; ++j)
        for (const auto& wvec : w.mats) {
            CycMatrix v(static_cast<size_t>(d) * n, static_cast<size_t>(n),
                        CyclotomicNumber(0));
            for (int gg = 0; gg < n; ++gg) {
                // g w as a coefficient vector: (g w)_{g h} = w_h
                for (int h = 0; h < n; ++h)
                    v(static_cast<size_t>(j) * n + gg, static_cast<size_t>(g.mul(gg, h))) =
                        wvec(h, 0);
            }
            out.vectors.push_back(std::move(v));
        }
    // dimension invariant: d phi(1)^2 independent vectors
    size_t dim = out.vectors.size();
    require(dim == static_cast<size_t>(d) * m * m, errc::internal, "isotypic count mismatch");
    CycMatrix flat(static_cast<size_t>(d) * n * n, dim, CyclotomicNumber(0));
    for (size_t c = 0; c < dim; ++c)
        for (size_t r = 0; r < static_cast<size_t>(d) * n; ++r)
            for (size_t h = 0; h < static_cast<size_t>(n); ++h)
                flat(r * n + h, c) = out.vectors[c](r, h);
    require(rank(flat) == dim, errc::internal, "isotypic basis is not independent");
    return out;
}

CycMatrix blowup_isotypic(const FiniteGroup& g, const GroupRingMatrix& mat,
                          const IrreducibleRep& rep) {
    long m = rep.dim;
    size_t msq = static_cast<size_t>(m) * m;
    CycMatrix out(mat.rows * msq, mat.cols * msq, CyclotomicNumber(0));
    for (size_t t = 0; t < mat.rows; ++t)
        for (size_t j = 0; j < mat.cols; ++j) {
            const GroupRingElem& eta = mat(t, j);
            // left multiplication by conj(eta) acts on the W-basis row index
            // through A(eta) = sum_h eta_h T(h^{-1})
            CycMatrix a(static_cast<size_t>(m), static_cast<size_t>(m), CyclotomicNumber(0));
            bool nonzero = false;
            for (int h = 0; h < g.order(); ++h) {
                if (eta[h] == 0) continue;
                nonzero = true;
                const CycMatrix& tinv = rep.matrices[g.inv(h)];
                for (long r = 0; r < m; ++r)
                    for (long c2 = 0; c2 < m; ++c2)
                        a(r, c2) += CyclotomicNumber(eta[h]) * tinv(r, c2);
            }
            if (!nonzero) continue;
            for (long l = 0; l < m; ++l)
                for (long k = 0; k < m; ++k)
                    for (long k2 = 0; k2 < m; ++k2)
                        out(t * msq + static_cast<size_t>(l) * m + k2,
                            j * msq + static_cast<size_t>(l) * m + k) = a(k2, k);
        }
    return out;
}

KMData km_isomorphism(const PerfectComplex& p, const IrreducibleRep& rep) {
    size_t terms = p.terms();
    long m = rep.dim;
    size_t msq = static_cast<size_t>(m) * m;
    KMData out;
    out.lo = p.lo;
    out.dims.resize(terms);
    for (size_t i = 0; i < terms; ++i) out.dims[i] = p.ranks[i] * static_cast<long>(msq);
    out.boundary.resize(terms > 0 ? terms - 1 : 0);
    for (size_t i = 0; i + 1 < terms; ++i) out.boundary[i] = blowup_isotypic(*p.group, p.boundaries[i], rep);

    out.h_reps.resize(terms);
    out.b_reps.resize(terms);
    out.kappa = CyclotomicNumber(1);

    // pivot columns of each boundary give the complement of the kernel
    std::vector<std::vector<size_t>> pivots(terms);
    for (size_t i = 0; i < terms; ++i) {
        if (i + 1 < terms) {
            CycMatrix e = out.boundary[i];
            pivots[i] = rref(e);
        } else {
            pivots[i] = {};
        }
    }

    for (size_t i = 0; i < terms; ++i) {
        size_t dim = static_cast<size_t>(out.dims[i]);
        // image basis: boundary applied to the previous pivot columns
        CycMatrix b_basis(dim, i == 0 ? 0 : pivots[i - 1].size(), CyclotomicNumber(0));
        if (i > 0) {
            for (size_t c = 0; c < pivots[i - 1].size(); ++c)
                for (size_t r = 0; r < dim; ++r)
                    b_basis(r, c) = out.boundary[i - 1](r, pivots[i - 1][c]);
        }
        // kernel of the outgoing boundary
        CycMatrix z_basis;
        if (i + 1 < terms) {
            z_basis = kernel_basis(out.boundary[i]);
        } else {
            z_basis = CycMatrix::identity(dim);
        }
        // cohomology lifts: extend the image basis inside the kernel
        size_t nb = b_basis.cols(), nz = z_basis.cols();
        CycMatrix combined(dim, nb + nz, CyclotomicNumber(0));
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < nb; ++c) combined(r, c) = b_basis(r, c);
            for (size_t c = 0; c < nz; ++c) combined(r, nb + c) = z_basis(r, c);
        }
        CycMatrix echelon = combined;
        auto piv = rref(echelon);
        std::vector<size_t> h_cols;
        for (size_t c : piv)
            if (c >= nb) h_cols.push_back(c - nb);
        require(piv.size() >= nb, errc::internal, "image basis not independent");
        CycMatrix h_basis(dim, h_cols.size(), CyclotomicNumber(0));
        for (size_t c = 0; c < h_cols.size(); ++c)
            for (size_t r = 0; r < dim; ++r) h_basis(r, c) = z_basis(r, h_cols[c]);

        // complement of the kernel: standard vectors at the pivot columns
        CycMatrix c_basis(dim, pivots[i].size(), CyclotomicNumber(0));
        for (size_t c = 0; c < pivots[i].size(); ++c) c_basis(pivots[i][c], c) = CyclotomicNumber(1);

        require(nb + h_cols.size() + pivots[i].size() == dim, errc::rank_deficiency,
                "splitting does not fill the term");

        // assembled basis determinant: wedge(std) = det(A)^{-1} wedge(assembled)
        CycMatrix assembled(dim, dim, CyclotomicNumber(0));
        for (size_t r = 0; r < dim; ++r) {
            size_t col = 0;
            for (size_t c = 0; c < nb; ++c, ++col) assembled(r, col) = b_basis(r, c);
            for (size_t c = 0; c < h_cols.size(); ++c, ++col) assembled(r, col) = h_basis(r, c);
            for (size_t c = 0; c < pivots[i].size(); ++c, ++col) assembled(r, col) = c_basis(r, c);
        }
        CyclotomicNumber da = dim == 0 ? CyclotomicNumber(1) : det(assembled);
        require(!da.is_zero(), errc::rank_deficiency, "assembled splitting basis is singular");
        int s = degree_sign(p.lo + static_cast<long>(i));
        out.kappa *= pow_cyc(da, -s);

        out.h_reps[i] = std::move(h_basis);
        out.b_reps[i] = std::move(b_basis);
    }
    return out;
}

FormMatrix isotypic_gram(const PerfectComplex& p, size_t term_idx, const FormMatrix& form,
                         const IrreducibleRep& rep) {
    const auto& g = *p.group;
    long n = g.order();
    long m = rep.dim;
    size_t msq = static_cast<size_t>(m) * m;
    long d = p.ranks[term_idx];
    size_t dim = static_cast<size_t>(d) * msq;

    // U(g, g') = T(g')^H T(g)
    std::vector<CycMatrix> u(static_cast<size_t>(n) * n);
    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2)
            u[static_cast<size_t>(g1) * n + g2] =
                conjugate_transpose(rep.matrices[g2]) * rep.matrices[g1];

    FormMatrix out;
    out.exact = form.exact;
    if (form.exact)
        out.c = CycMatrix(dim, dim, CyclotomicNumber(0));
    else
        out.iv = Matrix<ComplexInterval>(dim, dim);

    for (long j = 0; j < d; ++j)
        for (long j2 = 0; j2 < d; ++j2) {
            // accumulate per (k', k) the double group sum of K * U
            CycMatrix acc_c(static_cast<size_t>(m), static_cast<size_t>(m), CyclotomicNumber(0));
            Matrix<ComplexInterval> acc_iv(static_cast<size_t>(m), static_cast<size_t>(m));
            for (int g1 = 0; g1 < n; ++g1)
                for (int g2 = 0; g2 < n; ++g2) {
                    size_t a = static_cast<size_t>(j) * n + g1;
                    size_t b = static_cast<size_t>(j2) * n + g2;
                    const CycMatrix& uu = u[static_cast<size_t>(g1) * n + g2];
                    if (form.exact) {
                        const CyclotomicNumber& kv = form.c(a, b);
                        if (kv.is_zero()) continue;
                        for (long k2 = 0; k2 < m; ++k2)
                            for (long k = 0; k < m; ++k) acc_c(k2, k) += kv * uu(k2, k);
                    } else {
                        ComplexInterval kv = form.iv(a, b);
                        for (long k2 = 0; k2 < m; ++k2)
                            for (long k = 0; k < m; ++k)
                                acc_iv(k2, k) = acc_iv(k2, k) + kv * embed(uu(k2, k));
                    }
                }
            for (long l = 0; l < m; ++l)
                for (long k2 = 0; k2 < m; ++k2)
                    for (long k = 0; k < m; ++k) {
                        size_t row = static_cast<size_t>(j) * msq + static_cast<size_t>(l) * m + k2;
                        size_t col = static_cast<size_t>(j2) * msq + static_cast<size_t>(l) * m + k;
                        if (form.exact)
                            out.c(row, col) = acc_c(k2, k);
                        else
                            out.iv(row, col) = acc_iv(k2, k);
                    }
        }
    return out;
}

ComplexInterval det_interval(Matrix<ComplexInterval> m) {
    require(m.rows() == m.cols(), errc::internal, "interval determinant of non-square matrix");
    size_t n = m.rows();
    ComplexInterval out(RealInterval(1.0), RealInterval(0.0));
    for (size_t c = 0; c < n; ++c) {
        // pivot with largest midpoint magnitude
        size_t best = c;
        double best_mag = -1.0;
        for (size_t r = c; r < n; ++r) {
            double mag = std::abs(m(r, c).re.midpoint()) + std::abs(m(r, c).im.midpoint());
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (best != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
            out = -out;
        }
        ComplexInterval piv = m(c, c);
        RealInterval mag = abs_sq(piv);
        require(!mag.contains_zero(), errc::precision_insufficient,
                "interval pivot straddles zero");
        out = out * piv;
        for (size_t r = c + 1; r < n; ++r) {
            ComplexInterval f = m(r, c) / piv;
            for (size_t j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
        }
    }
    return out;
}

ArchValue arch_abs(const CyclotomicNumber& z) {
    require(!z.is_zero(), errc::division_by_zero, "absolute value of zero");
    CyclotomicNumber norm_sq = z * conjugate(z);
    if (auto q = norm_sq.to_rational()) return ArchValue::from_rat_sq(*q);
    ArchValue out;
    out.iv = abs(embed(z));
    return out;
}

ArchValue arch_root(const ArchValue& v, long r) {
    require(r >= 1, errc::internal, "root order must be positive");
    if (r == 1) return v;
    ArchValue out;
    if (r == 2) {
        out.iv = sqrt(v.iv);
        if (v.exact) {
            out.exact_sq = *v.exact;
            out.normalize();
        }
        return out;
    }
    if (v.exact) {
        // exact r-th root when num and den are perfect r-th powers
        Int num = v.exact->get_num(), den = v.exact->get_den();
        Int rn, rd;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(r)) != 0 &&
            mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(r)) != 0)
            return ArchValue::from_rat_abs(rat(rn, rd));
    }
    // conservative enclosure through double pow
    double lo = std::max(0.0, v.iv.midpoint() - v.iv.rad);
    double hi = v.iv.midpoint() + v.iv.rad;
    double rlo = std::pow(lo, 1.0 / static_cast<double>(r)) * (1.0 - 1e-13);
    double rhi = std::pow(hi, 1.0 / static_cast<double>(r)) * (1.0 + 1e-13);
    out.iv = RealInterval(DD((rlo + rhi) / 2.0), (rhi - rlo) / 2.0);
    return out;
}

namespace {

// metric value of the standard-basis wedge under a Gram matrix: sqrt(det)
ArchValue wedge_norm(const FormMatrix& gram) {
    if (gram.dim() == 0) return ArchValue::one();
    if (gram.exact) {
        CyclotomicNumber d = det(gram.c);
        if (auto q = d.to_rational()) {
            require(*q > 0, errc::precision_insufficient, "Gram determinant not positive");
            return ArchValue::from_rat_sq(*q);
        }
        ComplexInterval iv = embed(d);
        require(iv.re.strictly_positive(), errc::precision_insufficient,
                "Gram determinant not certified positive");
        ArchValue sq;
        sq.iv = iv.re;
        return arch_root(sq, 2);
    }
    ComplexInterval d = det_interval(gram.iv);
    require(d.re.strictly_positive(), errc::precision_insufficient,
            "Gram determinant not certified positive");
    ArchValue sq;
    sq.iv = d.re;
    return arch_root(sq, 2);
}

} // namespace

MetrisedComplex hermitian_to_metrised(const PerfectComplex& p, const HermitianFormSpec& forms,
                                      const TablePtr& table,
                                      const std::vector<IrreducibleRep>& reps) {
    p.validate();
    validate_forms(p, forms);
    MetrisedComplex out;
    out.complex = p;
    out.metrics.resize(table->size());
    // per-character computations are independent
    parallel::parallel_for(table->size(), [&](size_t irr) {
        KMData km = km_isomorphism(p, reps[irr]);
        ArchValue value = ArchValue::one();
        for (size_t i = 0; i < p.terms(); ++i) {
            FormMatrix gram = isotypic_gram(p, i, forms.forms[i], reps[irr]);
            ArchValue nrm = wedge_norm(gram);
            int s = degree_sign(p.lo + static_cast<long>(i));
            value = value.times(s == 1 ? nrm : nrm.inverse());
        }
        // norm on the canonical h-wedge: product of term norms divided by |kappa|
        DetLineMetric metric;
        metric.h_reps = km.h_reps;
        metric.norm = value.times(arch_abs(km.kappa).inverse());
        out.metrics[irr] = std::move(metric);
    });
    return out;
}

ArchValue metric_eval(const DetLineMetric& metric, const std::vector<CycMatrix>& target_h,
                      const KMData& km) {
    require(metric.h_reps.size() == target_h.size(), errc::internal,
            "metric term count mismatch");
    CyclotomicNumber u(1);
    for (size_t i = 0; i < target_h.size(); ++i) {
        size_t hcount = metric.h_reps[i].cols();
        require(target_h[i].cols() == hcount, errc::not_quasi_iso,
                "cohomology dimensions disagree");
        if (hcount == 0) continue;
        size_t dim = metric.h_reps[i].rows();
        size_t bcount = km.b_reps[i].cols();
        CycMatrix sys(dim, hcount + bcount, CyclotomicNumber(0));
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < hcount; ++c) sys(r, c) = metric.h_reps[i](r, c);
            for (size_t c = 0; c < bcount; ++c) sys(r, hcount + c) = km.b_reps[i](r, c);
        }
        CycMatrix sol = solve(sys, target_h[i]);
        CycMatrix change(hcount, hcount, CyclotomicNumber(0));
        for (size_t r = 0; r < hcount; ++r)
            for (size_t c = 0; c < hcount; ++c) change(r, c) = sol(r, c);
        CyclotomicNumber dchg = det(change);
        require(!dchg.is_zero(), errc::not_quasi_iso, "cohomology comparison is singular");
        int s = degree_sign(km.lo + static_cast<long>(i));
        u *= pow_cyc(dchg, s);
    }
    return arch_abs(u).times(metric.norm);
}

namespace {

int degree_sign_for(const PerfectComplex& p, size_t idx) {
    return degree_sign(p.lo + static_cast<long>(idx));
}

} // namespace

ClassContext make_class_context(const PerfectComplex& p, const TablePtr& table,
                                const std::vector<IrreducibleRep>& reps) {
    ClassContext out;
    out.km.resize(table->size());
    parallel::parallel_for(table->size(),
                           [&](size_t irr) { out.km[irr] = km_isomorphism(p, reps[irr]); });
    return out;
}

ArithClassRep arithmetic_class(const MetrisedComplex& m, const TablePtr& table,
                               const std::vector<IrreducibleRep>& reps,
                               const std::vector<GroupRingMatrix>& q_bases,
                               const std::map<unsigned long, std::vector<GroupRingMatrix>>& p_bases,
                               const ClassContext* ctx) {
    const PerfectComplex& p = m.complex;
    p.validate();
    require(q_bases.size() == p.terms(), errc::not_a_basis, "one global basis per term required");
    for (const auto& [prime, mats] : p_bases) {
        (void)prime;
        require(mats.size() == p.terms(), errc::not_a_basis, "one local basis per term required");
    }
    require(reps.size() == table->size(), errc::descriptor_invalid, "missing representations");

    size_t nirr = table->size();
    // Det(A_i) per irreducible; also Q[G]-invertibility check
    std::vector<std::vector<CyclotomicNumber>> det_a(p.terms());
    for (size_t i = 0; i < p.terms(); ++i) {
        require(q_bases[i].rows == static_cast<size_t>(p.ranks[i]) &&
                    q_bases[i].cols == static_cast<size_t>(p.ranks[i]),
                errc::not_a_basis, "global basis matrix shape mismatch");
        try {
            det_a[i] = p.ranks[i] == 0 ? std::vector<CyclotomicNumber>(nirr, CyclotomicNumber(1))
                                       : det_of_unit(q_bases[i], *table, reps);
        } catch (const error& e) {
            if (e.code() == errc::singular)
                fail(errc::not_a_basis, "global basis is not invertible over Q[G]");
            throw;
        }
    }

    // support: declared primes plus primes where some Det(A) fails to be a unit
    std::set<unsigned long> support;
    for (const auto& [prime, mats] : p_bases) {
        (void)mats;
        support.insert(prime);
    }
    std::set<unsigned long> candidates;
    auto add_candidates = [&candidates](const CyclotomicNumber& z) {
        for (unsigned long q : prime_support(norm_to_Q(z))) candidates.insert(q);
        for (const auto& coeff : z.coeffs())
            if (coeff != 0)
                for (unsigned long q : prime_support(Rat(coeff.get_den()))) candidates.insert(q);
    };
    for (size_t i = 0; i < p.terms(); ++i)
        for (size_t irr = 0; irr < nirr; ++irr) {
            add_candidates(det_a[i][irr]);
            add_candidates(det_a[i][irr].inv());
        }
    auto is_p_unit = [](const CyclotomicNumber& z, unsigned long q) {
        return z.p_integral(q) && z.inv().p_integral(q);
    };
    for (unsigned long q : candidates) {
        bool unit_everywhere = true;
        for (size_t i = 0; i < p.terms() && unit_everywhere; ++i)
            for (size_t irr = 0; irr < nirr && unit_everywhere; ++irr)
                unit_everywhere = is_p_unit(det_a[i][irr], q);
        if (!unit_everywhere) support.insert(q);
    }

    ArithClassRep out = ArithClassRep::identity(table);
    out.fin.support = support;

    // finite coordinates
    for (unsigned long prime : support) {
        std::vector<CyclotomicNumber> vals(nirr, CyclotomicNumber(1));
        const std::vector<GroupRingMatrix>* local = nullptr;
        auto it = p_bases.find(prime);
        if (it != p_bases.end()) local = &it->second;
        for (size_t i = 0; i < p.terms(); ++i) {
            std::vector<CyclotomicNumber> det_b(nirr, CyclotomicNumber(1));
            if (local) {
                const GroupRingMatrix& b = (*local)[i];
                require(b.rows == static_cast<size_t>(p.ranks[i]) &&
                            b.cols == static_cast<size_t>(p.ranks[i]),
                        errc::not_a_basis, "local basis matrix shape mismatch");
                require(grm_p_integral(b, prime), errc::not_a_basis,
                        "local basis entries are not p-integral at p=" + std::to_string(prime));
                if (p.ranks[i] > 0) {
                    try {
                        det_b = det_of_unit(b, *table, reps);
                    } catch (const error& e) {
                        if (e.code() == errc::singular)
                            fail(errc::not_a_basis, "local basis singular");
                        throw;
                    }
                    for (const auto& z : det_b)
                        require(is_p_unit(z, prime), errc::not_a_basis,
                                "local basis determinant is not a unit at p=" +
                                    std::to_string(prime));
                }
            }
            int s = degree_sign_for(p, i);
            for (size_t irr = 0; irr < nirr; ++irr) {
                CyclotomicNumber lam = det_a[i][irr] * det_b[irr].inv();
                vals[irr] *= (s == 1) ? lam : lam.inv();
            }
        }
        out.fin.values[prime] = std::move(vals);
    }

    // archimedean coordinates; per-character computations are independent
    parallel::parallel_for(nirr, [&](size_t irr) {
        KMData km = ctx ? ctx->km[irr] : km_isomorphism(p, reps[irr]);
        CyclotomicNumber lambda(1);
        for (size_t i = 0; i < p.terms(); ++i) {
            if (p.ranks[i] == 0) continue;
            // the wedge change of the chosen basis b_j = sum_l A_{jl} a_l has
            // the (module, W-index) layout of the transposed matrix
            CyclotomicNumber dA =
                det(blowup_isotypic(*p.group, grm_transpose(q_bases[i]), reps[irr]));
            require(!dA.is_zero(), errc::not_a_basis, "global basis singular on isotypic block");
            int s = degree_sign_for(p, i);
            lambda *= pow_cyc(dA, s);
        }
        ArchValue inner = metric_eval(m.metrics[irr], km.h_reps, km);
        ArchValue total = arch_abs(lambda * km.kappa).times(inner);
        out.arch.values[irr] = arch_root(total, reps[irr].dim);
    });
    return out;
}

ArithClassRep arithmetic_class_std(const MetrisedComplex& m, const TablePtr& table,
                                   const std::vector<IrreducibleRep>& reps) {
    std::vector<GroupRingMatrix> q_bases;
    for (size_t i = 0; i < m.complex.terms(); ++i)
        q_bases.push_back(GroupRingMatrix::identity(static_cast<size_t>(m.complex.ranks[i]),
                                                    *m.complex.group));
    return arithmetic_class(m, table, reps, q_bases, {});
}

std::vector<DetLineMetric> quasi_iso_transport(const PerfectComplex& c, const PerfectComplex& d,
                                               const std::vector<GroupRingMatrix>& alpha,
                                               const std::vector<DetLineMetric>& d_metrics,
                                               const TablePtr& table,
                                               const std::vector<IrreducibleRep>& reps) {
    require(c.lo == d.lo && c.terms() == d.terms(), errc::not_quasi_iso,
            "transport requires complexes on the same degree range");
    require(alpha.size() == c.terms(), errc::not_quasi_iso, "one map per term required");
    // cochain map check: alpha commutes with boundaries
    for (size_t i = 0; i + 1 < c.terms(); ++i) {
        auto left = grm_compose(*c.group, d.boundaries[i], alpha[i]);
        auto right = grm_compose(*c.group, alpha[i + 1], c.boundaries[i]);
        for (size_t idx = 0; idx < left.entries.size(); ++idx)
            for (size_t h = 0; h < left.entries[idx].size(); ++h)
                require(left.entries[idx][h] == right.entries[idx][h], errc::not_quasi_iso,
                        "alpha is not a cochain map");
    }

    std::vector<DetLineMetric> out(table->size());
    for (size_t irr = 0; irr < table->size(); ++irr) {
        KMData km_c = km_isomorphism(c, reps[irr]);
        KMData km_d = km_isomorphism(d, reps[irr]);
        // image of C's cohomology representatives through alpha, as classes in D
        std::vector<CycMatrix> mapped(c.terms());
        for (size_t i = 0; i < c.terms(); ++i) {
            CycMatrix a = blowup_isotypic(*c.group, alpha[i], reps[irr]);
            require(km_c.h_reps[i].cols() == km_d.h_reps[i].cols(), errc::not_quasi_iso,
                    "cohomology dimensions disagree; not a quasi-isomorphism");
            mapped[i] = a * km_c.h_reps[i];
        }
        // c_phi = d_phi o det(H(alpha)): evaluate d on the mapped wedge
        DetLineMetric metric;
        metric.h_reps = km_c.h_reps;
        metric.norm = metric_eval(d_metrics[irr], mapped, km_d);
        out[irr] = std::move(metric);
    }
    return out;
}

MetrisedComplex direct_sum(const MetrisedComplex& p, const MetrisedComplex& q,
                           const TablePtr& table, const std::vector<IrreducibleRep>& reps) {
    require(p.complex.group == q.complex.group, errc::group_mismatch,
            "direct sum across different groups");
    const auto& g = *p.complex.group;
    long lo = std::min(p.complex.lo, q.complex.lo);
    long hi = std::max(p.complex.hi(), q.complex.hi());
    PerfectComplex sum;
    sum.group = p.complex.group;
    sum.lo = lo;
    sum.ranks.assign(static_cast<size_t>(hi - lo + 1), 0);
    auto rank_of = [&](const PerfectComplex& c, long deg) -> long {
        if (deg < c.lo || deg > c.hi()) return 0;
        return c.ranks[static_cast<size_t>(deg - c.lo)];
    };
    for (long deg = lo; deg <= hi; ++deg)
        sum.ranks[static_cast<size_t>(deg - lo)] = rank_of(p.complex, deg) + rank_of(q.complex, deg);
    sum.boundaries.clear();
    for (long deg = lo; deg < hi; ++deg) {
        long dp = rank_of(p.complex, deg), dq = rank_of(q.complex, deg);
        long ep = rank_of(p.complex, deg + 1), eq = rank_of(q.complex, deg + 1);
        GroupRingMatrix b(static_cast<size_t>(ep + eq), static_cast<size_t>(dp + dq), g);
        if (dp > 0 && ep > 0 && deg >= p.complex.lo && deg < p.complex.hi()) {
            const auto& bp = p.complex.boundaries[static_cast<size_t>(deg - p.complex.lo)];
            for (long r = 0; r < ep; ++r)
                for (long c2 = 0; c2 < dp; ++c2)
                    b(static_cast<size_t>(r), static_cast<size_t>(c2)) =
                        bp(static_cast<size_t>(r), static_cast<size_t>(c2));
        }
        if (dq > 0 && eq > 0 && deg >= q.complex.lo && deg < q.complex.hi()) {
            const auto& bq = q.complex.boundaries[static_cast<size_t>(deg - q.complex.lo)];
            for (long r = 0; r < eq; ++r)
                for (long c2 = 0; c2 < dq; ++c2)
                    b(static_cast<size_t>(ep + r), static_cast<size_t>(dp + c2)) =
                        bq(static_cast<size_t>(r), static_cast<size_t>(c2));
        }
        sum.boundaries.push_back(std::move(b));
    }
    sum.validate();

    MetrisedComplex out;
    out.complex = sum;
    out.metrics.resize(table->size());
    for (size_t irr = 0; irr < table->size(); ++irr) {
        long m = reps[irr].dim;
        size_t msq = static_cast<size_t>(m) * m;
        // embed the two sets of cohomology representatives into the sum
        std::vector<CycMatrix> target(sum.terms());
        for (size_t i = 0; i < sum.terms(); ++i) {
            long deg = lo + static_cast<long>(i);
            long dp = rank_of(p.complex, deg), dq = rank_of(q.complex, deg);
            size_t dim = static_cast<size_t>(dp + dq) * msq;
            size_t pc = 0, qc = 0;
            if (deg >= p.complex.lo && deg <= p.complex.hi())
                pc = p.metrics[irr].h_reps[static_cast<size_t>(deg - p.complex.lo)].cols();
            if (deg >= q.complex.lo && deg <= q.complex.hi())
                qc = q.metrics[irr].h_reps[static_cast<size_t>(deg - q.complex.lo)].cols();
            CycMatrix t(dim, pc + qc, CyclotomicNumber(0));
            if (pc) {
                const auto& hp = p.metrics[irr].h_reps[static_cast<size_t>(deg - p.complex.lo)];
                for (size_t r = 0; r < hp.rows(); ++r)
                    for (size_t c2 = 0; c2 < pc; ++c2) t(r, c2) = hp(r, c2);
            }
            if (qc) {
                const auto& hq = q.metrics[irr].h_reps[static_cast<size_t>(deg - q.complex.lo)];
                size_t off = static_cast<size_t>(dp) * msq;
                for (size_t r = 0; r < hq.rows(); ++r)
                    for (size_t c2 = 0; c2 < qc; ++c2) t(off + r, pc + c2) = hq(r, c2);
            }
            target[i] = std::move(t);
        }
        DetLineMetric metric;
        metric.h_reps = std::move(target);
        metric.norm = p.metrics[irr].norm.times(q.metrics[irr].norm);
        out.metrics[irr] = std::move(metric);
    }
    return out;
}

MetrisedComplex rescale_metrics(const MetrisedComplex& m, const TablePtr& table,
                                const std::vector<Rat>& alpha) {
    require(alpha.size() == table->size(), errc::descriptor_invalid, "one factor per irreducible");
    MetrisedComplex out = m;
    for (size_t irr = 0; irr < table->size(); ++irr) {
        require(alpha[irr] > 0, errc::descriptor_invalid, "metric scale must be positive");
        long deg = table->irreducibles[irr].degree;
        out.metrics[irr].norm =
            out.metrics[irr].norm.times(ArchValue::from_rat_abs(pow_rat(alpha[irr], deg)));
    }
    return out;
}

FixedPointData fixed_point_class(const MetrisedComplex& m, const HermitianFormSpec& forms,
                                 const std::vector<GroupRingMatrix>& q_bases,
                                 const std::map<unsigned long, std::vector<GroupRingMatrix>>& p_bases,
                                 const TablePtr& trivial_table) {
    const PerfectComplex& p = m.complex;
    const auto& g = *p.group;
    long n = g.order();
    auto trivial_group = trivial_table->group;

    PerfectComplex fixed;
    fixed.group = trivial_group;
    fixed.lo = p.lo;
    fixed.ranks = p.ranks;
    for (const auto& b : p.boundaries) {
        GroupRingMatrix fb(b.rows, b.cols, *trivial_group);
        for (size_t idx = 0; idx < b.entries.size(); ++idx)
            fb.entries[idx] = GroupRingElem{gr_augmentation(b.entries[idx])};
        fixed.boundaries.push_back(std::move(fb));
    }
    fixed.validate();

    // forms on the fixed complex: K_fixed[j][j'] = sum_{g,g'} K[(j,g),(j',g')]
    HermitianFormSpec fixed_forms;
    for (size_t t = 0; t < p.terms(); ++t) {
        const auto& f = forms.forms[t];
        long d = p.ranks[t];
        FormMatrix nf;
        nf.exact = f.exact;
        if (f.exact)
            nf.c = CycMatrix(static_cast<size_t>(d), static_cast<size_t>(d), CyclotomicNumber(0));
        else
            nf.iv = Matrix<ComplexInterval>(static_cast<size_t>(d), static_cast<size_t>(d));
        for (long j = 0; j < d; ++j)
            for (long j2 = 0; j2 < d; ++j2) {
                CyclotomicNumber acc_c(0);
                ComplexInterval acc_iv;
                for (int g1 = 0; g1 < n; ++g1)
                    for (int g2 = 0; g2 < n; ++g2) {
                        size_t a = static_cast<size_t>(j) * n + g1;
                        size_t b = static_cast<size_t>(j2) * n + g2;
                        if (f.exact)
                            acc_c += f.c(a, b);
                        else
                            acc_iv = acc_iv + f.iv(a, b);
                    }
                if (f.exact)
                    nf.c(static_cast<size_t>(j), static_cast<size_t>(j2)) = acc_c;
                else
                    nf.iv(static_cast<size_t>(j), static_cast<size_t>(j2)) = acc_iv;
            }
        fixed_forms.forms.push_back(std::move(nf));
    }

    auto trivial_reps = abelian_reps(*trivial_table);
    MetrisedComplex fixed_metrised =
        hermitian_to_metrised(fixed, fixed_forms, trivial_table, trivial_reps);

    // bases transfer: Sigma a^{ij} coordinates are the augmentations
    std::vector<GroupRingMatrix> fixed_q;
    for (const auto& a : q_bases) {
        GroupRingMatrix fa(a.rows, a.cols, *trivial_group);
        for (size_t idx = 0; idx < a.entries.size(); ++idx)
            fa.entries[idx] = GroupRingElem{gr_augmentation(a.entries[idx])};
        fixed_q.push_back(std::move(fa));
    }
    std::map<unsigned long, std::vector<GroupRingMatrix>> fixed_p;
    for (const auto& [prime, mats] : p_bases) {
        std::vector<GroupRingMatrix> fmats;
        for (const auto& a : mats) {
            GroupRingMatrix fa(a.rows, a.cols, *trivial_group);
            for (size_t idx = 0; idx < a.entries.size(); ++idx)
                fa.entries[idx] = GroupRingElem{gr_augmentation(a.entries[idx])};
            fmats.push_back(std::move(fa));
        }
        fixed_p[prime] = std::move(fmats);
    }

    FixedPointData out;
    out.fixed = fixed;
    out.cls = arithmetic_class(fixed_metrised, trivial_table, trivial_reps, fixed_q, fixed_p);
    return out;
}

int lemma_2_3_isometry_check(const FiniteGroup& g, const CharacterTable& table, size_t irr,
                             const IrreducibleRep& rep, int samples, unsigned long seed,
                             double rel_tol) {
    long n = g.order();
    WBasis w = orthonormal_w_basis(table, irr, rep);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-4, 4);
    int checked = 0;
    for (int iter = 0; iter < samples; ++iter) {
        // x = conj(w-element) * v for random ideal element and v in C[G]
        std::vector<CyclotomicNumber> widew(static_cast<size_t>(n), CyclotomicNumber(0));
        for (const auto& mat : w.mats) {
            Rat c = rat(coeff(rng), 1);
            for (int h = 0; h < n; ++h) widew[h] += CyclotomicNumber(c) * mat(h, 0);
        }
        // conjugate in C[G]: coefficients conjugated and elements inverted
        std::vector<CyclotomicNumber> wbar(static_cast<size_t>(n), CyclotomicNumber(0));
        for (int h = 0; h < n; ++h) wbar[g.inv(h)] = conjugate(widew[h]);
        std::vector<CyclotomicNumber> v(static_cast<size_t>(n), CyclotomicNumber(0));
        for (int h = 0; h < n; ++h) v[h] = CyclotomicNumber(rat(coeff(rng), 1));
        // x = wbar * v in C[G]
        std::vector<CyclotomicNumber> x(static_cast<size_t>(n), CyclotomicNumber(0));
        for (int a = 0; a < n; ++a) {
            if (wbar[a].is_zero()) continue;
            for (int b = 0; b < n; ++b) {
                if (v[b].is_zero()) continue;
                x[g.mul(a, b)] += wbar[a] * v[b];
            }
        }
        // ||x||_2^2 with the standard mu metric on V = C[G]
        CyclotomicNumber nrm2(0);
        for (int h = 0; h < n; ++h) nrm2 += x[h] * conjugate(x[h]);
        // alpha^{-1}(x) = |G|^{-1} sum_f (f x) tensor f; evaluate the tensor
        // form (mu tensor nu) on it through the full double sum
        std::vector<std::vector<CyclotomicNumber>> shifted(static_cast<size_t>(n));
        for (int f = 0; f < n; ++f) {
            shifted[f].assign(static_cast<size_t>(n), CyclotomicNumber(0));
            for (int h = 0; h < n; ++h) shifted[f][g.mul(f, h)] = x[h];
        }
        CyclotomicNumber nrm1(0);
        for (int f1 = 0; f1 < n; ++f1)
            for (int f2 = 0; f2 < n; ++f2) {
                CyclotomicNumber mu_val(0);
                for (int h = 0; h < n; ++h) mu_val += shifted[f1][h] * conjugate(shifted[f2][h]);
                // nu(f1, f2) on the group elements themselves
                CyclotomicNumber nu_val(f1 == f2 ? Rat(n) : Rat(0));
                nrm1 += mu_val * nu_val;
            }
        nrm1 *= CyclotomicNumber(rat(1, n * n));
        require(nrm1 == nrm2, errc::internal, "exact isometry identity failed");
        // certified interval comparison as well
        auto i1 = embed(nrm1), i2 = embed(nrm2);
        double mid1 = i1.re.midpoint(), mid2 = i2.re.midpoint();
        double scale = std::max({1.0, std::abs(mid1), std::abs(mid2)});
        require(std::abs(mid1 - mid2) <= rel_tol * scale, errc::precision_insufficient,
                "isometry violated beyond tolerance");
        ++checked;
    }
    return checked;
}

} // namespace tamearith

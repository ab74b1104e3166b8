#include "tamearith/matrix.hpp"

namespace tamearith {

namespace {

// Gaussian elimination over the cyclotomic field; returns (echelon matrix,
// pivot columns, determinant of the square part if tracked).
struct Echelon {
    CycMatrix m;
    std::vector<size_t> pivots;
    CyclotomicNumber det_scale;  // product of pivots with row-swap sign (square case)
    bool swapped_odd = false;
};

Echelon eliminate(CycMatrix m) {
    Echelon out{m, {}, CyclotomicNumber(1), false};
    size_t r = 0;
    for (size_t c = 0; c < out.m.cols() && r < out.m.rows(); ++c) {
        size_t pivot = r;
        while (pivot < out.m.rows() && out.m(pivot, c).is_zero()) ++pivot;
        if (pivot == out.m.rows()) continue;
        if (pivot != r) {
            for (size_t j = 0; j < out.m.cols(); ++j) std::swap(out.m(r, j), out.m(pivot, j));
            out.swapped_odd = !out.swapped_odd;
        }
        out.pivots.push_back(c);
        CyclotomicNumber inv = out.m(r, c).inv();
        out.det_scale *= out.m(r, c);
        for (size_t j = c; j < out.m.cols(); ++j) out.m(r, j) *= inv;
        for (size_t i = 0; i < out.m.rows(); ++i) {
            if (i == r || out.m(i, c).is_zero()) continue;
            CyclotomicNumber factor = out.m(i, c);
            for (size_t j = c; j < out.m.cols(); ++j)
                out.m(i, j) -= factor * out.m(r, j);
        }
        ++r;
    }
    return out;
}

} // namespace

CyclotomicNumber det(const CycMatrix& m) {
    require(m.rows() == m.cols(), errc::internal, "determinant of non-square matrix");
    if (m.rows() == 0) return CyclotomicNumber(1);
    Echelon e = eliminate(m);
    if (e.pivots.size() < m.rows()) return CyclotomicNumber(0);
    return e.swapped_odd ? -e.det_scale : e.det_scale;
}

Rat det(const RatMatrix& m) {
    require(m.rows() == m.cols(), errc::internal, "determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Rat(1);
    RatMatrix a = m;
    Rat out(1);
    bool neg = false;
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != c) {
            for (size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
            neg = !neg;
        }
        out *= a(c, c);
        Rat inv = Rat(1) / a(c, c);
        for (size_t j = c; j < n; ++j) a(c, j) *= inv;
        for (size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    out.canonicalize();
    return neg ? Rat(-out) : out;
}

size_t rank(const CycMatrix& m) { return eliminate(m).pivots.size(); }

std::vector<size_t> rref(CycMatrix& m) {
    Echelon e = eliminate(m);
    m = e.m;
    return e.pivots;
}

CycMatrix inverse(const CycMatrix& m) {
    require(m.rows() == m.cols(), errc::singular, "inverse of non-square matrix");
    size_t n = m.rows();
    CycMatrix aug(n, 2 * n, CyclotomicNumber(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = CyclotomicNumber(1);
    }
    auto pivots = rref(aug);
    require(pivots.size() == n && pivots[n - 1] == n - 1, errc::singular, "matrix not invertible");
    CycMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

CycMatrix kernel_basis(const CycMatrix& m) {
    CycMatrix e = m;
    auto pivots = rref(e);
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    CycMatrix out(n, free_cols.size(), CyclotomicNumber(0));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        out(fc, k) = CyclotomicNumber(1);
        for (size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -e(r, fc);
    }
    return out;
}

CycMatrix solve(const CycMatrix& m, const CycMatrix& rhs) {
    require(m.rows() == rhs.rows(), errc::internal, "solve shape mismatch");
    size_t n = m.cols();
    CycMatrix aug(m.rows(), n + rhs.cols(), CyclotomicNumber(0));
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        for (size_t j = 0; j < rhs.cols(); ++j) aug(i, n + j) = rhs(i, j);
    }
    auto pivots = rref(aug);
    // unique solution requires pivots exactly the first n columns
    require(pivots.size() >= 1 || n == 0, errc::singular, "solve on empty system");
    size_t lead = 0;
    for (size_t c : pivots) {
        if (c < n)
            ++lead;
        else
            fail(errc::singular, "inconsistent linear system");
    }
    require(lead == n, errc::singular, "linear system without unique solution");
    CycMatrix out(n, rhs.cols(), CyclotomicNumber(0));
    for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j < rhs.cols(); ++j) out(r, j) = aug(r, n + j);
    return out;
}

CycMatrix transpose(const CycMatrix& m) {
    CycMatrix out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

CycMatrix conjugate_transpose(const CycMatrix& m) {
    CycMatrix out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(j, i) = conjugate(m(i, j));
    return out;
}

RatMatrix inverse(const RatMatrix& m) {
    require(m.rows() == m.cols(), errc::singular, "inverse of non-square rational matrix");
    size_t n = m.rows();
    RatMatrix aug(n, 2 * n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; ++c) {
        size_t pivot = r;
        while (pivot < n && aug(pivot, c) == 0) ++pivot;
        require(pivot < n, errc::singular, "rational matrix not invertible");
        if (pivot != r)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug(r, j), aug(pivot, j));
        Rat inv_piv = Rat(1) / aug(r, c);
        for (size_t j = 0; j < 2 * n; ++j) aug(r, j) *= inv_piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(r, j);
        }
        ++r;
    }
    require(r == n, errc::singular, "rational matrix not invertible");
    RatMatrix out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            out(i, j) = aug(i, n + j);
            out(i, j).canonicalize();
        }
    return out;
}

} // namespace tamearith

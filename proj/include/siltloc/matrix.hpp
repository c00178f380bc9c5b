#pragma once

#include <optional>
#include <vector>

#include "siltloc/field.hpp"

namespace siltloc {

/// Dense matrix over an exact field, row-major. Vectors are columns and a
/// linear map X -> Y of dimensions n -> m is an m x n matrix acting on the
/// left, so composition is matrix multiplication in the usual order.
template <class F>
struct Mat {
    using Elt = typename F::Elt;

    F field{};
    int rows = 0, cols = 0;
    std::vector<Elt> a;

    Mat() = default;
    Mat(F f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

    Elt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Elt& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(F f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    static Mat zero(F f, int r, int c) { return Mat(f, r, c); }

    bool is_zero() const {
        for (const auto& x : a)
            if (!field.is_zero(x)) return false;
        return true;
    }
};

template <class F>
bool eq(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!x.field.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class F>
Mat<F> mul(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw error(errc::bad_input, "mat mul: shape mismatch");
    const F f = x.field;
    Mat<F> r(f, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const auto& xik = x.at(i, k);
            if (f.is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(xik, y.at(k, j)));
        }
    return r;
}

template <class F>
Mat<F> add(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error(errc::bad_input, "mat add: shape mismatch");
    Mat<F> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.field.add(x.a[i], y.a[i]);
    return r;
}

template <class F>
Mat<F> sub(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw error(errc::bad_input, "mat sub: shape mismatch");
    Mat<F> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.field.sub(x.a[i], y.a[i]);
    return r;
}

template <class F>
Mat<F> neg(const Mat<F>& x) {
    Mat<F> r = x;
    for (auto& v : r.a) v = x.field.neg(v);
    return r;
}

template <class F>
Mat<F> scale(const Mat<F>& x, const typename F::Elt& c) {
    Mat<F> r = x;
    for (auto& v : r.a) v = x.field.mul(v, c);
    return r;
}

template <class F>
Mat<F> transpose(const Mat<F>& x) {
    Mat<F> r(x.field, x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

template <class F>
Mat<F> hstack(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows) throw error(errc::bad_input, "hstack: row mismatch");
    Mat<F> r(x.field, x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

template <class F>
Mat<F> vstack(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.cols) throw error(errc::bad_input, "vstack: col mismatch");
    Mat<F> r(x.field, x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

/// Columns [c0, c1) as a new matrix.
template <class F>
Mat<F> col_slice(const Mat<F>& x, int c0, int c1) {
    Mat<F> r(x.field, x.rows, c1 - c0);
    for (int i = 0; i < x.rows; ++i)
        for (int j = c0; j < c1; ++j) r.at(i, j - c0) = x.at(i, j);
    return r;
}

template <class F>
Mat<F> col(const Mat<F>& x, int j) { return col_slice(x, j, j + 1); }

template <class F>
struct Rref {
    Mat<F> r;
    int rank = 0;
    std::vector<int> pivots; // pivot column per pivot row
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, smallest row index.
template <class F>
Rref<F> rref(Mat<F> m) {
    const F f = m.field;
    std::vector<int> pivots;
    int prow = 0;
    for (int c = 0; c < m.cols && prow < m.rows; ++c) {
        int sel = -1;
        for (int i = prow; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(prow, j));
        const auto piv_inv = f.inv(m.at(prow, c));
        for (int j = c; j < m.cols; ++j) m.at(prow, j) = f.mul(m.at(prow, j), piv_inv);
        for (int i = 0; i < m.rows; ++i) {
            if (i == prow) continue;
            const auto t = m.at(i, c);
            if (f.is_zero(t)) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(prow, j)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return {std::move(m), prow, std::move(pivots)};
}

template <class F>
int rank(const Mat<F>& m) { return rref(m).rank; }

/// Canonical kernel basis from the RREF free variables; columns span ker(m).
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
    const F f = m.field;
    auto e = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int c : e.pivots) is_pivot[static_cast<size_t>(c)] = true;
    const int k = m.cols - e.rank;
    Mat<F> ker(f, m.cols, k);
    int out = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        ker.at(c, out) = f.one();
        for (int pr = 0; pr < e.rank; ++pr)
            ker.at(e.pivots[static_cast<size_t>(pr)], out) = f.neg(e.r.at(pr, c));
        ++out;
    }
    return ker;
}

/// Column basis of the image, in reduced echelon shape (rref of the transpose).
template <class F>
Mat<F> image_basis(const Mat<F>& m) {
    auto e = rref(transpose(m));
    Mat<F> b(m.field, m.rows, e.rank);
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < m.rows; ++j) b.at(j, i) = e.r.at(i, j);
    return b;
}

template <class F>
struct CokerProj {
    Mat<F> proj; // (rows - rank) x rows, full row rank, proj * m = 0
    int dim = 0;
};

/// Projection k^rows -> k^(rows-rank) with kernel exactly im(m).
template <class F>
CokerProj<F> cokernel_projection(const Mat<F>& m) {
    const F f = m.field;
    Mat<F> b = image_basis(m); // echelon columns with unit pivot rows
    auto e = rref(transpose(b));
    // rows of b's pivot positions
    std::vector<bool> piv(static_cast<size_t>(m.rows), false);
    for (int c : e.pivots) piv[static_cast<size_t>(c)] = true;
    const int d = m.rows - e.rank;
    // Complete [b | unit vectors at non-pivot rows] to a basis; the projection
    // reads off the unit-vector coordinates, i.e. the bottom rows of the inverse.
    Mat<F> basis(f, m.rows, m.rows);
    for (int j = 0; j < e.rank; ++j)
        for (int i = 0; i < m.rows; ++i) basis.at(i, j) = b.at(i, j);
    int out = e.rank;
    for (int i = 0; i < m.rows; ++i)
        if (!piv[static_cast<size_t>(i)]) basis.at(i, out++) = f.one();
    auto binv = inverse(basis);
    if (!binv) throw error(errc::internal, "cokernel_projection: basis completion failed");
    Mat<F> proj(f, d, m.rows);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < m.rows; ++j) proj.at(i, j) = binv->at(e.rank + i, j);
    return {std::move(proj), d};
}

template <class F>
struct Solution {
    Mat<F> particular; // cols(m) x cols(rhs)
    Mat<F> nullspace;  // cols(m) x (cols(m) - rank)
};

/// Exact solve m * x = rhs; std::nullopt when inconsistent.
template <class F>
std::optional<Solution<F>> solve(const Mat<F>& m, const Mat<F>& rhs) {
    if (m.rows != rhs.rows) throw error(errc::bad_input, "solve: row mismatch");
    const F f = m.field;
    auto e = rref(hstack(m, rhs));
    // any pivot in the rhs block means inconsistency
    for (int c : e.pivots)
        if (c >= m.cols) return std::nullopt;
    Mat<F> part(f, m.cols, rhs.cols);
    for (int pr = 0; pr < static_cast<int>(e.pivots.size()); ++pr)
        for (int j = 0; j < rhs.cols; ++j)
            part.at(e.pivots[static_cast<size_t>(pr)], j) = e.r.at(pr, m.cols + j);
    Mat<F> ker = kernel_basis(m);
    return Solution<F>{std::move(part), std::move(ker)};
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
    if (m.rows != m.cols) return std::nullopt;
    auto e = rref(hstack(m, Mat<F>::identity(m.field, m.rows)));
    if (e.rank != m.rows) return std::nullopt;
    return col_slice(e.r, m.cols, 2 * m.cols);
}

/// Flatten column-by-column into a single column vector.
template <class F>
Mat<F> vec(const Mat<F>& m) {
    Mat<F> v(m.field, m.rows * m.cols, 1);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) v.at(j * m.rows + i, 0) = m.at(i, j);
    return v;
}

template <class F>
Mat<F> unvec(const Mat<F>& v, int rows, int cols) {
    Mat<F> m(v.field, rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m.at(i, j) = v.at(j * rows + i, 0);
    return m;
}

} // namespace siltloc

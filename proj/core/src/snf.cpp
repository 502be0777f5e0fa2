#include "dgmoduli/matrix.hpp"

namespace dgm {

namespace {

struct ZWork {
    int rows, cols;
    std::vector<mpz_class> a;
    mpz_class& at(std::vector<mpz_class>& m, int ncols, int i, int j) {
        return m[static_cast<size_t>(i) * ncols + j];
    }
};

}  // namespace

SnfResult smith_normal_form(const Mat& m) {
    if (m.ring().kind != RingKind::Z) throw InputError("smith_normal_form expects a Z matrix");
    const int rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i) * cols + j] = m.at(i, j).get_num();
    std::vector<mpz_class> u(static_cast<size_t>(rows) * rows), v(static_cast<size_t>(cols) * cols);
    for (int i = 0; i < rows; ++i) u[static_cast<size_t>(i) * rows + i] = 1;
    for (int j = 0; j < cols; ++j) v[static_cast<size_t>(j) * cols + j] = 1;

    auto A = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * cols + j]; };
    auto U = [&](int i, int j) -> mpz_class& { return u[static_cast<size_t>(i) * rows + j]; };
    auto V = [&](int i, int j) -> mpz_class& { return v[static_cast<size_t>(i) * cols + j]; };

    auto row_addmul = [&](int dst, int src, const mpz_class& c) {
        for (int j = 0; j < cols; ++j) A(dst, j) += c * A(src, j);
        for (int j = 0; j < rows; ++j) U(dst, j) += c * U(src, j);
    };
    auto col_addmul = [&](int dst, int src, const mpz_class& c) {
        for (int i = 0; i < rows; ++i) A(i, dst) += c * A(i, src);
        for (int i = 0; i < cols; ++i) V(i, dst) += c * V(i, src);
    };
    auto row_swap = [&](int x, int y) {
        if (x == y) return;
        for (int j = 0; j < cols; ++j) std::swap(A(x, j), A(y, j));
        for (int j = 0; j < rows; ++j) std::swap(U(x, j), U(y, j));
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < rows; ++i) std::swap(A(i, x), A(i, y));
        for (int i = 0; i < cols; ++i) std::swap(V(i, x), V(i, y));
    };
    auto row_negate = [&](int x) {
        for (int j = 0; j < cols; ++j) A(x, j) = -A(x, j);
        for (int j = 0; j < rows; ++j) U(x, j) = -U(x, j);
    };

    const int n = std::min(rows, cols);
    for (int t = 0; t < n; ++t) {
        // find a nonzero pivot of minimal absolute value
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (A(i, j) == 0) continue;
                mpz_class v2 = abs(A(i, j));
                if (pi < 0 || v2 < best) { best = v2; pi = i; pj = j; }
            }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (A(t, t) < 0) row_negate(t);

        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < rows; ++i) {
                if (A(i, t) == 0) continue;
                mpz_class q = A(i, t) / A(t, t);  // truncated division is fine with re-pivot below
                if (q != 0) row_addmul(i, t, -q);
                if (A(i, t) != 0) {
                    // remainder smaller than pivot: swap up and restart reduction
                    row_swap(t, i);
                    if (A(t, t) < 0) row_negate(t);
                    again = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (A(t, j) == 0) continue;
                mpz_class q = A(t, j) / A(t, t);
                if (q != 0) col_addmul(j, t, -q);
                if (A(t, j) != 0) {
                    col_swap(t, j);
                    if (A(t, t) < 0) row_negate(t);
                    again = true;
                }
            }
            if (!again) {
                // pivot must divide the remaining block; if not, fold the
                // offending row in and redo
                for (int i = t + 1; i < rows && !again; ++i)
                    for (int j = t + 1; j < cols; ++j)
                        if (A(i, j) % A(t, t) != 0) {
                            row_addmul(t, i, 1);
                            again = true;
                            break;
                        }
            }
        }
    }

    // enforce the divisibility chain along the diagonal (already guaranteed by
    // the divide-check above, but normalize signs and collect)
    SnfResult res;
    res.u = Mat(Ring::integers(), rows, rows);
    res.v = Mat(Ring::integers(), cols, cols);
    res.d = Mat(Ring::integers(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j) res.u.set_raw(i, j, mpq_class(U(i, j)));
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < cols; ++j) res.v.set_raw(i, j, mpq_class(V(i, j)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) res.d.set_raw(i, j, mpq_class(A(i, j)));
    for (int t = 0; t < n; ++t)
        if (A(t, t) != 0) res.divisors.push_back(A(t, t));
    return res;
}

mpq_class det(const Mat& m) {
    if (m.rows() != m.cols()) throw InputError("det: square matrix required");
    const int n = m.rows();
    if (n == 0) return 1;
    // plain fraction elimination over Q regardless of ring (values embed)
    std::vector<mpq_class> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<size_t>(i) * n + j]; };
    mpq_class d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (at(i, c) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(at(piv, j), at(c, j));
            d = -d;
        }
        d *= at(c, c);
        mpq_class inv = 1 / at(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (at(i, c) == 0) continue;
            mpq_class f = at(i, c) * inv;
            for (int j = c; j < n; ++j) {
                if (at(c, j) == 0) continue;
                at(i, j) -= f * at(c, j);
            }
        }
    }
    return d;
}

Mat integer_kernel(const Mat& m) {
    if (m.ring().kind != RingKind::Z) throw InputError("integer_kernel expects a Z matrix");
    SnfResult s = smith_normal_form(m);
    const int r = static_cast<int>(s.divisors.size());
    std::vector<int> idx;
    for (int j = r; j < m.cols(); ++j) idx.push_back(j);
    return s.v.cols_slice(idx);  // unimodular V makes these a lattice basis
}

}  // namespace dgm

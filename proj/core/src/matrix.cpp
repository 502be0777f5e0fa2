#include "dgmoduli/matrix.hpp"

#include <sstream>

namespace dgm {

Mat Mat::identity(Ring ring, int n) {
    Mat m(ring, n, n);
    for (int i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

Mat Mat::col_vector(Ring ring, const std::vector<mpq_class>& v) {
    Mat m(ring, static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.set(static_cast<int>(i), 0, v[i]);
    return m;
}

mpq_class Mat::normalize(const mpq_class& v) const {
    switch (ring_.kind) {
        case RingKind::Fp: {
            if (v.get_den() != 1) {
                // reduce num/den separately: num * den^{-1} mod p
                mpz_class p(ring_.p), num = v.get_num() % p, den = v.get_den() % p, inv;
                if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                    throw InputError("denominator not invertible mod " + std::to_string(ring_.p));
                mpz_class r = (num * inv) % p;
                if (r < 0) r += p;
                return mpq_class(r);
            }
            mpz_class p(ring_.p), r = v.get_num() % p;
            if (r < 0) r += p;
            return mpq_class(r);
        }
        case RingKind::Z:
            if (v.get_den() != 1) throw InputError("non-integer entry in Z matrix");
            return v;
        default:
            return v;  // mpq_class is always canonical
    }
}

void Mat::set(int i, int j, const mpq_class& v) { set_raw(i, j, normalize(v)); }

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_ring(ring_, o.ring_, "matrix add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix add: shape mismatch");
    Mat r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.normalize(a_[k] + o.a_[k]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_ring(ring_, o.ring_, "matrix sub");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sub: shape mismatch");
    Mat r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.normalize(a_[k] - o.a_[k]);
    return r;
}

Mat Mat::operator-() const {
    Mat r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.normalize(-a_[k]);
    return r;
}

Mat Mat::scaled(const mpq_class& c) const {
    Mat r(ring_, rows_, cols_);
    mpq_class cn = r.normalize(c);
    if (cn == 0) return r;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != 0) r.a_[k] = r.normalize(a_[k] * cn);
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    require_same_ring(ring_, o.ring_, "matrix mul");
    if (cols_ != o.rows_) throw InputError("matrix mul: shape mismatch");
    Mat r(ring_, rows_, o.cols_);
    // zero-skip keeps this fast on the very sparse matrices path algebras produce
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const mpq_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpq_class& y = o.at(k, j);
                if (y == 0) continue;
                r.a_[static_cast<size_t>(i) * o.cols_ + j] += x * y;
            }
        }
    }
    if (ring_.kind == RingKind::Fp)
        for (auto& x : r.a_) x = r.normalize(x);
    return r;
}

Mat Mat::transpose() const {
    Mat r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set_raw(j, i, at(i, j));
    return r;
}

Mat Mat::col(int j) const {
    Mat r(ring_, rows_, 1);
    for (int i = 0; i < rows_; ++i) r.set_raw(i, 0, at(i, j));
    return r;
}

Mat Mat::cols_slice(const std::vector<int>& idx) const {
    Mat r(ring_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.set_raw(i, static_cast<int>(j), at(i, idx[j]));
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    if (empty() && rows_ == 0) { /* fallthrough: treat as o-compatible */ }
    require_same_ring(ring_, o.ring_, "hstack");
    if (rows_ != o.rows_) throw InputError("hstack: row mismatch");
    Mat r(ring_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.set_raw(i, j, at(i, j));
        for (int j = 0; j < o.cols_; ++j) r.set_raw(i, cols_ + j, o.at(i, j));
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    require_same_ring(ring_, o.ring_, "vstack");
    if (cols_ != o.cols_) throw InputError("vstack: col mismatch");
    Mat r(ring_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set_raw(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set_raw(rows_ + i, j, o.at(i, j));
    return r;
}

Mat Mat::dsum(const Mat& o) const {
    require_same_ring(ring_, o.ring_, "dsum");
    Mat r(ring_, rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set_raw(i, j, at(i, j));
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r.set_raw(rows_ + i, cols_ + j, o.at(i, j));
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

mpq_class field_inv(const Ring& ring, const mpq_class& v) {
    if (v == 0) throw InputError("division by zero");
    if (ring.kind == RingKind::Fp) {
        mpz_class p(ring.p), inv;
        mpz_class num = v.get_num() % p;
        if (num < 0) num += p;
        if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
            throw InputError("element not invertible mod " + std::to_string(ring.p));
        return mpq_class(inv);
    }
    if (ring.kind == RingKind::Q) return 1 / v;
    throw InputError("field inverse requested over Z");
}

namespace {

// In-place field row reduction; returns pivot columns.
std::vector<int> rref_inplace(const Ring& ring, std::vector<mpq_class>& a, int rows, int cols) {
    std::vector<int> pivots;
    auto at = [&](int i, int j) -> mpq_class& { return a[static_cast<size_t>(i) * cols + j]; };
    auto norm = [&](mpq_class& v) {
        if (ring.kind == RingKind::Fp) {
            mpz_class p(ring.p), r = v.get_num() % p;
            if (r < 0) r += p;
            v = mpq_class(r);
        }
    };
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int i = row; i < rows; ++i)
            if (at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = col; j < cols; ++j) std::swap(at(piv, j), at(row, j));
        mpq_class inv = field_inv(ring, at(row, col));
        if (inv != 1)
            for (int j = col; j < cols; ++j) {
                if (at(row, j) == 0) continue;
                at(row, j) *= inv;
                norm(at(row, j));
            }
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const mpq_class f = at(i, col);
            if (f == 0) continue;
            for (int j = col; j < cols; ++j) {
                if (at(row, j) == 0) continue;
                at(i, j) -= f * at(row, j);
                norm(at(i, j));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

GaussResult gauss_decompose(const Mat& m) {
    if (!m.ring().is_field())
        throw InputError("gauss_decompose requires a field (F_p or Q)");
    const int rows = m.rows(), cols = m.cols();
    std::vector<mpq_class> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i) * cols + j] = m.at(i, j);

    GaussResult res;
    res.pivots = rref_inplace(m.ring(), a, rows, cols);
    res.rank = static_cast<int>(res.pivots.size());

    res.rref = Mat(m.ring(), rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) res.rref.set_raw(i, j, a[static_cast<size_t>(i) * cols + j]);

    // kernel: one column per free column
    std::vector<bool> is_pivot(cols, false);
    for (int p : res.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    res.kernel = Mat(m.ring(), cols, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        res.kernel.set(fc, static_cast<int>(k), 1);
        for (int r = 0; r < res.rank; ++r) {
            const mpq_class& v = res.rref.at(r, fc);
            if (v != 0) res.kernel.set(res.pivots[r], static_cast<int>(k), -v);
        }
    }
    res.image = m.cols_slice(res.pivots);
    return res;
}

int rank_of(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const int rows = m.rows(), cols = m.cols();
    std::vector<mpq_class> a(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i) * cols + j] = m.at(i, j);
    return static_cast<int>(rref_inplace(m.ring(), a, rows, cols).size());
}

std::optional<SolveAllResult> solve_all(const Mat& m, const Mat& b) {
    require_same_ring(m.ring(), b.ring(), "solve");
    if (m.rows() != b.rows()) throw InputError("solve: shape mismatch");
    GaussResult g = gauss_decompose(m.hstack(b));
    // inconsistent iff some pivot lands in the b-block
    for (int p : g.pivots)
        if (p >= m.cols()) return std::nullopt;
    SolveAllResult out;
    out.particular = Mat(m.ring(), m.cols(), b.cols());
    for (size_t r = 0; r < g.pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            out.particular.set_raw(g.pivots[r], j, g.rref.at(static_cast<int>(r), m.cols() + j));
    // kernel of m alone: strip b-columns from the combined kernel computation
    GaussResult gm = gauss_decompose(m);
    out.kernel = gm.kernel;
    return out;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
    require_same_ring(m.ring(), b.ring(), "solve");
    if (m.rows() != b.rows()) throw InputError("solve: shape mismatch");
    GaussResult g = gauss_decompose(m.hstack(b));
    for (int p : g.pivots)
        if (p >= m.cols()) return std::nullopt;
    Mat x(m.ring(), m.cols(), b.cols());
    for (size_t r = 0; r < g.pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.set_raw(g.pivots[r], j, g.rref.at(static_cast<int>(r), m.cols() + j));
    return x;
}

int rank_mod_p(const Mat& m, long p) {
    if (m.ring().kind != RingKind::Z) throw InputError("rank_mod_p expects a Z matrix");
    Mat r(Ring::fp(p), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j));
    return rank_of(r);
}

}  // namespace dgm

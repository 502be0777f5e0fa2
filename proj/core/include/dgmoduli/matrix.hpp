#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "dgmoduli/ring.hpp"

namespace dgm {

/// Dense matrix with exact entries over F_p, Q or Z.  Entries are stored as
/// rationals; F_p entries are kept reduced to [0,p) and Z entries integral.
/// Immutable in spirit: operations return new matrices.
class Mat {
public:
    Mat() = default;
    Mat(Ring ring, int rows, int cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

    static Mat identity(Ring ring, int n);
    static Mat zeros(Ring ring, int rows, int cols) { return Mat(ring, rows, cols); }
    static Mat col_vector(Ring ring, const std::vector<mpq_class>& v);

    const Ring& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, const mpq_class& v);
    void set_raw(int i, int j, const mpq_class& v) { a_[static_cast<size_t>(i) * cols_ + j] = v; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const mpq_class& c) const;

    Mat transpose() const;
    Mat col(int j) const;
    Mat cols_slice(const std::vector<int>& idx) const;
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;
    /// Block diagonal of *this and o.
    Mat dsum(const Mat& o) const;

    /// Reduce an arbitrary rational into the ring (mod p for F_p; must be
    /// integral for Z).
    mpq_class normalize(const mpq_class& v) const;

    std::string str() const;

private:
    Ring ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

/// Scalar inverse in a field ring.
mpq_class field_inv(const Ring& ring, const mpq_class& v);

struct GaussResult {
    int rank = 0;
    std::vector<int> pivots;  // pivot column indices of the rref
    Mat rref;
    Mat kernel;  // columns form a basis of the right kernel
    Mat image;   // pivot columns of the original matrix (span of the column space)
};

/// Row reduction over a field; rejects Z and mixed coefficients.
GaussResult gauss_decompose(const Mat& m);

/// Rank over a field (kernel/image skipped).
int rank_of(const Mat& m);

/// One exact solution of m x = b (b may have several columns), or nullopt if
/// inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b);

/// Particular solution plus kernel basis in one elimination.
struct SolveAllResult {
    Mat particular;
    Mat kernel;
};
std::optional<SolveAllResult> solve_all(const Mat& m, const Mat& b);

struct SnfResult {
    Mat u, d, v;                       // u * m * v == d, u and v unimodular
    std::vector<mpz_class> divisors;   // nonzero diagonal of d, d1 | d2 | ...
};

/// Smith normal form of an integer matrix.
SnfResult smith_normal_form(const Mat& m);

/// Determinant of a square integer or rational matrix (fraction-free).
mpq_class det(const Mat& m);

/// Basis of the integer kernel lattice of an integer matrix (columns).
Mat integer_kernel(const Mat& m);

/// Rank of the matrix after reduction mod p (Z matrices only).
int rank_mod_p(const Mat& m, long p);

}  // namespace dgm

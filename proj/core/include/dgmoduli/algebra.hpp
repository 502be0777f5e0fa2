#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dgmoduli/matrix.hpp"
#include "dgmoduli/quiver.hpp"

namespace dgm {

/// Per-path bookkeeping attached to a path algebra: endpoint vertices of
/// every basis path, in basis order.
struct PathAlgebraInfo {
    Quiver quiver;
    std::vector<int> source_of;  // source vertex index per basis path
    std::vector<int> target_of;  // target vertex index per basis path
    std::vector<int> length_of;  // path length per basis element
};

/// Finite-dimensional associative unital algebra over F_p or Q, given by
/// structure constants e_i * e_j = sum_k c_{ij}^k e_k.
///
/// Every algebra carries a generating set (elements) together with a word in
/// the generators for each basis element; modules store their action on the
/// generators only, which keeps enveloping-algebra computations at a sane
/// size.  Constructors that know more (path algebras, tensor products)
/// attach the radical and a complete orthogonal idempotent family.
class FinDimAlgebra : public std::enable_shared_from_this<FinDimAlgebra> {
public:
    using Ptr = std::shared_ptr<const FinDimAlgebra>;
    struct Term {
        int k;
        mpq_class c;
    };
    using Elt = std::vector<mpq_class>;  // coefficients in the basis

    Ring field;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<Term>> sc;  // sc[i*dim + j] = e_i * e_j
    Elt unit;
    std::string name = "A";

    std::vector<Elt> gens;                // generating elements
    std::vector<std::vector<int>> words;  // basis elt = exact product of gens[w...] in order
    std::optional<Mat> known_radical;     // columns span J, when structurally known
    std::vector<Elt> orth_idempotents;    // complete orthogonal family summing to 1 (may be empty)
    bool split_quotient_known = false;    // A/J known split semisimple by construction
    std::shared_ptr<const PathAlgebraInfo> path_data;

    /// Construct; audits associativity and the unit on all basis triples
    /// when `audit` is set (automatic for anything desk-sized).
    static Ptr make(Ring field, std::vector<std::string> basis, std::vector<std::vector<Term>> sc,
                    Elt unit, std::string name = "A", bool audit = true);

    const std::vector<Term>& prod(int i, int j) const { return sc[static_cast<size_t>(i) * dim + j]; }

    Elt zero_elt() const { return Elt(dim, mpq_class(0)); }
    Elt basis_elt(int i) const;
    Elt mul(const Elt& x, const Elt& y) const;
    Elt add(const Elt& x, const Elt& y) const;
    Elt sub(const Elt& x, const Elt& y) const;
    Elt scale(const mpq_class& c, const Elt& x) const;
    Elt power(const Elt& x, const mpz_class& n) const;
    bool is_zero_elt(const Elt& x) const;
    mpq_class norm(const mpq_class& v) const;

    Mat left_mult(const Elt& x) const;
    Mat right_mult(const Elt& x) const;
    Mat left_mult_basis(int i) const;
    mpq_class trace_left_mult_basis(int i) const;

    bool is_invertible(const Elt& x) const;

    void audit_structure() const;

    /// Jacobson radical as columns of a dim x r matrix.  Structural when
    /// attached; otherwise the trace-form kernel, valid in characteristic 0
    /// or p > dim (refused with an explicit error below that).
    const Mat& radical() const;
    bool radical_available(std::string* why = nullptr) const;

    // lazily filled caches (algebra values are otherwise immutable)
    mutable std::mutex cache_mutex;
    mutable std::optional<Mat> radical_cache;
    mutable std::shared_ptr<void> semisimple_cache;
    mutable std::shared_ptr<void> simples_cache;

    FinDimAlgebra() = default;
};

/// Path algebra k[Q] of an acyclic quiver.  Basis = directed paths, trivial
/// paths first; the product qp is "q after p" (concatenation when the source
/// of q equals the target of p, zero otherwise).  Modules over it are the
/// representations of Q.  Throws for cyclic quivers.
FinDimAlgebra::Ptr path_algebra(const Quiver& q, const Ring& field);

FinDimAlgebra::Ptr opposite(const FinDimAlgebra::Ptr& a);
FinDimAlgebra::Ptr tensor_algebra(const FinDimAlgebra::Ptr& a, const FinDimAlgebra::Ptr& b);
/// Enveloping algebra A (x) A^op.
FinDimAlgebra::Ptr enveloping_algebra(const FinDimAlgebra::Ptr& a);

/// The base field as a one-dimensional algebra.
FinDimAlgebra::Ptr field_algebra(const Ring& field);
/// Dual numbers k[eps]/(eps^2).
FinDimAlgebra::Ptr dual_numbers(const Ring& field);
/// Full matrix algebra M_n(k) on the matrix-unit basis.
FinDimAlgebra::Ptr matrix_algebra(const Ring& field, int n);

/// Quotient A/I by the two-sided ideal spanned by the columns of
/// ideal_basis, with the projection (qdim x dim) and a linear section
/// (dim x qdim).
struct QuotientAlgebra {
    FinDimAlgebra::Ptr algebra;
    Mat projection;
    Mat section;
};
QuotientAlgebra quotient_algebra(const FinDimAlgebra::Ptr& a, const Mat& ideal_basis);

}  // namespace dgm

#pragma once

#include "dgmoduli/module.hpp"
#include "dgmoduli/poly.hpp"

namespace dgm {

struct WedderburnBlock {
    FinDimAlgebra::Elt central_idempotent;  // inside S = A/J
    int block_dim = 0;                      // n^2 d
    int center_dim = 0;                     // d
    int matrix_size = 0;                    // n; 0 marks a non-split block over Q
};

struct SemisimpleData {
    QuotientAlgebra quotient;  // S = A/J
    Mat center;                // columns: basis of Z(S)
    std::vector<WedderburnBlock> blocks;
};

/// Wedderburn data of A/J; cached on the algebra.
const SemisimpleData& semisimple_data(const FinDimAlgebra::Ptr& a);

/// Exact |A^x| over F_p: p^{dim J} * prod |GL_{n_i}(F_{p^{d_i}})| when the
/// radical is available, exhaustive enumeration when p^dim fits the bound.
mpz_class unit_group_order(const FinDimAlgebra::Ptr& a, const mpz_class& enum_bound = mpz_class(1) << 20);
mpz_class unit_group_order_enumerate(const FinDimAlgebra::Ptr& a);
mpz_class gl_order(const mpz_class& q, int n);

struct SimpleProj {
    ModuleRep simple;
    ModuleRep projective;
    FinDimAlgebra::Elt idempotent;  // primitive idempotent of A with P = A f
    int block = 0;
    int multiplicity = 0;  // times P occurs in the regular module
};

/// One (simple, projective cover) pair per isomorphism class; requires the
/// radical and split Wedderburn blocks.  Cached on the algebra.
const std::vector<SimpleProj>& simples_and_projectives(const FinDimAlgebra::Ptr& a);

/// Multiplicity of each simple in the top of M (order matches
/// simples_and_projectives).
std::vector<int> top_multiplicities(const ModuleRep& m);

}  // namespace dgm

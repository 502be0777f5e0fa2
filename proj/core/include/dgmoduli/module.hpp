#pragma once

#include <optional>
#include <random>

#include "dgmoduli/algebra.hpp"

namespace dgm {

/// Finite-dimensional left module over a FinDimAlgebra, stored by the action
/// of the algebra's generators.  For a path algebra this is exactly a quiver
/// representation (vertex spaces glued along the idempotent projections).
struct ModuleRep {
    FinDimAlgebra::Ptr algebra;
    int dim = 0;
    std::vector<Mat> gen_action;  // one square matrix per algebra->gens entry

    static ModuleRep make(FinDimAlgebra::Ptr a, std::vector<Mat> gen_action);
    static ModuleRep zero(FinDimAlgebra::Ptr a);
    static ModuleRep regular(FinDimAlgebra::Ptr a);
    /// Quiver representation data: one dimension per vertex, one matrix per
    /// arrow (target_dim x source_dim).  Path algebras only.
    static ModuleRep from_quiver_rep(const FinDimAlgebra::Ptr& a, const std::vector<int>& vert_dims,
                                     const std::vector<Mat>& arrow_mats);
    /// Module given by the action of every basis element (general algebras).
    static ModuleRep from_basis_action(const FinDimAlgebra::Ptr& a, const std::vector<Mat>& action);

    Mat action_basis(int i) const;
    Mat action_elt(const FinDimAlgebra::Elt& x) const;
    std::vector<Mat> all_basis_actions() const;

    void audit_unit() const;
    /// rho(e_i) rho(e_j) = sum_k c_ij^k rho(e_k) on all basis pairs.
    void audit_full() const;
};

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);
ModuleRep direct_sum_many(const FinDimAlgebra::Ptr& a, const std::vector<ModuleRep>& parts);
/// Transport along an invertible change of coordinates: rho'(g) = C^{-1} rho(g) C.
ModuleRep change_basis(const ModuleRep& m, const Mat& c);

struct SubmoduleResult {
    ModuleRep sub;
    Mat inclusion;  // dim(m) x dim(sub)
};
/// Submodule spanned by the given independent, invariant columns.
SubmoduleResult submodule(const ModuleRep& m, const Mat& basis_cols);

struct QuotientModule {
    ModuleRep quot;
    Mat projection;  // dim(quot) x dim(m)
    Mat section;     // dim(m) x dim(quot)
};
QuotientModule quotient_module(const ModuleRep& m, const Mat& sub_basis_cols);

/// Basis of J*M.
Mat radical_submodule(const ModuleRep& m);

/// Basis of the space of A-linear maps M -> N (as dim(N) x dim(M) matrices).
std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n);

enum class Tri { Yes, No, Undecided };

struct IsoResult {
    Tri verdict = Tri::Undecided;
    std::optional<Mat> witness;
};

/// Module isomorphism test: exhaustive over the Hom space when |k|^h fits
/// the bound, randomized (with budget) otherwise; No is only returned when
/// definitive, Undecided otherwise.
IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::mt19937_64& rng,
                        long enum_bound = 1 << 20, int q_budget = 64);

/// Vertex dimensions and arrow matrices of a path-algebra module.
struct QuiverRepData {
    std::vector<int> vert_dims;
    std::vector<Mat> arrow_mats;
    Mat change;  // columns: adapted basis of m, vertex blocks in order
};
QuiverRepData to_quiver_rep(const ModuleRep& m);

}  // namespace dgm

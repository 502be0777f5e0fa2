#pragma once

#include "dgmoduli/wedderburn.hpp"

namespace dgm {

struct CoverResult {
    ModuleRep p;                 // projective cover
    Mat onto;                    // dim(M) x dim(P), surjective
    std::vector<int> summands;   // indices into simples_and_projectives, one per summand copy
};

/// Minimal projective cover P(M) ->> M.
CoverResult projective_cover(const ModuleRep& m);

struct ResolutionVerdict {
    enum class Kind { Terminated, Periodic, CutoffReached } kind = Kind::Terminated;
    int length = 0;           // for Terminated: minimal resolution length
    int period_from = 0;      // for Periodic: syzygy indices with Omega^{to} = Omega^{from}
    int period_to = 0;
    std::optional<Mat> witness;  // isomorphism between the two syzygies
};

struct ProjResolution {
    ModuleRep module;
    std::vector<ModuleRep> terms;            // P_0, P_1, ... (homological indexing)
    std::vector<Mat> maps;                   // maps[0]: P_0 ->> M; maps[i]: P_i -> P_{i-1}
    std::vector<std::vector<int>> summands;  // per term
    std::vector<ModuleRep> syzygies;         // Omega^1, Omega^2, ... (as found)
    Mat last_inclusion;                      // newest syzygy inside its ambient term
    ResolutionVerdict verdict;
};

/// Minimal projective resolution by iterated covers, with syzygy-periodicity
/// detection.  Periodic is only reported with a verified isomorphism witness.
ProjResolution projective_resolution(const ModuleRep& m, int cutoff, unsigned long seed = 0);

}  // namespace dgm

#include "dgmoduli/resolution.hpp"

namespace dgm {

CoverResult projective_cover(const ModuleRep& m) {
    const auto& sps = simples_and_projectives(m.algebra);
    const Ring& f = m.algebra->field;

    CoverResult out;
    out.p = ModuleRep::zero(m.algebra);
    out.onto = Mat(f, m.dim, 0);
    if (m.dim == 0) return out;

    Mat jm = radical_submodule(m);
    QuotientModule top = quotient_module(m, jm);

    for (size_t i = 0; i < sps.size(); ++i) {
        const ModuleRep& pi = sps[i].projective;
        std::vector<Mat> lifts = hom_space(pi, m);
        if (lifts.empty()) continue;
        // keep lifts whose images in Hom(P_i, top) are independent
        Mat imgs(f, top.quot.dim * pi.dim, static_cast<int>(lifts.size()));
        for (size_t c = 0; c < lifts.size(); ++c) {
            Mat t = top.projection * lifts[c];
            for (int r = 0; r < t.rows(); ++r)
                for (int s = 0; s < t.cols(); ++s)
                    imgs.set_raw(r * pi.dim + s, static_cast<int>(c), t.at(r, s));
        }
        GaussResult g = gauss_decompose(imgs);
        for (int c : g.pivots) {
            out.p = direct_sum(out.p, pi);
            out.onto = out.onto.hstack(lifts[c]);
            out.summands.push_back(static_cast<int>(i));
        }
    }
    if (rank_of(out.onto) != m.dim) throw InternalError("projective cover is not surjective");
    return out;
}

ProjResolution projective_resolution(const ModuleRep& m, int cutoff, unsigned long seed) {
    if (cutoff < 0) throw InputError("resolution cutoff must be nonnegative");
    std::mt19937_64 rng(seed);

    ProjResolution res;
    res.module = m;
    if (m.dim == 0) {
        res.verdict.kind = ResolutionVerdict::Kind::Terminated;
        res.verdict.length = -1;  // empty resolution of the zero module
        return res;
    }
    ModuleRep current = m;
    for (int step = 0; step <= cutoff; ++step) {
        CoverResult cover = projective_cover(current);
        Mat ker = gauss_decompose(cover.onto).kernel;
        SubmoduleResult syz = submodule(cover.p, ker);

        Mat map_to_prev = cover.onto;  // onto M for the first term
        if (!res.terms.empty()) map_to_prev = res.last_inclusion * cover.onto;
        res.terms.push_back(cover.p);
        res.maps.push_back(map_to_prev);
        res.summands.push_back(cover.summands);
        res.last_inclusion = syz.inclusion;

        if (syz.sub.dim == 0) {
            res.verdict.kind = ResolutionVerdict::Kind::Terminated;
            res.verdict.length = static_cast<int>(res.terms.size()) - 1;
            return res;
        }
        // periodicity against every earlier syzygy (only a verified
        // isomorphism may produce the Periodic verdict)
        for (size_t k = 0; k < res.syzygies.size(); ++k) {
            if (res.syzygies[k].dim != syz.sub.dim) continue;
            IsoResult iso = is_isomorphic(res.syzygies[k], syz.sub, rng);
            if (iso.verdict == Tri::Yes) {
                res.syzygies.push_back(syz.sub);
                res.verdict.kind = ResolutionVerdict::Kind::Periodic;
                res.verdict.period_from = static_cast<int>(k) + 1;
                res.verdict.period_to = static_cast<int>(res.syzygies.size());
                res.verdict.witness = iso.witness;
                return res;
            }
        }
        res.syzygies.push_back(syz.sub);
        current = syz.sub;
    }
    res.verdict.kind = ResolutionVerdict::Kind::CutoffReached;
    res.verdict.length = static_cast<int>(res.terms.size());
    return res;
}

}  // namespace dgm

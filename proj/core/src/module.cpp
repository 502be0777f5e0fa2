#include "dgmoduli/module.hpp"

#include <map>

namespace dgm {

ModuleRep ModuleRep::make(FinDimAlgebra::Ptr a, std::vector<Mat> gen_action) {
    ModuleRep m;
    m.algebra = std::move(a);
    if (gen_action.size() != m.algebra->gens.size())
        throw InputError("module: one action matrix per algebra generator required");
    m.dim = gen_action.empty() ? 0 : gen_action[0].rows();
    for (const auto& g : gen_action) {
        if (g.rows() != m.dim || g.cols() != m.dim) throw InputError("module: action matrices must be square of equal size");
        require_same_ring(g.ring(), m.algebra->field, "module action");
    }
    m.gen_action = std::move(gen_action);
    if (m.dim > 0) {
        m.audit_unit();
        // full audit is quartic-ish; run automatically at desk scale
        long cost = static_cast<long>(m.algebra->dim) * m.algebra->dim * m.dim * m.dim;
        if (cost > 0 && cost <= 1'000'000) m.audit_full();
    }
    return m;
}

ModuleRep ModuleRep::zero(FinDimAlgebra::Ptr a) {
    ModuleRep m;
    m.algebra = std::move(a);
    m.dim = 0;
    m.gen_action.assign(m.algebra->gens.size(), Mat(m.algebra->field, 0, 0));
    return m;
}

ModuleRep ModuleRep::regular(FinDimAlgebra::Ptr a) {
    std::vector<Mat> act;
    for (const auto& g : a->gens) act.push_back(a->left_mult(g));
    return make(a, std::move(act));
}

ModuleRep ModuleRep::from_quiver_rep(const FinDimAlgebra::Ptr& a, const std::vector<int>& vert_dims,
                                     const std::vector<Mat>& arrow_mats) {
    if (!a->path_data) throw InputError("quiver representation requires a path algebra");
    const Quiver& q = a->path_data->quiver;
    const int nv = static_cast<int>(q.vertices.size());
    if (static_cast<int>(vert_dims.size()) != nv) throw InputError("quiver rep: one dimension per vertex");
    if (arrow_mats.size() != q.arrows.size()) throw InputError("quiver rep: one matrix per arrow");
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + vert_dims[v];
    const int dim = offset[nv];

    // generator layout of path_algebra(): trivial paths first, then arrows
    std::vector<Mat> act;
    for (int v = 0; v < nv; ++v) {
        Mat e(a->field, dim, dim);
        for (int i = 0; i < vert_dims[v]; ++i) e.set_raw(offset[v] + i, offset[v] + i, 1);
        act.push_back(e);
    }
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int s = q.vertex_index(q.arrows[ai].source), t = q.vertex_index(q.arrows[ai].target);
        const Mat& f = arrow_mats[ai];
        if (f.rows() != vert_dims[t] || f.cols() != vert_dims[s])
            throw InputError("quiver rep: arrow " + q.arrows[ai].name + " has wrong shape");
        Mat g(a->field, dim, dim);
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) g.set(offset[t] + i, offset[s] + j, f.at(i, j));
        act.push_back(g);
    }
    return make(a, std::move(act));
}

ModuleRep ModuleRep::from_basis_action(const FinDimAlgebra::Ptr& a, const std::vector<Mat>& action) {
    if (static_cast<int>(action.size()) != a->dim) throw InputError("one action matrix per basis element required");
    // the default generating set of a general algebra is its basis; for
    // constructed algebras pick out the generator words of length one
    std::vector<Mat> act;
    const int d = action.empty() ? 0 : action[0].rows();
    for (const auto& g : a->gens) {
        Mat m(a->field, d, d);
        for (int i = 0; i < a->dim; ++i)
            if (g[i] != 0) m = m + action[i].scaled(g[i]);
        act.push_back(m);
    }
    ModuleRep rep = make(a, std::move(act));
    // verify the provided table matches the generator reconstruction
    long cost = static_cast<long>(a->dim) * d * d;
    if (cost <= 2'000'000)
        for (int i = 0; i < a->dim; ++i)
            if (rep.action_basis(i) != action[i])
                throw InputError("module action table is not an algebra morphism");
    return rep;
}

Mat ModuleRep::action_basis(int i) const {
    Mat m = Mat::identity(algebra->field, dim);
    for (int w : algebra->words[i]) m = m * gen_action[w];
    return m;
}

Mat ModuleRep::action_elt(const FinDimAlgebra::Elt& x) const {
    Mat m(algebra->field, dim, dim);
    for (int i = 0; i < algebra->dim; ++i)
        if (x[i] != 0) m = m + action_basis(i).scaled(x[i]);
    return m;
}

std::vector<Mat> ModuleRep::all_basis_actions() const {
    std::vector<Mat> out;
    out.reserve(algebra->dim);
    for (int i = 0; i < algebra->dim; ++i) out.push_back(action_basis(i));
    return out;
}

void ModuleRep::audit_unit() const {
    if (action_elt(algebra->unit) != Mat::identity(algebra->field, dim))
        throw InputError("module audit: unit does not act as identity");
}

void ModuleRep::audit_full() const {
    audit_unit();
    std::vector<Mat> act = all_basis_actions();
    for (int i = 0; i < algebra->dim; ++i)
        for (int j = 0; j < algebra->dim; ++j) {
            Mat lhs = act[i] * act[j];
            Mat rhs(algebra->field, dim, dim);
            for (const auto& t : algebra->prod(i, j)) rhs = rhs + act[t.k].scaled(t.c);
            if (lhs != rhs)
                throw InputError("module audit: action is not an algebra morphism at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
    if (m.algebra != n.algebra) throw InputError("direct sum: algebra mismatch");
    ModuleRep s;
    s.algebra = m.algebra;
    s.dim = m.dim + n.dim;
    for (size_t g = 0; g < m.gen_action.size(); ++g)
        s.gen_action.push_back(m.gen_action[g].dsum(n.gen_action[g]));
    return s;
}

ModuleRep direct_sum_many(const FinDimAlgebra::Ptr& a, const std::vector<ModuleRep>& parts) {
    ModuleRep s = ModuleRep::zero(a);
    for (const auto& p : parts) s = direct_sum(s, p);
    return s;
}

ModuleRep change_basis(const ModuleRep& m, const Mat& c) {
    std::optional<Mat> cinv = solve(c, Mat::identity(m.algebra->field, m.dim));
    if (!cinv || c.rows() != c.cols()) throw InputError("change_basis: invertible matrix required");
    ModuleRep r;
    r.algebra = m.algebra;
    r.dim = m.dim;
    for (const auto& g : m.gen_action) r.gen_action.push_back(*cinv * g * c);
    return r;
}

SubmoduleResult submodule(const ModuleRep& m, const Mat& basis_cols) {
    SubmoduleResult out;
    out.inclusion = basis_cols;
    out.sub.algebra = m.algebra;
    out.sub.dim = basis_cols.cols();
    for (const auto& g : m.gen_action) {
        std::optional<Mat> coords = solve(basis_cols, g * basis_cols);
        if (!coords) throw InputError("submodule: columns are not invariant");
        out.sub.gen_action.push_back(*coords);
    }
    return out;
}

QuotientModule quotient_module(const ModuleRep& m, const Mat& sub_basis_cols) {
    const Ring& f = m.algebra->field;
    GaussResult gs = gauss_decompose(sub_basis_cols);
    Mat sub = gs.image;
    GaussResult g = gauss_decompose(sub.hstack(Mat::identity(f, m.dim)));
    std::vector<int> comp;
    for (int p : g.pivots)
        if (p >= sub.cols()) comp.push_back(p - sub.cols());
    const int qd = static_cast<int>(comp.size());
    Mat section(f, m.dim, qd);
    for (int c = 0; c < qd; ++c) section.set_raw(comp[c], c, 1);
    Mat full = sub.hstack(section);
    Mat inv = *solve(full, Mat::identity(f, m.dim));
    Mat projection(f, qd, m.dim);
    for (int r = 0; r < qd; ++r)
        for (int c = 0; c < m.dim; ++c) projection.set_raw(r, c, inv.at(sub.cols() + r, c));

    QuotientModule out;
    out.projection = projection;
    out.section = section;
    out.quot.algebra = m.algebra;
    out.quot.dim = qd;
    for (const auto& ga : m.gen_action) out.quot.gen_action.push_back(projection * ga * section);
    return out;
}

Mat radical_submodule(const ModuleRep& m) {
    const Mat& j = m.algebra->radical();
    Mat cols(m.algebra->field, m.dim, 0);
    for (int c = 0; c < j.cols(); ++c) {
        FinDimAlgebra::Elt x(m.algebra->dim);
        for (int r = 0; r < m.algebra->dim; ++r) x[r] = j.at(r, c);
        cols = cols.hstack(m.action_elt(x));
    }
    if (cols.cols() == 0) return Mat(m.algebra->field, m.dim, 0);
    return gauss_decompose(cols).image;
}

namespace {

// Kernel refinement: candidates K (columns = coordinate vectors of maps),
// constrain by "rho_N(g) f = f rho_M(g)" for each generator.
std::vector<Mat> hom_space_on(const ModuleRep& m, const ModuleRep& n,
                              const std::vector<Mat>& candidates) {
    const Ring& f = m.algebra->field;
    std::vector<Mat> cur = candidates;
    for (size_t g = 0; g < m.gen_action.size() && !cur.empty(); ++g) {
        Mat rows(f, n.dim * m.dim, static_cast<int>(cur.size()));
        for (size_t c = 0; c < cur.size(); ++c) {
            Mat defect = n.gen_action[g] * cur[c] - cur[c] * m.gen_action[g];
            for (int i = 0; i < n.dim; ++i)
                for (int j = 0; j < m.dim; ++j)
                    rows.set_raw(i * m.dim + j, static_cast<int>(c), defect.at(i, j));
        }
        Mat ker = gauss_decompose(rows).kernel;
        std::vector<Mat> next;
        for (int kc = 0; kc < ker.cols(); ++kc) {
            Mat comb(f, n.dim, m.dim);
            for (size_t c = 0; c < cur.size(); ++c) {
                const mpq_class& w = ker.at(static_cast<int>(c), kc);
                if (w != 0) comb = comb + cur[c].scaled(w);
            }
            next.push_back(comb);
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n) {
    if (m.algebra != n.algebra) throw InputError("hom_space: algebra mismatch");
    const Ring& f = m.algebra->field;
    if (m.dim == 0 || n.dim == 0) return {};

    std::vector<Mat> seed;
    if (!m.algebra->orth_idempotents.empty()) {
        // maps respect the block decomposition by a complete orthogonal
        // idempotent family: seed only with block-diagonal unknowns
        for (const auto& u : m.algebra->orth_idempotents) {
            Mat pm = m.action_elt(u), pn = n.action_elt(u);
            Mat bm = pm.is_zero() ? Mat(f, m.dim, 0) : gauss_decompose(pm).image;
            Mat bn = pn.is_zero() ? Mat(f, n.dim, 0) : gauss_decompose(pn).image;
            // the rank-one maps bn_i (bm_j^T pm) span every map supported on
            // this block; A-linear maps are block-preserving
            for (int i = 0; i < bn.cols(); ++i)
                for (int j = 0; j < bm.cols(); ++j)
                    seed.push_back(bn.col(i) * bm.col(j).transpose() * pm);
        }
    }
    if (seed.empty()) {
        for (int i = 0; i < n.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                Mat e(f, n.dim, m.dim);
                e.set_raw(i, j, 1);
                seed.push_back(e);
            }
    }
    std::vector<Mat> sol = hom_space_on(m, n, seed);
    // normalize to an independent spanning set
    if (sol.empty()) return sol;
    Mat stack(f, n.dim * m.dim, static_cast<int>(sol.size()));
    for (size_t c = 0; c < sol.size(); ++c)
        for (int i = 0; i < n.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                stack.set_raw(i * m.dim + j, static_cast<int>(c), sol[c].at(i, j));
    GaussResult g = gauss_decompose(stack);
    std::vector<Mat> out;
    for (int c : g.pivots) out.push_back(sol[c]);
    return out;
}

IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::mt19937_64& rng,
                        long enum_bound, int q_budget) {
    if (m.algebra != n.algebra) throw InputError("is_isomorphic: algebra mismatch");
    if (m.dim != n.dim) return {Tri::No, std::nullopt};
    if (m.dim == 0) return {Tri::Yes, Mat(m.algebra->field, 0, 0)};
    const Ring& f = m.algebra->field;

    std::vector<Mat> hom = hom_space(m, n);
    const int h = static_cast<int>(hom.size());
    if (h == 0) return {Tri::No, std::nullopt};
    // iso-invariant dimension counts refute cheaply
    if (hom_space(m, m).size() != hom_space(n, m).size() ||
        hom_space(n, n).size() != static_cast<size_t>(h))
        return {Tri::No, std::nullopt};

    auto check = [&](const Mat& cand) -> bool { return rank_of(cand) == m.dim; };

    if (f.kind == RingKind::Fp) {
        // exhaustive when p^h fits the bound
        double logsz = h * std::log2(static_cast<double>(f.p));
        if (logsz <= std::log2(static_cast<double>(enum_bound))) {
            std::vector<long> idx(h, 0);
            while (true) {
                Mat cand(f, n.dim, m.dim);
                bool nonzero = false;
                for (int c = 0; c < h; ++c)
                    if (idx[c] != 0) {
                        cand = cand + hom[c].scaled(idx[c]);
                        nonzero = true;
                    }
                if (nonzero && check(cand)) return {Tri::Yes, cand};
                int c = 0;
                while (c < h && ++idx[c] == f.p) idx[c++] = 0;
                if (c == h) break;
            }
            return {Tri::No, std::nullopt};
        }
        for (int t = 0; t < 256; ++t) {
            Mat cand(f, n.dim, m.dim);
            for (int c = 0; c < h; ++c) cand = cand + hom[c].scaled(static_cast<long>(rng() % f.p));
            if (check(cand)) return {Tri::Yes, cand};
        }
        return {Tri::Undecided, std::nullopt};
    }
    // Q: randomized with small integer coefficients (dense invertible locus)
    for (int t = 0; t < q_budget; ++t) {
        Mat cand(f, n.dim, m.dim);
        for (int c = 0; c < h; ++c) {
            long w = (t == 0) ? 1 : static_cast<long>(rng() % 7) - 3;
            if (w != 0) cand = cand + hom[c].scaled(w);
        }
        if (check(cand)) return {Tri::Yes, cand};
    }
    return {Tri::Undecided, std::nullopt};
}

QuiverRepData to_quiver_rep(const ModuleRep& m) {
    if (!m.algebra->path_data) throw InputError("to_quiver_rep requires a path algebra module");
    const Quiver& q = m.algebra->path_data->quiver;
    const int nv = static_cast<int>(q.vertices.size());
    const Ring& f = m.algebra->field;

    QuiverRepData out;
    std::vector<Mat> bases;
    Mat change(f, m.dim, 0);
    for (int v = 0; v < nv; ++v) {
        Mat pv = m.gen_action[v];
        Mat basis = pv.is_zero() ? Mat(f, m.dim, 0) : gauss_decompose(pv).image;
        bases.push_back(basis);
        out.vert_dims.push_back(basis.cols());
        change = change.hstack(basis);
    }
    if (change.cols() != m.dim) throw InputError("to_quiver_rep: vertex blocks do not span the module");
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int s = q.vertex_index(q.arrows[ai].source), t = q.vertex_index(q.arrows[ai].target);
        const Mat& rho = m.gen_action[nv + static_cast<int>(ai)];
        Mat img = rho * bases[s];
        std::optional<Mat> coords =
            bases[t].cols() == 0 ? std::make_optional(Mat(f, 0, bases[s].cols())) : solve(bases[t], img);
        if (!coords) throw InputError("to_quiver_rep: arrow action leaves the target block");
        out.arrow_mats.push_back(*coords);
    }
    out.change = change;
    return out;
}

}  // namespace dgm

#include "dgmoduli/wedderburn.hpp"

#include <cmath>

namespace dgm {

namespace {

using Elt = FinDimAlgebra::Elt;

Elt col_to_elt(const Mat& m, int c) {
    Elt e(m.rows());
    for (int r = 0; r < m.rows(); ++r) e[r] = m.at(r, c);
    return e;
}

Mat elt_to_col(const Ring& f, const Elt& e) { return Mat::col_vector(f, e); }

// Minimal polynomial of u in the corner algebra with unit e (monic).
Poly min_poly_in(const FinDimAlgebra& s, const Elt& e, const Elt& u) {
    const Ring& f = s.field;
    Mat cols = elt_to_col(f, e);
    Elt pw = e;
    for (int k = 1; k <= s.dim + 1; ++k) {
        pw = s.mul(pw, u);
        std::optional<Mat> dep = solve(cols, elt_to_col(f, pw));
        if (dep) {
            std::vector<mpq_class> c(k + 1, mpq_class(0));
            for (int i = 0; i < k; ++i) c[i] = -dep->at(i, 0);
            c[k] = 1;
            return p_make(f, std::move(c));
        }
        cols = cols.hstack(elt_to_col(f, pw));
    }
    throw InternalError("minimal polynomial search exceeded dimension");
}

Elt eval_poly_elt(const FinDimAlgebra& s, const Poly& p, const Elt& u, const Elt& e) {
    Elt acc = s.zero_elt();
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = s.mul(acc, u);
        if (*it != 0) acc = s.add(acc, s.scale(*it, e));
    }
    return acc;
}

// Split e (an idempotent of the commutative frame) along the spectrum of u.
std::vector<Elt> lagrange_split(const FinDimAlgebra& s, const Elt& e, const Elt& u) {
    Poly m = min_poly_in(s, e, u);
    if (m.deg() <= 1) return {e};
    std::vector<mpq_class> roots = field_roots(m);
    if (static_cast<int>(roots.size()) != m.deg())
        throw PreconditionError(s.name + ": center does not split over " + s.field.str());
    std::vector<Elt> parts;
    for (const auto& c : roots) {
        Elt ec = e;
        for (const auto& c2 : roots) {
            if (c2 == c) continue;
            // ec *= (u - c2 e)/(c - c2)
            Elt factor = s.sub(u, s.scale(c2, e));
            ec = s.scale(field_inv(s.field, s.norm(c - c2)), s.mul(ec, factor));
        }
        if (!s.is_zero_elt(ec)) parts.push_back(ec);
    }
    return parts;
}

Mat corner_basis(const FinDimAlgebra& s, const Elt& e) {
    Mat cols(s.field, s.dim, 0);
    for (int i = 0; i < s.dim; ++i)
        cols = cols.hstack(elt_to_col(s.field, s.mul(s.mul(e, s.basis_elt(i)), e)));
    GaussResult g = gauss_decompose(cols);
    return g.image;
}

}  // namespace

const SemisimpleData& semisimple_data(const FinDimAlgebra::Ptr& a) {
    {
        std::lock_guard<std::mutex> lock(a->cache_mutex);
        if (a->semisimple_cache)
            return *std::static_pointer_cast<SemisimpleData>(a->semisimple_cache);
    }
    auto data = std::make_shared<SemisimpleData>();
    data->quotient = quotient_algebra(a, a->radical());
    const FinDimAlgebra& s = *data->quotient.algebra;
    const Ring& f = s.field;

    // center of S: x with e_i x = x e_i for all basis elements
    Mat constr(f, 0, s.dim);
    for (int i = 0; i < s.dim; ++i) {
        Mat d = s.left_mult_basis(i) - s.right_mult(s.basis_elt(i));
        constr = constr.rows() == 0 ? d : constr.vstack(d);
    }
    data->center = gauss_decompose(constr).kernel;

    // splitting frame: over F_p the Frobenius-fixed part of the center, over
    // Q the center basis itself (with rational-root splitting)
    std::vector<Elt> frame;
    if (f.kind == RingKind::Fp) {
        const int zd = data->center.cols();
        Mat phi(f, zd, zd);
        for (int c = 0; c < zd; ++c) {
            Elt z = col_to_elt(data->center, c);
            Elt zp = s.power(z, mpz_class(f.p));
            std::optional<Mat> coords = solve(data->center, elt_to_col(f, zp));
            if (!coords) throw InternalError("Frobenius does not preserve the center");
            for (int r = 0; r < zd; ++r) phi.set_raw(r, c, coords->at(r, 0));
        }
        Mat fixed = gauss_decompose(phi - Mat::identity(f, zd)).kernel;
        for (int c = 0; c < fixed.cols(); ++c) {
            Elt z = s.zero_elt();
            for (int r = 0; r < zd; ++r)
                if (fixed.at(r, c) != 0) z = s.add(z, s.scale(fixed.at(r, c), col_to_elt(data->center, r)));
            frame.push_back(z);
        }
    } else {
        for (int c = 0; c < data->center.cols(); ++c) frame.push_back(col_to_elt(data->center, c));
    }

    std::vector<Elt> comps = {s.unit};
    for (const Elt& v : frame) {
        std::vector<Elt> next;
        for (const Elt& e : comps) {
            Elt u = s.mul(v, e);
            for (auto& part : lagrange_split(s, e, u)) next.push_back(std::move(part));
        }
        comps = std::move(next);
    }

    for (const Elt& e : comps) {
        WedderburnBlock b;
        b.central_idempotent = e;
        b.block_dim = corner_basis(s, e).cols();
        Mat zcols(f, s.dim, 0);
        for (int c = 0; c < data->center.cols(); ++c)
            zcols = zcols.hstack(elt_to_col(f, s.mul(col_to_elt(data->center, c), e)));
        b.center_dim = zcols.cols() == 0 ? 0 : rank_of(zcols);
        if (b.center_dim > 0 && b.block_dim % b.center_dim == 0) {
            int nn = b.block_dim / b.center_dim;
            int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(nn))));
            b.matrix_size = (r * r == nn) ? r : 0;
        }
        if (b.matrix_size == 0)
            throw InternalError("semisimple block with non-square reduced dimension");
        data->blocks.push_back(std::move(b));
    }
    std::lock_guard<std::mutex> lock(a->cache_mutex);
    if (!a->semisimple_cache) a->semisimple_cache = data;
    return *std::static_pointer_cast<SemisimpleData>(a->semisimple_cache);
}

mpz_class gl_order(const mpz_class& q, int n) {
    mpz_class qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
    mpz_class order = 1;
    mpz_class qk = 1;
    for (int k = 0; k < n; ++k) {
        order *= (qn - qk);
        qk *= q;
    }
    return order;
}

mpz_class unit_group_order_enumerate(const FinDimAlgebra::Ptr& a) {
    if (a->field.kind != RingKind::Fp)
        throw PreconditionError("unit enumeration needs a prime field");
    const long p = a->field.p;
    std::vector<Mat> lm;
    for (int i = 0; i < a->dim; ++i) lm.push_back(a->left_mult_basis(i));
    std::vector<long> idx(a->dim, 0);
    mpz_class count = 0;
    while (true) {
        Mat l(a->field, a->dim, a->dim);
        bool nonzero = false;
        for (int i = 0; i < a->dim; ++i)
            if (idx[i] != 0) {
                l = l + lm[i].scaled(idx[i]);
                nonzero = true;
            }
        if (nonzero && rank_of(l) == a->dim) ++count;
        int c = 0;
        while (c < a->dim && ++idx[c] == p) idx[c++] = 0;
        if (c == a->dim) break;
    }
    return count;
}

mpz_class unit_group_order(const FinDimAlgebra::Ptr& a, const mpz_class& enum_bound) {
    if (a->field.kind != RingKind::Fp)
        throw PreconditionError("unit counting is defined over prime fields only");
    if (a->radical_available()) {
        const SemisimpleData& ss = semisimple_data(a);
        const int jdim = a->dim - ss.quotient.algebra->dim;
        mpz_class order;
        mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(a->field.p),
                      static_cast<unsigned long>(jdim));
        for (const auto& b : ss.blocks) {
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(a->field.p),
                          static_cast<unsigned long>(b.center_dim));
            order *= gl_order(q, b.matrix_size);
        }
        return order;
    }
    mpz_class size;
    mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(a->field.p),
                  static_cast<unsigned long>(a->dim));
    if (size <= enum_bound) return unit_group_order_enumerate(a);
    throw PreconditionError("unit counting unsupported at these parameters (p=" +
                            std::to_string(a->field.p) + ", dim=" + std::to_string(a->dim) + ")");
}

namespace {

// One primitive idempotent inside the corner algebra of e (block must be
// split: recursion bottoms out at one-dimensional corners).
Elt primitive_in_corner(const FinDimAlgebra& s, const Elt& e, std::mt19937_64& rng) {
    Mat basis = corner_basis(s, e);
    if (basis.cols() == 1) return e;
    const Ring& f = s.field;
    for (int attempt = 0; attempt < 256; ++attempt) {
        Elt y;
        if (attempt < basis.cols()) {
            y = col_to_elt(basis, attempt);
        } else {
            y = s.zero_elt();
            for (int c = 0; c < basis.cols(); ++c) {
                long w = (f.kind == RingKind::Fp) ? static_cast<long>(rng() % f.p)
                                                  : static_cast<long>(rng() % 7) - 3;
                if (w != 0) y = s.add(y, s.scale(w, col_to_elt(basis, c)));
            }
        }
        if (s.is_zero_elt(y)) continue;
        Poly m = min_poly_in(s, e, y);
        for (const auto& c : field_roots(m)) {
            // m = (t-c)^a g with g(c) != 0; Bezout gives the spectral idempotent
            Poly lin = p_x_minus(f, c);
            Poly f1 = p_const(f, 1), g = m;
            while (true) {
                auto [q, r] = p_divmod(g, lin);
                if (!r.is_zero()) break;
                f1 = p_mul(f1, lin);
                g = q;
            }
            if (g.deg() <= 0 || f1.deg() <= 0) continue;
            XgcdResult x = p_xgcd(f1, g);
            if (x.g.deg() != 0) continue;
            Elt eprime = eval_poly_elt(s, p_mul(x.u, f1), y, e);  // projector onto the g-part
            if (s.is_zero_elt(eprime) || eprime == e) continue;
            if (s.mul(eprime, eprime) != eprime) throw InternalError("spectral idempotent failed");
            Mat cb = corner_basis(s, eprime);
            Elt other = s.sub(e, eprime);
            Mat ob = corner_basis(s, other);
            // recurse into the smaller corner
            if (cb.cols() <= ob.cols()) return primitive_in_corner(s, eprime, rng);
            return primitive_in_corner(s, other, rng);
        }
    }
    throw PreconditionError(s.name + ": failed to split a semisimple block (non-split over " +
                            f.str() + "?)");
}

Elt lift_idempotent(const FinDimAlgebra& a, Elt x) {
    // Newton iteration x <- 3x^2 - 2x^3 converges along the nilpotent radical
    for (int it = 0; it < 64; ++it) {
        Elt x2 = a.mul(x, x);
        if (x2 == x) return x;
        Elt x3 = a.mul(x2, x);
        x = a.sub(a.scale(3, x2), a.scale(2, x3));
    }
    throw InternalError("idempotent lifting did not converge");
}

}  // namespace

const std::vector<SimpleProj>& simples_and_projectives(const FinDimAlgebra::Ptr& a) {
    {
        std::lock_guard<std::mutex> lock(a->cache_mutex);
        if (a->simples_cache)
            return *std::static_pointer_cast<std::vector<SimpleProj>>(a->simples_cache);
    }
    const SemisimpleData& ss = semisimple_data(a);
    const FinDimAlgebra& s = *ss.quotient.algebra;
    std::mt19937_64 rng(0);  // splitting is randomized but reproducible

    auto result = std::make_shared<std::vector<SimpleProj>>();
    for (size_t bi = 0; bi < ss.blocks.size(); ++bi) {
        const auto& blk = ss.blocks[bi];
        if (blk.center_dim != 1)
            throw PreconditionError(a->name + ": non-split simple block over " + a->field.str() +
                                    " is unsupported");
        Elt prim = primitive_in_corner(s, blk.central_idempotent, rng);
        // lift through the radical
        Mat lift_col = ss.quotient.section * elt_to_col(a->field, prim);
        Elt f = lift_idempotent(*a, col_to_elt(lift_col, 0));

        // P = A f
        Mat cols = a->right_mult(f);
        Mat pbasis = gauss_decompose(cols).image;
        SubmoduleResult sub = submodule(ModuleRep::regular(a), pbasis);

        SimpleProj sp;
        sp.projective = sub.sub;
        sp.idempotent = f;
        sp.block = static_cast<int>(bi);
        sp.multiplicity = blk.matrix_size;
        Mat jm = radical_submodule(sp.projective);
        sp.simple = quotient_module(sp.projective, jm).quot;
        result->push_back(std::move(sp));
    }
    // audit: regular module dimensions add up
    int total = 0;
    for (const auto& sp : *result) total += sp.multiplicity * sp.projective.dim;
    if (total != a->dim) throw InternalError("projective decomposition does not fill the algebra");

    std::lock_guard<std::mutex> lock(a->cache_mutex);
    if (!a->simples_cache) a->simples_cache = result;
    return *std::static_pointer_cast<std::vector<SimpleProj>>(a->simples_cache);
}

std::vector<int> top_multiplicities(const ModuleRep& m) {
    const auto& sps = simples_and_projectives(m.algebra);
    std::vector<int> mult(sps.size(), 0);
    if (m.dim == 0) return mult;
    Mat jm = radical_submodule(m);
    ModuleRep top = quotient_module(m, jm).quot;
    if (top.dim == 0) return mult;
    for (size_t i = 0; i < sps.size(); ++i)
        mult[i] = static_cast<int>(hom_space(sps[i].projective, top).size());
    return mult;
}

}  // namespace dgm

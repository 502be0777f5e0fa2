#include "dgmoduli/algebra.hpp"

#include <map>
#include <set>

namespace dgm {

FinDimAlgebra::Ptr FinDimAlgebra::make(Ring field, std::vector<std::string> basis,
                                       std::vector<std::vector<Term>> sc_in, Elt unit,
                                       std::string name, bool audit) {
    if (!field.is_field()) throw InputError("algebra coefficients must form a field");
    auto a = std::make_shared<FinDimAlgebra>();
    a->field = field;
    a->dim = static_cast<int>(basis.size());
    if (a->dim == 0) throw InputError("zero-dimensional algebra rejected");
    a->basis = std::move(basis);
    if (sc_in.size() != static_cast<size_t>(a->dim) * a->dim)
        throw InputError("structure constant table has wrong size");
    a->sc = std::move(sc_in);
    for (auto& terms : a->sc)
        for (auto& t : terms) {
            if (t.k < 0 || t.k >= a->dim) throw InputError("structure constant index out of range");
            t.c = a->norm(t.c);
        }
    if (unit.size() != static_cast<size_t>(a->dim)) throw InputError("unit vector has wrong size");
    for (auto& c : unit) c = a->norm(c);
    a->unit = std::move(unit);
    a->name = std::move(name);
    // default generating set: the basis itself
    for (int i = 0; i < a->dim; ++i) {
        a->gens.push_back(a->basis_elt(i));
        a->words.push_back({i});
    }
    // a full triple audit is cubic; run it automatically at desk scale
    if (audit && static_cast<long>(a->dim) * a->dim * a->dim <= 2'000'000) a->audit_structure();
    return a;
}

mpq_class FinDimAlgebra::norm(const mpq_class& v) const {
    if (field.kind != RingKind::Fp) return v;
    mpz_class p(field.p);
    if (v.get_den() == 1) {
        mpz_class r = v.get_num() % p;
        if (r < 0) r += p;
        return mpq_class(r);
    }
    mpz_class num = v.get_num() % p, den = v.get_den() % p, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InputError("denominator not invertible mod " + std::to_string(field.p));
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

FinDimAlgebra::Elt FinDimAlgebra::basis_elt(int i) const {
    Elt e = zero_elt();
    e[i] = 1;
    return e;
}

FinDimAlgebra::Elt FinDimAlgebra::mul(const Elt& x, const Elt& y) const {
    Elt r = zero_elt();
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            const mpq_class xy = x[i] * y[j];
            for (const Term& t : prod(i, j)) r[t.k] += xy * t.c;
        }
    }
    for (auto& c : r) c = norm(c);
    return r;
}

FinDimAlgebra::Elt FinDimAlgebra::add(const Elt& x, const Elt& y) const {
    Elt r(dim);
    for (int i = 0; i < dim; ++i) r[i] = norm(x[i] + y[i]);
    return r;
}

FinDimAlgebra::Elt FinDimAlgebra::sub(const Elt& x, const Elt& y) const {
    Elt r(dim);
    for (int i = 0; i < dim; ++i) r[i] = norm(x[i] - y[i]);
    return r;
}

FinDimAlgebra::Elt FinDimAlgebra::scale(const mpq_class& c, const Elt& x) const {
    Elt r(dim);
    for (int i = 0; i < dim; ++i) r[i] = norm(c * x[i]);
    return r;
}

FinDimAlgebra::Elt FinDimAlgebra::power(const Elt& x, const mpz_class& n) const {
    Elt acc = unit, base = x;
    mpz_class e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool FinDimAlgebra::is_zero_elt(const Elt& x) const {
    for (const auto& c : x)
        if (c != 0) return false;
    return true;
}

Mat FinDimAlgebra::left_mult(const Elt& x) const {
    Mat m(field, dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j)
            for (const Term& t : prod(i, j)) m.set(t.k, j, m.at(t.k, j) + x[i] * t.c);
    }
    return m;
}

Mat FinDimAlgebra::right_mult(const Elt& x) const {
    Mat m(field, dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < dim; ++i)
            for (const Term& t : prod(i, j)) m.set(t.k, i, m.at(t.k, i) + x[j] * t.c);
    }
    return m;
}

Mat FinDimAlgebra::left_mult_basis(int i) const {
    Mat m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const Term& t : prod(i, j)) m.set(t.k, j, t.c);
    return m;
}

mpq_class FinDimAlgebra::trace_left_mult_basis(int i) const {
    mpq_class tr = 0;
    for (int j = 0; j < dim; ++j)
        for (const Term& t : prod(i, j))
            if (t.k == j) tr += t.c;
    return norm(tr);
}

bool FinDimAlgebra::is_invertible(const Elt& x) const { return rank_of(left_mult(x)) == dim; }

void FinDimAlgebra::audit_structure() const {
    // unit
    for (int i = 0; i < dim; ++i) {
        if (mul(unit, basis_elt(i)) != basis_elt(i) || mul(basis_elt(i), unit) != basis_elt(i))
            throw InputError(name + ": unit audit failed at basis " + std::to_string(i));
    }
    // associativity on basis triples
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Elt ij = mul(basis_elt(i), basis_elt(j));
            for (int k = 0; k < dim; ++k) {
                Elt left = mul(ij, basis_elt(k));
                Elt right = mul(basis_elt(i), mul(basis_elt(j), basis_elt(k)));
                if (left != right)
                    throw InputError(name + ": associativity audit failed at (" + std::to_string(i) +
                                     "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    // generator words reproduce the basis
    for (int i = 0; i < dim; ++i) {
        Elt p = unit;
        for (int w : words[i]) p = mul(p, gens[w]);
        if (p != basis_elt(i)) throw InputError(name + ": generator word audit failed");
    }
}

bool FinDimAlgebra::radical_available(std::string* why) const {
    if (known_radical) return true;
    if (field.kind == RingKind::Q) return true;
    if (field.p > dim) return true;
    if (why)
        *why = "unsupported characteristic: trace-form radical needs p > dim (p=" +
               std::to_string(field.p) + ", dim=" + std::to_string(dim) + ")";
    return false;
}

const Mat& FinDimAlgebra::radical() const {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (radical_cache) return *radical_cache;
    if (known_radical) {
        radical_cache = *known_radical;
        return *radical_cache;
    }
    std::string why;
    if (!radical_available(&why)) throw PreconditionError(name + ": " + why);

    // Gram matrix of (x,y) -> trace(L_{xy}); its kernel is J.
    std::vector<mpq_class> tr(dim);
    for (int k = 0; k < dim; ++k) tr[k] = trace_left_mult_basis(k);
    Mat gram(field, dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            mpq_class v = 0;
            for (const Term& t : prod(i, j)) v += t.c * tr[t.k];
            gram.set(i, j, v);
        }
    Mat j = gauss_decompose(gram).kernel;

    // verify nilpotency: powers of the span must reach zero
    Mat span = j;
    for (int step = 0; step <= dim && span.cols() > 0; ++step) {
        if (step == dim) throw InternalError(name + ": radical candidate not nilpotent");
        // next = span of products (radical gen) * (span col)
        Mat prods(field, dim, 0);
        for (int c = 0; c < j.cols(); ++c) {
            Mat lm = left_mult([&] {
                Elt e(dim);
                for (int r = 0; r < dim; ++r) e[r] = j.at(r, c);
                return e;
            }());
            prods = prods.hstack(lm * span);
        }
        GaussResult g = gauss_decompose(prods);
        span = g.image;
    }
    radical_cache = j;
    return *radical_cache;
}

namespace {

struct Path {
    int source, target;
    std::vector<int> arrows;  // in traversal order: first applied first
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (source != o.source) return source < o.source;
        return arrows < o.arrows;
    }
};

}  // namespace

FinDimAlgebra::Ptr path_algebra(const Quiver& q, const Ring& field) {
    q.validate();
    if (!q.is_acyclic())
        throw PreconditionError("path algebra of a cyclic quiver is infinite-dimensional");
    const int nv = static_cast<int>(q.vertices.size());
    if (nv == 0) throw InputError("empty quiver has a zero-dimensional path algebra; rejected");

    std::vector<Path> paths;
    for (int v = 0; v < nv; ++v) paths.push_back({v, v, {}});
    // grow by length; acyclicity bounds everything
    size_t lo = 0;
    while (lo < paths.size()) {
        size_t hi = paths.size();
        for (size_t t = lo; t < hi; ++t)
            for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.vertex_index(q.arrows[ai].source) != paths[t].target) continue;
                Path ext = paths[t];
                ext.arrows.push_back(static_cast<int>(ai));
                ext.target = q.vertex_index(q.arrows[ai].target);
                paths.push_back(std::move(ext));
            }
        lo = hi;
    }
    std::sort(paths.begin(), paths.end());
    const int dim = static_cast<int>(paths.size());

    std::map<std::pair<int, std::vector<int>>, int> index;
    for (int i = 0; i < dim; ++i) index[{paths[i].source, paths[i].arrows}] = i;

    auto label = [&](const Path& p) -> std::string {
        if (p.arrows.empty()) return "e_" + q.vertices[p.source];
        std::string s;
        for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
            if (!s.empty()) s += "*";
            s += q.arrows[*it].name;
        }
        return s;
    };

    std::vector<std::string> basis(dim);
    for (int i = 0; i < dim; ++i) basis[i] = label(paths[i]);

    std::vector<std::vector<FinDimAlgebra::Term>> sc(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // product e_i * e_j = "i after j"
            if (paths[i].source != paths[j].target) continue;
            std::vector<int> cat = paths[j].arrows;
            cat.insert(cat.end(), paths[i].arrows.begin(), paths[i].arrows.end());
            auto it = index.find({paths[j].source, cat});
            if (it == index.end()) throw InternalError("path concatenation missing from basis");
            sc[static_cast<size_t>(i) * dim + j].push_back({it->second, mpq_class(1)});
        }

    FinDimAlgebra::Elt unit(dim, mpq_class(0));
    for (int v = 0; v < nv; ++v) unit[v] = 1;  // trivial paths come first

    auto a = FinDimAlgebra::make(field, basis, std::move(sc), unit, "k[Q]", true);
    auto* mut = const_cast<FinDimAlgebra*>(a.get());

    // generators: trivial paths and arrows
    mut->gens.clear();
    mut->words.assign(dim, {});
    std::vector<int> arrow_gen(q.arrows.size(), -1);
    for (int v = 0; v < nv; ++v) {
        mut->gens.push_back(a->basis_elt(v));
        mut->words[v] = {v};
    }
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        int bi = index.at({q.vertex_index(q.arrows[ai].source), {static_cast<int>(ai)}});
        arrow_gen[ai] = static_cast<int>(mut->gens.size());
        mut->gens.push_back(a->basis_elt(bi));
    }
    for (int i = nv; i < dim; ++i) {
        // path = product of its arrows, later arrow on the left
        std::vector<int> w;
        for (auto it = paths[i].arrows.rbegin(); it != paths[i].arrows.rend(); ++it)
            w.push_back(arrow_gen[*it]);
        mut->words[i] = w;
    }

    // radical = positive-length paths
    Mat rad(field, dim, dim - nv);
    for (int i = nv; i < dim; ++i) rad.set_raw(i, i - nv, 1);
    mut->known_radical = rad;
    mut->split_quotient_known = true;
    for (int v = 0; v < nv; ++v) mut->orth_idempotents.push_back(a->basis_elt(v));

    auto info = std::make_shared<PathAlgebraInfo>();
    info->quiver = q;
    for (int i = 0; i < dim; ++i) {
        info->source_of.push_back(paths[i].source);
        info->target_of.push_back(paths[i].target);
        info->length_of.push_back(static_cast<int>(paths[i].arrows.size()));
    }
    mut->path_data = info;
    mut->audit_structure();
    return a;
}

FinDimAlgebra::Ptr opposite(const FinDimAlgebra::Ptr& a) {
    std::vector<std::vector<FinDimAlgebra::Term>> sc(static_cast<size_t>(a->dim) * a->dim);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) sc[static_cast<size_t>(i) * a->dim + j] = a->prod(j, i);
    auto op = FinDimAlgebra::make(a->field, a->basis, std::move(sc), a->unit, a->name + "^op", false);
    auto* mut = const_cast<FinDimAlgebra*>(op.get());
    mut->gens = a->gens;
    mut->words.clear();
    for (const auto& w : a->words) mut->words.emplace_back(w.rbegin(), w.rend());
    mut->known_radical = a->known_radical;
    mut->split_quotient_known = a->split_quotient_known;
    mut->orth_idempotents = a->orth_idempotents;
    if (a->path_data) {
        auto info = std::make_shared<PathAlgebraInfo>(*a->path_data);
        std::swap(info->source_of, info->target_of);
        mut->path_data = info;
    }
    if (static_cast<long>(op->dim) * op->dim * op->dim <= 2'000'000) op->audit_structure();
    return op;
}

FinDimAlgebra::Ptr tensor_algebra(const FinDimAlgebra::Ptr& a, const FinDimAlgebra::Ptr& b) {
    require_same_ring(a->field, b->field, "tensor_algebra");
    const int da = a->dim, db = b->dim, dim = da * db;
    auto id = [&](int i, int j) { return i * db + j; };

    std::vector<std::string> basis(dim);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) basis[id(i, j)] = a->basis[i] + "(x)" + b->basis[j];

    std::vector<std::vector<FinDimAlgebra::Term>> sc(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int i2 = 0; i2 < da; ++i2)
                for (int j2 = 0; j2 < db; ++j2) {
                    auto& out = sc[static_cast<size_t>(id(i, j)) * dim + id(i2, j2)];
                    for (const auto& ta : a->prod(i, i2))
                        for (const auto& tb : b->prod(j, j2))
                            out.push_back({id(ta.k, tb.k), a->norm(ta.c * tb.c)});
                }

    FinDimAlgebra::Elt unit(dim, mpq_class(0));
    for (int i = 0; i < da; ++i) {
        if (a->unit[i] == 0) continue;
        for (int j = 0; j < db; ++j) {
            if (b->unit[j] == 0) continue;
            unit[id(i, j)] = a->norm(a->unit[i] * b->unit[j]);
        }
    }

    auto t = FinDimAlgebra::make(a->field, basis, std::move(sc), unit,
                                 a->name + "(x)" + b->name, false);
    auto* mut = const_cast<FinDimAlgebra*>(t.get());

    // generators: g(x)1 and 1(x)h; words factor through the two sides
    mut->gens.clear();
    mut->words.assign(dim, {});
    auto embed_left = [&](const FinDimAlgebra::Elt& x) {
        FinDimAlgebra::Elt e(dim, mpq_class(0));
        for (int i = 0; i < da; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < db; ++j)
                if (b->unit[j] != 0) e[id(i, j)] = t->norm(x[i] * b->unit[j]);
        }
        return e;
    };
    auto embed_right = [&](const FinDimAlgebra::Elt& y) {
        FinDimAlgebra::Elt e(dim, mpq_class(0));
        for (int j = 0; j < db; ++j) {
            if (y[j] == 0) continue;
            for (int i = 0; i < da; ++i)
                if (a->unit[i] != 0) e[id(i, j)] = t->norm(y[j] * a->unit[i]);
        }
        return e;
    };
    for (const auto& g : a->gens) mut->gens.push_back(embed_left(g));
    const int off = static_cast<int>(a->gens.size());
    for (const auto& h : b->gens) mut->gens.push_back(embed_right(h));
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            std::vector<int> w = a->words[i];
            for (int x : b->words[j]) w.push_back(off + x);
            mut->words[id(i, j)] = w;
        }

    if (a->known_radical && b->known_radical && a->split_quotient_known && b->split_quotient_known) {
        // J(A(x)B) = J_A (x) B + A (x) J_B for split semisimple quotients
        Mat cand(t->field, dim, 0);
        const Mat& ja = *a->known_radical;
        const Mat& jb = *b->known_radical;
        Mat cols(t->field, dim, ja.cols() * db + da * jb.cols());
        int c = 0;
        for (int cj = 0; cj < ja.cols(); ++cj)
            for (int j = 0; j < db; ++j, ++c)
                for (int i = 0; i < da; ++i) cols.set(id(i, j), c, ja.at(i, cj));
        for (int i = 0; i < da; ++i)
            for (int cj = 0; cj < jb.cols(); ++cj, ++c)
                for (int j = 0; j < db; ++j) cols.set(id(i, j), c, jb.at(j, cj));
        cand = gauss_decompose(cols).image;
        mut->known_radical = cand;
        mut->split_quotient_known = true;
    }
    if (!a->orth_idempotents.empty() && !b->orth_idempotents.empty()) {
        for (const auto& e : a->orth_idempotents)
            for (const auto& f : b->orth_idempotents)
                mut->orth_idempotents.push_back(t->mul(embed_left(e), embed_right(f)));
    }
    if (static_cast<long>(dim) * dim * dim <= 2'000'000) t->audit_structure();
    return t;
}

FinDimAlgebra::Ptr enveloping_algebra(const FinDimAlgebra::Ptr& a) {
    return tensor_algebra(a, opposite(a));
}

FinDimAlgebra::Ptr field_algebra(const Ring& field) {
    std::vector<std::vector<FinDimAlgebra::Term>> sc(1);
    sc[0].push_back({0, mpq_class(1)});
    auto a = FinDimAlgebra::make(field, {"1"}, std::move(sc), {mpq_class(1)}, "k");
    auto* mut = const_cast<FinDimAlgebra*>(a.get());
    mut->known_radical = Mat(field, 1, 0);
    mut->split_quotient_known = true;
    mut->orth_idempotents = {a->unit};
    return a;
}

FinDimAlgebra::Ptr dual_numbers(const Ring& field) {
    std::vector<std::vector<FinDimAlgebra::Term>> sc(4);
    sc[0].push_back({0, mpq_class(1)});  // 1*1
    sc[1].push_back({1, mpq_class(1)});  // 1*eps ... basis order {1, eps}
    sc[2].push_back({1, mpq_class(1)});  // eps*1
    auto a = FinDimAlgebra::make(field, {"1", "eps"}, std::move(sc),
                                 {mpq_class(1), mpq_class(0)}, "k[eps]");
    auto* mut = const_cast<FinDimAlgebra*>(a.get());
    Mat rad(field, 2, 1);
    rad.set_raw(1, 0, 1);
    mut->known_radical = rad;
    mut->split_quotient_known = true;
    mut->orth_idempotents = {a->unit};
    return a;
}

FinDimAlgebra::Ptr matrix_algebra(const Ring& field, int n) {
    const int dim = n * n;
    auto id = [&](int i, int j) { return i * n + j; };
    std::vector<std::string> basis(dim);
    std::vector<std::vector<FinDimAlgebra::Term>> sc(static_cast<size_t>(dim) * dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            basis[id(i, j)] = "E" + std::to_string(i + 1) + std::to_string(j + 1);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        sc[static_cast<size_t>(id(i, j)) * dim + id(k, l)].push_back(
                            {id(i, l), mpq_class(1)});
        }
    FinDimAlgebra::Elt unit(dim, mpq_class(0));
    for (int i = 0; i < n; ++i) unit[id(i, i)] = 1;
    auto a = FinDimAlgebra::make(field, basis, std::move(sc), unit, "M" + std::to_string(n));
    auto* mut = const_cast<FinDimAlgebra*>(a.get());
    mut->known_radical = Mat(field, dim, 0);
    mut->split_quotient_known = true;
    for (int i = 0; i < n; ++i) mut->orth_idempotents.push_back(a->basis_elt(id(i, i)));
    return a;
}

QuotientAlgebra quotient_algebra(const FinDimAlgebra::Ptr& a, const Mat& ideal_basis) {
    GaussResult gi = gauss_decompose(ideal_basis);
    Mat ib = gi.image;
    // complement of the ideal inside A: pivots of [ib | I]
    GaussResult g = gauss_decompose(ib.hstack(Mat::identity(a->field, a->dim)));
    std::vector<int> comp;
    for (int p : g.pivots)
        if (p >= ib.cols()) comp.push_back(p - ib.cols());
    const int q = static_cast<int>(comp.size());
    Mat section(a->field, a->dim, q);
    for (int c = 0; c < q; ++c) section.set_raw(comp[c], c, 1);
    // projection: coordinates w.r.t. complement after killing the ideal:
    // solve [ib | section] * (y; x) = v, projection(v) = x
    Mat full = ib.hstack(section);
    Mat inv = *solve(full, Mat::identity(a->field, a->dim));
    Mat projection(a->field, q, a->dim);
    for (int r = 0; r < q; ++r)
        for (int c = 0; c < a->dim; ++c) projection.set_raw(r, c, inv.at(ib.cols() + r, c));

    std::vector<std::string> basis(q);
    for (int c = 0; c < q; ++c) basis[c] = a->basis[comp[c]] + "~";
    std::vector<std::vector<FinDimAlgebra::Term>> sc(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            FinDimAlgebra::Elt pr = a->mul(a->basis_elt(comp[i]), a->basis_elt(comp[j]));
            Mat v = projection * Mat::col_vector(a->field, pr);
            for (int k = 0; k < q; ++k)
                if (v.at(k, 0) != 0) sc[static_cast<size_t>(i) * q + j].push_back({k, v.at(k, 0)});
        }
    FinDimAlgebra::Elt unit(q);
    Mat uv = projection * Mat::col_vector(a->field, a->unit);
    for (int k = 0; k < q; ++k) unit[k] = uv.at(k, 0);
    QuotientAlgebra out;
    out.algebra = FinDimAlgebra::make(a->field, basis, std::move(sc), unit, a->name + "/I");
    out.projection = projection;
    out.section = section;
    return out;
}

}  // namespace dgm

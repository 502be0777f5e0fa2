#pragma once

// Seeded random generators shared across the test suites.

#include <random>
#include <string>

#include "dgmoduli/algebra.hpp"
#include "dgmoduli/matrix.hpp"
#include "dgmoduli/module.hpp"
#include "dgmoduli/quiver.hpp"

namespace testutil {

inline dgm::Mat random_mat(std::mt19937_64& rng, dgm::Ring ring, int r, int c, int lo = -3, int hi = 3) {
    dgm::Mat m(ring, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            long span = hi - lo + 1;
            long v = lo + static_cast<long>(rng() % static_cast<unsigned long>(span));
            m.set(i, j, mpq_class(v));
        }
    return m;
}

inline dgm::Mat random_unimodular(std::mt19937_64& rng, int n, int ops = 12) {
    dgm::Mat u = dgm::Mat::identity(dgm::Ring::integers(), n);
    for (int k = 0; k < ops; ++k) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i == j) continue;
        long c = static_cast<long>(rng() % 5) - 2;
        dgm::Mat e = dgm::Mat::identity(dgm::Ring::integers(), n);
        e.set(i, j, mpq_class(c));
        u = u * e;
    }
    return u;
}

inline dgm::Quiver random_acyclic_quiver(std::mt19937_64& rng, int max_vertices, int max_arrows) {
    dgm::Quiver q;
    int nv = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_vertices));
    for (int v = 0; v < nv; ++v) q.vertices.push_back("v" + std::to_string(v + 1));
    int na = static_cast<int>(rng() % static_cast<unsigned long>(max_arrows + 1));
    int made = 0;
    for (int a = 0; a < na && nv >= 2; ++a) {
        // arrows go up the vertex order, so the quiver stays acyclic
        int s = static_cast<int>(rng() % static_cast<unsigned long>(nv - 1));
        int t = s + 1 + static_cast<int>(rng() % static_cast<unsigned long>(nv - s - 1));
        q.arrows.push_back({"a" + std::to_string(++made), q.vertices[s], q.vertices[t]});
    }
    q.validate();
    return q;
}

inline dgm::ModuleRep random_quiver_module(std::mt19937_64& rng, const dgm::FinDimAlgebra::Ptr& a,
                                           int max_vertex_dim) {
    const auto& q = a->path_data->quiver;
    std::vector<int> dims;
    for (size_t v = 0; v < q.vertices.size(); ++v)
        dims.push_back(static_cast<int>(rng() % static_cast<unsigned long>(max_vertex_dim + 1)));
    std::vector<dgm::Mat> mats;
    for (const auto& ar : q.arrows) {
        int s = q.vertex_index(ar.source), t = q.vertex_index(ar.target);
        long lo = 0, hi = a->field.kind == dgm::RingKind::Fp ? a->field.p - 1 : 2;
        mats.push_back(random_mat(rng, a->field, dims[t], dims[s], lo, hi));
    }
    return dgm::ModuleRep::from_quiver_rep(a, dims, mats);
}

inline dgm::Quiver a2_quiver() {
    dgm::Quiver q;
    q.vertices = {"v1", "v2"};
    q.arrows = {{"a", "v1", "v2"}};
    return q;
}

inline dgm::Quiver a3_quiver() {
    dgm::Quiver q;
    q.vertices = {"v1", "v2", "v3"};
    q.arrows = {{"a", "v1", "v2"}, {"b", "v2", "v3"}};
    return q;
}

inline dgm::Quiver one_vertex_quiver() {
    dgm::Quiver q;
    q.vertices = {"v1"};
    return q;
}

}  // namespace testutil

#include "dgmoduli/quiver.hpp"

#include <set>

namespace dgm {

void Quiver::validate() const {
    std::set<std::string> names;
    for (const auto& v : vertices)
        if (!names.insert(v).second) throw InputError("duplicate vertex name: " + v);
    for (const auto& a : arrows) {
        if (!names.insert(a.name).second) throw InputError("duplicate name: " + a.name);
        if (vertex_index(a.source) < 0) throw InputError("arrow " + a.name + ": unknown source " + a.source);
        if (vertex_index(a.target) < 0) throw InputError("arrow " + a.name + ": unknown target " + a.target);
    }
}

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

bool Quiver::is_acyclic() const {
    // Kahn's algorithm
    const int n = static_cast<int>(vertices.size());
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const auto& a : arrows) {
        int s = vertex_index(a.source), t = vertex_index(a.target);
        out[s].push_back(t);
        ++indeg[t];
    }
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return seen == n;
}

}  // namespace dgm

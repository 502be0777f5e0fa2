#pragma once

#include <string>
#include <vector>

#include "dgmoduli/error.hpp"

namespace dgm {

struct Arrow {
    std::string name, source, target;
};

/// Finite oriented quiver.  Vertex and arrow names must be unique and arrow
/// endpoints declared.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    void validate() const;
    bool is_acyclic() const;
    int vertex_index(const std::string& name) const;
};

}  // namespace dgm

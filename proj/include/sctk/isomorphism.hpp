#pragma once

#include <optional>
#include <vector>

#include "sctk/complex.hpp"

namespace sctk {

/// Vertex bijection internal-id -> internal-id carrying the facet set of a
/// onto that of b, if one exists. Index i+1 maps to result[i].
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& a,
                                                 const SimplicialComplex& b);

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace sctk

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sctk/complex.hpp"
#include "sctk/smith.hpp"

namespace sctk {

struct HomologyGroup {
    long long rank = 0;
    std::vector<long long> torsion;  // each > 1, dividing the next

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Homology groups per dimension 0..d, reduced at dimension 0.
using HomologyGroups = std::vector<HomologyGroup>;

std::string to_string(const HomologyGroups& h);
nlohmann::json homology_to_json(const HomologyGroups& h);
HomologyGroups homology_from_json(const nlohmann::json& j);

/// Matrix of the simplicial boundary operator C_k -> C_{k-1}; rows are the
/// (k-1)-faces and columns the k-faces, both in lexicographic order, with
/// alternating signs on the sorted vertex sequence.
IntegerMatrix boundary_matrix(const SimplicialComplex& k_complex, int k);

HomologyGroups homology(const SimplicialComplex& k_complex);

/// Ranks of homology with coefficients in the p-element field (p prime),
/// reduced at dimension 0.
std::vector<long long> betti_numbers_mod_p(const SimplicialComplex& k_complex,
                                           long long p);

/// Orientation of a closed pseudomanifold: facet signs (aligned with
/// facets()) making the top-dimensional boundary vanish, with the
/// lexicographically first facet oriented +1. Empty when non-orientable.
std::optional<std::vector<int>> fundamental_cycle(
    const SimplicialComplex& k_complex);

bool is_orientable(const SimplicialComplex& k_complex);

}  // namespace sctk

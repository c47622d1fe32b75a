#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sctk/complex.hpp"

namespace sctk {

/// Permutation of the points 1..degree.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity

    /// images[i] is the image of point i+1.
    static Permutation from_images(std::vector<int> images);

    /// Parses cycle notation like "(1,2)(3,4)"; "()" or "" is the identity.
    static Permutation parse_cycles(const std::string& text, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int point) const { return images_[static_cast<std::size_t>(point) - 1]; }

    /// Left-to-right composition: (a.then(b))(x) = b(a(x)).
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    bool is_identity() const;
    int smallest_moved_point() const;  // 0 when identity

    std::vector<int> apply_set(const std::vector<int>& points) const;  // sorted
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// A finite permutation group given by generators.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Permutation> generators);
    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    /// Exact order via a stabilizer chain; throws std::overflow_error if the
    /// order does not fit in 64 bits.
    std::uint64_t order() const;

    /// Largest t with a transitive action on ordered t-tuples of distinct
    /// points; 0 when not transitive.
    int transitivity() const;

    bool contains(const Permutation& g) const;

private:
    int degree_;
    std::vector<Permutation> gens_;
};

/// Closure of {set} under the group generators (breadth-first).
std::vector<std::vector<int>> orbit_of_set(const PermGroup& g,
                                           const std::vector<int>& set);

/// Complex whose facets are the union of the seed orbits under g.
SimplicialComplex complex_from_generators(
    const PermGroup& g, const std::vector<std::vector<int>>& seeds,
    std::string name = "complex from generators");

/// Group of all vertex permutations (on internal ids 1..n) preserving the
/// facet set. Exponential worst case; intended for desk-scale complexes.
PermGroup automorphism_group(const SimplicialComplex& k_complex);

/// All unions of g-orbits of (d+1)-subsets of 1..n that form closed
/// pseudomanifolds, for transitive g.
std::vector<SimplicialComplex> enumerate_transitive_complexes(
    int n, int d, const PermGroup& g);

}  // namespace sctk

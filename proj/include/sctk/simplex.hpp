#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sctk {

/// A face of a simplicial complex: a strictly increasing sequence of
/// positive integer vertex ids. Dimension = size - 1; the empty simplex
/// has dimension -1.
class Simplex {
public:
    Simplex() = default;

    /// Sorts the input; throws std::invalid_argument on duplicates or
    /// non-positive ids.
    explicit Simplex(std::vector<int> vertices);

    /// Trusted constructor for input already sorted strictly ascending.
    static Simplex unchecked(std::vector<int> sorted_vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }
    int operator[](std::size_t i) const { return verts_[i]; }
    const std::vector<int>& vertices() const { return verts_; }
    auto begin() const { return verts_.begin(); }
    auto end() const { return verts_.end(); }

    bool contains(int v) const;
    bool contains_all(const Simplex& other) const;

    /// The face obtained by dropping vertex v (v must be present).
    Simplex without(int v) const;
    /// Set union with another simplex.
    Simplex united(const Simplex& other) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) {
        return a.verts_ <=> b.verts_;
    }

    std::string str() const;

private:
    std::vector<int> verts_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace sctk

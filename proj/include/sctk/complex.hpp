#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sctk/simplex.hpp"

namespace sctk {

/// Face counts per dimension; index k holds the number of k-faces.
using FVector = std::vector<long long>;

/// Thread-safe write-once property store attached to a complex. Values are
/// JSON so they can be persisted in the native file format and the catalog.
class PropertyCache {
public:
    std::optional<nlohmann::json> get(const std::string& key) const;

    /// Stores value under key unless the key is already present; returns the
    /// value that ends up stored. Benign recomputation is fine, the first
    /// write wins.
    nlohmann::json put(const std::string& key, nlohmann::json value);

    std::map<std::string, nlohmann::json> snapshot() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, nlohmann::json> entries_;
};

enum class PseudomanifoldIssue {
    none,
    empty,
    not_pure,
    ridge_degree,
    not_strongly_connected,
};

struct PseudomanifoldCheck {
    bool value = false;
    PseudomanifoldIssue issue = PseudomanifoldIssue::none;
    std::string detail;
};

std::string to_string(PseudomanifoldIssue issue);

/// An abstract simplicial complex given by its facets. Vertices carry
/// arbitrary integer labels; internally they are renumbered 1..n in
/// ascending label order, so every algorithm works on contiguous ids.
/// Instances are immutable apart from the property cache.
class SimplicialComplex {
public:
    SimplicialComplex();  // the empty complex, dimension -1

    /// Builds a complex from facets given as label sets. Duplicate facets
    /// collapse, faces contained in other facets are pruned. A facet with a
    /// repeated label is rejected (std::invalid_argument), as is an empty
    /// facet in a nonempty list.
    static SimplicialComplex from_facets(
        const std::vector<std::vector<int>>& facets_by_label,
        std::string name = "");

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int dimension() const { return dim_; }
    bool is_empty() const { return facets_.empty(); }
    bool is_pure() const { return pure_; }
    int vertex_count() const { return static_cast<int>(labels_.size()); }

    /// Facets in internal ids, sorted lexicographically.
    const std::vector<Simplex>& facets() const { return facets_; }
    /// Ascending user labels; labels()[i] is the label of internal id i+1.
    const std::vector<int>& labels() const { return labels_; }

    int label_of(int id) const;
    int id_of_label(int label) const;  // throws if unknown
    Simplex to_labels(const Simplex& internal) const;
    Simplex to_internal(const std::vector<int>& label_set) const;
    std::vector<std::vector<int>> facet_labels() const;

    bool has_face(const Simplex& internal) const;
    /// All k-faces in internal ids, sorted lexicographically.
    std::vector<Simplex> faces_of_dim(int k) const;

    FVector f_vector() const;
    std::vector<long long> h_vector() const;
    std::vector<long long> g_vector() const;
    long long euler_characteristic() const;
    int neighborliness() const;
    int component_count() const;

    SimplicialComplex link(const Simplex& internal_face) const;
    SimplicialComplex star(const Simplex& internal_face) const;
    SimplicialComplex skeleton(int k) const;
    PseudomanifoldCheck pseudomanifold_check() const;
    bool is_pseudomanifold() const;
    SimplicialComplex boundary_complex() const;

    PropertyCache& cache() const { return *cache_; }

    /// Cache-aware helper: returns cache[key] if present, otherwise computes,
    /// stores and returns it.
    template <typename F>
    nlohmann::json cached(const std::string& key, F&& compute) const {
        if (auto hit = cache_->get(key)) return *hit;
        return cache_->put(key, compute());
    }

    friend bool operator==(const SimplicialComplex& a,
                           const SimplicialComplex& b) {
        return a.facets_ == b.facets_ && a.labels_ == b.labels_;
    }

private:
    SimplicialComplex(std::vector<Simplex> facets, std::vector<int> labels,
                      std::string name);

    std::vector<Simplex> facets_;  // internal ids, lex sorted, incomparable
    std::vector<int> labels_;      // ascending
    std::string name_;
    int dim_ = -1;
    bool pure_ = true;
    std::shared_ptr<PropertyCache> cache_;
};

long long binomial(long long n, long long k);  // saturates at LLONG_MAX

}  // namespace sctk

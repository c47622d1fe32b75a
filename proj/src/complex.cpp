#include "sctk/complex.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sctk {

std::optional<nlohmann::json> PropertyCache::get(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

nlohmann::json PropertyCache::put(const std::string& key,
                                  nlohmann::json value) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, std::move(value));
    return it->second;
}

std::map<std::string, nlohmann::json> PropertyCache::snapshot() const {
    std::lock_guard lock(mutex_);
    return entries_;
}

std::string to_string(PseudomanifoldIssue issue) {
    switch (issue) {
        case PseudomanifoldIssue::none: return "none";
        case PseudomanifoldIssue::empty: return "empty";
        case PseudomanifoldIssue::not_pure: return "not-pure";
        case PseudomanifoldIssue::ridge_degree: return "ridge-degree";
        case PseudomanifoldIssue::not_strongly_connected:
            return "not-strongly-connected";
    }
    return "unknown";
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (r > static_cast<unsigned long long>(LLONG_MAX) / num)
            return LLONG_MAX;  // saturate
        r = r * num / static_cast<unsigned long long>(i);
    }
    return r > static_cast<unsigned long long>(LLONG_MAX)
               ? LLONG_MAX
               : static_cast<long long>(r);
}

SimplicialComplex::SimplicialComplex()
    : cache_(std::make_shared<PropertyCache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets,
                                     std::vector<int> labels, std::string name)
    : facets_(std::move(facets)),
      labels_(std::move(labels)),
      name_(std::move(name)),
      cache_(std::make_shared<PropertyCache>()) {
    for (const Simplex& f : facets_) {
        dim_ = std::max(dim_, f.dim());
    }
    for (const Simplex& f : facets_) {
        if (f.dim() != dim_) {
            pure_ = false;
            break;
        }
    }
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<int>>& facets_by_label, std::string name) {
    // collect labels
    std::set<int> label_set;
    for (const auto& f : facets_by_label) {
        if (f.empty())
            throw std::invalid_argument("empty facet in nonempty facet list");
        std::set<int> s(f.begin(), f.end());
        if (s.size() != f.size())
            throw std::invalid_argument("facet with duplicate labels");
        label_set.insert(s.begin(), s.end());
    }
    std::vector<int> labels(label_set.begin(), label_set.end());
    std::unordered_map<int, int> id_of;
    for (std::size_t i = 0; i < labels.size(); ++i)
        id_of[labels[i]] = static_cast<int>(i) + 1;

    std::set<Simplex> uniq;
    for (const auto& f : facets_by_label) {
        std::vector<int> ids;
        ids.reserve(f.size());
        for (int lab : f) ids.push_back(id_of.at(lab));
        std::sort(ids.begin(), ids.end());
        uniq.insert(Simplex::unchecked(std::move(ids)));
    }
    // inclusion pruning: sort by size descending, keep maximal
    std::vector<Simplex> by_size(uniq.begin(), uniq.end());
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Simplex& a, const Simplex& b) {
                         return a.size() > b.size();
                     });
    std::vector<Simplex> maximal;
    for (const Simplex& f : by_size) {
        bool covered = false;
        for (const Simplex& m : maximal) {
            if (m.size() > f.size() && m.contains_all(f)) {
                covered = true;
                break;
            }
        }
        if (!covered) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());
    return SimplicialComplex(std::move(maximal), std::move(labels),
                             std::move(name));
}

int SimplicialComplex::label_of(int id) const {
    if (id < 1 || id > vertex_count())
        throw std::out_of_range("vertex id out of range");
    return labels_[static_cast<std::size_t>(id) - 1];
}

int SimplicialComplex::id_of_label(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("unknown vertex label " +
                                    std::to_string(label));
    return static_cast<int>(it - labels_.begin()) + 1;
}

Simplex SimplicialComplex::to_labels(const Simplex& internal) const {
    std::vector<int> out;
    out.reserve(internal.size());
    for (int id : internal) out.push_back(label_of(id));
    std::sort(out.begin(), out.end());
    return Simplex::unchecked(std::move(out));
}

Simplex SimplicialComplex::to_internal(const std::vector<int>& label_set) const {
    std::vector<int> ids;
    ids.reserve(label_set.size());
    for (int lab : label_set) ids.push_back(id_of_label(lab));
    return Simplex(std::move(ids));
}

std::vector<std::vector<int>> SimplicialComplex::facet_labels() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (const Simplex& f : facets_) out.push_back(to_labels(f).vertices());
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::has_face(const Simplex& internal) const {
    if (internal.empty()) return true;
    for (const Simplex& f : facets_)
        if (f.contains_all(internal)) return true;
    return false;
}

namespace {

void subsets_of(const Simplex& f, int k,
                std::unordered_set<Simplex, SimplexHash>& out) {
    const auto& v = f.vertices();
    int n = static_cast<int>(v.size());
    if (k + 1 > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k) + 1);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(v[static_cast<std::size_t>(i)]);
        out.insert(Simplex::unchecked(std::move(sub)));
        int pos = k;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - (k + 1) + pos)
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i <= k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
}

}  // namespace

std::vector<Simplex> SimplicialComplex::faces_of_dim(int k) const {
    std::unordered_set<Simplex, SimplexHash> set;
    for (const Simplex& f : facets_) subsets_of(f, k, set);
    std::vector<Simplex> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

FVector SimplicialComplex::f_vector() const {
    nlohmann::json j = cached("F", [&] {
        FVector counts;
        for (int k = 0; k <= dim_; ++k)
            counts.push_back(static_cast<long long>(faces_of_dim(k).size()));
        return nlohmann::json(counts);
    });
    return j.get<FVector>();
}

std::vector<long long> SimplicialComplex::h_vector() const {
    nlohmann::json j = cached("H", [&] {
        // h_j = sum_i (-1)^(j-i) C(d+1-i, j-i) f_{i-1}, with f_{-1} = 1
        FVector f = f_vector();
        int d = dim_;
        std::vector<long long> h;
        for (int jj = 0; jj <= d + 1; ++jj) {
            long long acc = 0;
            for (int i = 0; i <= jj; ++i) {
                long long fi = (i == 0) ? 1 : f[static_cast<std::size_t>(i) - 1];
                long long c = binomial(d + 1 - i, jj - i);
                acc += ((jj - i) % 2 == 0 ? 1 : -1) * c * fi;
            }
            h.push_back(acc);
        }
        return nlohmann::json(h);
    });
    return j.get<std::vector<long long>>();
}

std::vector<long long> SimplicialComplex::g_vector() const {
    nlohmann::json j = cached("G", [&] {
        std::vector<long long> h = h_vector();
        std::vector<long long> g;
        int upto = (dim_ + 2) / 2;  // ceil((d+1)/2)
        for (int i = 1; i <= upto && i < static_cast<int>(h.size()); ++i)
            g.push_back(h[static_cast<std::size_t>(i)] -
                        h[static_cast<std::size_t>(i) - 1]);
        return nlohmann::json(g);
    });
    return j.get<std::vector<long long>>();
}

long long SimplicialComplex::euler_characteristic() const {
    nlohmann::json j = cached("Chi", [&] {
        long long chi = 0;
        FVector f = f_vector();
        for (std::size_t k = 0; k < f.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * f[k];
        return nlohmann::json(chi);
    });
    return j.get<long long>();
}

int SimplicialComplex::neighborliness() const {
    if (is_empty()) throw std::invalid_argument("neighborliness of empty complex");
    nlohmann::json j = cached("Neighborliness", [&] {
        long long n = vertex_count();
        FVector f = f_vector();
        int k = 1;
        while (k <= n && k - 1 <= dim_ &&
               f[static_cast<std::size_t>(k) - 1] == binomial(n, k))
            ++k;
        return nlohmann::json(k - 1);
    });
    return j.get<int>();
}

int SimplicialComplex::component_count() const {
    int n = vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Simplex& f : facets_)
        for (std::size_t i = 1; i < f.size(); ++i) {
            int a = find(f[0]), b = find(f[i]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    std::set<int> roots;
    for (int v = 1; v <= n; ++v) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

SimplicialComplex SimplicialComplex::link(const Simplex& internal_face) const {
    if (!has_face(internal_face))
        throw std::invalid_argument("link: not a face of the complex");
    std::vector<std::vector<int>> out;
    for (const Simplex& f : facets_) {
        if (!f.contains_all(internal_face)) continue;
        std::vector<int> rest;
        for (int v : f)
            if (!internal_face.contains(v)) rest.push_back(label_of(v));
        if (!rest.empty()) out.push_back(std::move(rest));
    }
    return from_facets(out);
}

SimplicialComplex SimplicialComplex::star(const Simplex& internal_face) const {
    if (!has_face(internal_face))
        throw std::invalid_argument("star: not a face of the complex");
    std::vector<std::vector<int>> out;
    for (const Simplex& f : facets_)
        if (f.contains_all(internal_face))
            out.push_back(to_labels(f).vertices());
    return from_facets(out);
}

SimplicialComplex SimplicialComplex::skeleton(int k) const {
    if (k < 0 || k > dim_)
        throw std::out_of_range("skeleton dimension out of range");
    if (k == dim_) return *this;
    std::vector<std::vector<int>> out;
    for (const Simplex& f : facets_)
        if (f.dim() <= k) out.push_back(to_labels(f).vertices());
    for (const Simplex& f : faces_of_dim(k))
        out.push_back(to_labels(f).vertices());
    return from_facets(out);
}

PseudomanifoldCheck SimplicialComplex::pseudomanifold_check() const {
    PseudomanifoldCheck res;
    if (is_empty()) {
        res.issue = PseudomanifoldIssue::empty;
        res.detail = "empty complex";
        return res;
    }
    if (!pure_) {
        res.issue = PseudomanifoldIssue::not_pure;
        res.detail = "complex is not pure";
        return res;
    }
    if (dim_ == 0) {
        // the empty ridge must lie in exactly two facets: S^0
        res.value = facets_.size() == 2;
        if (!res.value) {
            res.issue = PseudomanifoldIssue::ridge_degree;
            res.detail = "a closed 0-pseudomanifold is a point pair";
        }
        return res;
    }
    // every ridge in exactly two facets
    std::unordered_map<Simplex, std::vector<int>, SimplexHash> ridge_facets;
    for (std::size_t fi = 0; fi < facets_.size(); ++fi)
        for (int v : facets_[fi])
            ridge_facets[facets_[fi].without(v)].push_back(static_cast<int>(fi));
    for (const auto& [ridge, fs] : ridge_facets) {
        if (fs.size() != 2) {
            res.issue = PseudomanifoldIssue::ridge_degree;
            res.detail = "ridge " + to_labels(ridge).str() + " lies in " +
                         std::to_string(fs.size()) + " facets";
            return res;
        }
    }
    // strong connectivity across ridges
    std::vector<char> seen(facets_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        for (int v : facets_[static_cast<std::size_t>(fi)]) {
            const auto& fs =
                ridge_facets[facets_[static_cast<std::size_t>(fi)].without(v)];
            for (int gj : fs) {
                if (!seen[static_cast<std::size_t>(gj)]) {
                    seen[static_cast<std::size_t>(gj)] = 1;
                    ++count;
                    stack.push_back(gj);
                }
            }
        }
    }
    if (count != facets_.size()) {
        res.issue = PseudomanifoldIssue::not_strongly_connected;
        res.detail = "facet graph is disconnected";
        return res;
    }
    res.value = true;
    return res;
}

bool SimplicialComplex::is_pseudomanifold() const {
    nlohmann::json j = cached("IsPseudomanifold", [&] {
        return nlohmann::json(pseudomanifold_check().value);
    });
    return j.get<bool>();
}

SimplicialComplex SimplicialComplex::boundary_complex() const {
    if (is_empty()) return SimplicialComplex();
    if (!pure_)
        throw std::invalid_argument("boundary_complex: complex is not pure");
    std::unordered_map<Simplex, int, SimplexHash> ridge_count;
    for (const Simplex& f : facets_)
        for (int v : f) ++ridge_count[f.without(v)];
    std::vector<std::vector<int>> out;
    for (const auto& [ridge, cnt] : ridge_count)
        if (cnt == 1) out.push_back(to_labels(ridge).vertices());
    return from_facets(out);
}

}  // namespace sctk

#include "sctk/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sctk {

Permutation::Permutation(int degree) {
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<char> seen(images.size() + 1, 0);
    for (int x : images) {
        if (x < 1 || x > static_cast<int>(images.size()) ||
            seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("images do not form a permutation");
        seen[static_cast<std::size_t>(x)] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::vector<char> used(static_cast<std::size_t>(degree) + 1, 0);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("cycle notation: expected '(' at position " +
                                        std::to_string(i));
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start)
                throw std::invalid_argument(
                    "cycle notation: expected point at position " + std::to_string(i));
            int pt = std::stoi(text.substr(start, i - start));
            if (pt < 1 || pt > degree)
                throw std::out_of_range("cycle notation: point " + std::to_string(pt) +
                                        " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(pt)])
                throw std::invalid_argument("cycle notation: point " +
                                            std::to_string(pt) + " repeated");
            used[static_cast<std::size_t>(pt)] = 1;
            cycle.push_back(pt);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i == text.size())
            throw std::invalid_argument("cycle notation: unterminated cycle");
        ++i;  // ')'
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[static_cast<std::size_t>(cycle[k]) - 1] =
                cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree())
        throw std::invalid_argument("permutation degrees differ");
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out.images_[i] = next.images_[static_cast<std::size_t>(images_[i]) - 1];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        out.images_[static_cast<std::size_t>(images_[i]) - 1] =
            static_cast<int>(i) + 1;
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

int Permutation::smallest_moved_point() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return static_cast<int>(i) + 1;
    return 0;
}

std::vector<int> Permutation::apply_set(const std::vector<int>& points) const {
    std::vector<int> out;
    out.reserve(points.size());
    for (int p : points) out.push_back(image(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Permutation::cycle_string() const {
    std::vector<char> seen(images_.size() + 1, 0);
    std::ostringstream os;
    bool any = false;
    for (int start = 1; start <= degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || image(start) == start) continue;
        any = true;
        os << "(";
        int x = start;
        bool first = true;
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            if (!first) os << ",";
            os << x;
            first = false;
            x = image(x);
        } while (x != start);
        os << ")";
    }
    return any ? os.str() : "()";
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    for (const Permutation& g : gens_)
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree mismatch");
    if (gens_.empty()) gens_.push_back(Permutation(degree));
}

PermGroup PermGroup::trivial(int degree) {
    return PermGroup(degree, {Permutation(degree)});
}

namespace {

// Deterministic Schreier-Sims stabilizer chain. An optional forced base
// prefix pins the base to 1,2,3,... so that level orbits expose iterated
// point stabilizers (used for transitivity).
class StabilizerChain {
public:
    StabilizerChain(const PermGroup& g, std::vector<int> forced_base)
        : degree_(g.degree()), base_(std::move(forced_base)) {
        levels_.resize(base_.size());
        std::vector<Permutation> todo;
        for (const Permutation& gen : g.generators())
            if (!gen.is_identity()) todo.push_back(gen);
        for (const Permutation& gen : todo) insert_generator(gen, 0);
        for (int i = static_cast<int>(base_.size()) - 1; i >= 0; --i) complete(i);
    }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const Level& lv : levels_) {
            std::uint64_t s = lv.transversal.size();
            if (s != 0 && o > UINT64_MAX / s)
                throw std::overflow_error("group order exceeds 64 bits");
            o *= s;
        }
        return o;
    }

    std::size_t orbit_size(std::size_t level) const {
        return level < levels_.size() ? levels_[level].transversal.size() : 1;
    }

    std::size_t level_count() const { return levels_.size(); }

    bool contains(Permutation g) const {
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            if (g.is_identity()) return true;
            int x = g.image(base_[i]);
            auto it = levels_[i].transversal.find(x);
            if (it == levels_[i].transversal.end()) return false;
            g = g.then(it->second.inverse());
        }
        return g.is_identity();
    }

private:
    struct Level {
        std::vector<Permutation> gens;
        std::map<int, Permutation> transversal;  // point -> rep mapping base to it
    };

    int degree_;
    std::vector<int> base_;
    std::vector<Level> levels_;

    void ensure_level_for(const Permutation& g, std::size_t from) {
        // g must move some base point at index >= from; extend base if not
        for (std::size_t i = from; i < base_.size(); ++i)
            if (g.image(base_[i]) != base_[i]) return;
        base_.push_back(g.smallest_moved_point());
        levels_.emplace_back();
    }

    // Insert g at every level it belongs to, starting at `from` (g fixes all
    // base points before `from`).
    void insert_generator(const Permutation& g, std::size_t from) {
        ensure_level_for(g, from);
        for (std::size_t i = from; i < base_.size(); ++i) {
            levels_[i].gens.push_back(g);
            if (g.image(base_[i]) != base_[i]) break;
        }
    }

    void rebuild_orbit(std::size_t i) {
        Level& lv = levels_[i];
        lv.transversal.clear();
        lv.transversal.emplace(base_[i], Permutation(degree_));
        std::vector<int> queue = {base_[i]};
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            Permutation rep = lv.transversal.at(x);
            for (const Permutation& s : lv.gens) {
                int y = s.image(x);
                if (!lv.transversal.count(y)) {
                    lv.transversal.emplace(y, rep.then(s));
                    queue.push_back(y);
                }
            }
        }
    }

    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            if (g.is_identity()) return {g, i};
            int x = g.image(base_[i]);
            auto it = levels_[i].transversal.find(x);
            if (it == levels_[i].transversal.end()) return {g, i};
            g = g.then(it->second.inverse());
        }
        return {g, levels_.size()};
    }

    // Sims criterion at level i: every Schreier generator must sift to the
    // identity through the deeper levels.
    void complete(std::size_t i) {
        rebuild_orbit(i);
        // snapshot orbit and gens: both are stable during the scan
        // (insertions go to deeper levels only), but levels_ itself may
        // reallocate, so no reference into it survives the loop body
        std::vector<std::pair<int, Permutation>> orbit(
            levels_[i].transversal.begin(), levels_[i].transversal.end());
        std::vector<Permutation> gens = levels_[i].gens;
        for (const auto& [x, ux] : orbit) {
            for (const Permutation& s : gens) {
                Permutation sch = ux.then(s).then(
                    levels_[i].transversal.at(s.image(x)).inverse());
                auto [h, j] = strip(sch, i + 1);
                if (h.is_identity()) continue;
                if (j == levels_.size()) ensure_level_for(h, i + 1);
                insert_generator(h, i + 1);
                for (std::size_t l = std::min(j, levels_.size() - 1); l > i; --l)
                    complete(l);
            }
        }
    }
};

}  // namespace

std::uint64_t PermGroup::order() const {
    StabilizerChain chain(*this, {});
    return chain.order();
}

int PermGroup::transitivity() const {
    std::vector<int> forced(static_cast<std::size_t>(degree_));
    std::iota(forced.begin(), forced.end(), 1);
    if (degree_ > 1) forced.pop_back();  // last point fixed by all of S_{n-1}
    StabilizerChain chain(*this, forced);
    int t = 0;
    for (std::size_t i = 0; i < forced.size(); ++i) {
        if (chain.orbit_size(i) ==
            static_cast<std::size_t>(degree_) - i)
            ++t;
        else
            break;
    }
    if (t == degree_ - 1 && degree_ > 1) t = degree_;  // S_n is n-transitive
    if (degree_ == 1) t = 1;
    return t;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_)
        throw std::invalid_argument("permutation degree mismatch");
    StabilizerChain chain(*this, {});
    return chain.contains(g);
}

std::vector<std::vector<int>> orbit_of_set(const PermGroup& g,
                                           const std::vector<int>& set) {
    for (int p : set)
        if (p < 1 || p > g.degree())
            throw std::out_of_range("orbit_of_set: point outside 1..degree");
    std::vector<int> start = set;
    std::sort(start.begin(), start.end());
    std::set<std::vector<int>> seen = {start};
    std::vector<std::vector<int>> queue = {start};
    while (!queue.empty()) {
        std::vector<int> cur = queue.back();
        queue.pop_back();
        for (const Permutation& gen : g.generators()) {
            std::vector<int> im = gen.apply_set(cur);
            if (seen.insert(im).second) queue.push_back(im);
        }
    }
    return {seen.begin(), seen.end()};
}

SimplicialComplex complex_from_generators(
    const PermGroup& g, const std::vector<std::vector<int>>& seeds,
    std::string name) {
    if (seeds.empty())
        throw std::invalid_argument("complex_from_generators: no seeds");
    std::vector<std::vector<int>> facets;
    for (const auto& seed : seeds) {
        auto orb = orbit_of_set(g, seed);
        facets.insert(facets.end(), orb.begin(), orb.end());
    }
    return SimplicialComplex::from_facets(facets, std::move(name));
}

namespace {

// Backtracking over vertex images with degree-profile and incidence-count
// pruning. Visits every automorphism.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const SimplicialComplex& k) : k_(k), n_(k.vertex_count()) {
        for (const Simplex& f : k.facets()) facet_set_.insert(f);
        // per-vertex profile: number of k-faces through the vertex, per k
        profile_.assign(static_cast<std::size_t>(n_) + 1, {});
        for (int d = 0; d <= k.dimension(); ++d) {
            for (auto& p : profile_) p.push_back(0);
            for (const Simplex& f : k.faces_of_dim(d))
                for (int v : f) ++profile_[static_cast<std::size_t>(v)].back();
        }
        // pair and triple facet-incidence counts
        for (const Simplex& f : k.facets()) {
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = a + 1; b < f.size(); ++b) {
                    ++pair_count_[key2(f[a], f[b])];
                    for (std::size_t c = b + 1; c < f.size(); ++c)
                        ++triple_count_[key3(f[a], f[b], f[c])];
                }
        }
    }

    // calls sink(images) for every automorphism; sink returns false to stop
    template <typename Sink>
    void run(Sink&& sink) {
        sink_ = std::forward<decltype(sink)>(sink);
        images_.assign(static_cast<std::size_t>(n_) + 1, 0);
        used_.assign(static_cast<std::size_t>(n_) + 1, 0);
        stopped_ = false;
        extend(1);
    }

private:
    const SimplicialComplex& k_;
    int n_;
    std::unordered_set<Simplex, SimplexHash> facet_set_;
    std::vector<std::vector<int>> profile_;
    std::unordered_map<long long, int> pair_count_;
    std::unordered_map<long long, int> triple_count_;
    std::vector<int> images_;
    std::vector<char> used_;
    std::function<bool(const std::vector<int>&)> sink_;
    bool stopped_ = false;

    static long long key2(int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<long long>(a) << 20) | b;
    }
    static long long key3(int a, int b, int c) {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return (((static_cast<long long>(a) << 20) | b) << 20) | c;
    }
    int count2(int a, int b) const {
        auto it = pair_count_.find(key2(a, b));
        return it == pair_count_.end() ? 0 : it->second;
    }
    int count3(int a, int b, int c) const {
        auto it = triple_count_.find(key3(a, b, c));
        return it == triple_count_.end() ? 0 : it->second;
    }

    bool compatible(int v, int w) const {
        if (profile_[static_cast<std::size_t>(v)] !=
            profile_[static_cast<std::size_t>(w)])
            return false;
        for (int u = 1; u < v; ++u) {
            if (count2(u, v) != count2(images_[static_cast<std::size_t>(u)], w))
                return false;
        }
        for (int u1 = 1; u1 < v; ++u1)
            for (int u2 = u1 + 1; u2 < v; ++u2)
                if (count3(u1, u2, v) !=
                    count3(images_[static_cast<std::size_t>(u1)],
                           images_[static_cast<std::size_t>(u2)], w))
                    return false;
        return true;
    }

    bool full_check() const {
        for (const Simplex& f : facet_set_) {
            std::vector<int> mapped;
            mapped.reserve(f.size());
            for (int v : f) mapped.push_back(images_[static_cast<std::size_t>(v)]);
            std::sort(mapped.begin(), mapped.end());
            if (!facet_set_.count(Simplex::unchecked(std::move(mapped))))
                return false;
        }
        return true;
    }

    void extend(int v) {
        if (stopped_) return;
        if (v > n_) {
            if (full_check()) {
                if (!sink_(images_)) stopped_ = true;
            }
            return;
        }
        for (int w = 1; w <= n_; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (!compatible(v, w)) continue;
            images_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            extend(v + 1);
            used_[static_cast<std::size_t>(w)] = 0;
            images_[static_cast<std::size_t>(v)] = 0;
            if (stopped_) return;
        }
    }
};

}  // namespace

PermGroup automorphism_group(const SimplicialComplex& kc) {
    if (kc.is_empty())
        throw std::invalid_argument("automorphism_group: empty complex");
    int n = kc.vertex_count();
    AutomorphismSearch search(kc);
    std::vector<Permutation> gens;
    // a chain over the generators found so far keeps membership tests cheap;
    // it is rebuilt only when a genuinely new generator shows up
    std::unique_ptr<StabilizerChain> chain;
    search.run([&](const std::vector<int>& images) {
        std::vector<int> img(images.begin() + 1, images.end());
        Permutation p = Permutation::from_images(std::move(img));
        if (p.is_identity()) return true;
        if (!chain || !chain->contains(p)) {
            gens.push_back(p);
            chain = std::make_unique<StabilizerChain>(PermGroup(n, gens),
                                                      std::vector<int>{});
        }
        return true;
    });
    if (gens.empty()) return PermGroup::trivial(n);
    return PermGroup(n, std::move(gens));
}

std::vector<SimplicialComplex> enumerate_transitive_complexes(
    int n, int d, const PermGroup& g) {
    if (g.degree() != n)
        throw std::invalid_argument("enumerate_transitive_complexes: degree mismatch");
    if (d < 1 || d >= n)
        throw std::invalid_argument("enumerate_transitive_complexes: need 1 <= d < n");
    {
        std::vector<int> pt = {1};
        if (orbit_of_set(g, pt).size() != static_cast<std::size_t>(n))
            throw std::invalid_argument(
                "enumerate_transitive_complexes: group is not transitive");
    }
    // orbits of (d+1)-subsets
    std::set<std::vector<int>> remaining;
    {
        std::vector<int> idx(static_cast<std::size_t>(d) + 1);
        std::iota(idx.begin(), idx.end(), 1);
        while (true) {
            remaining.insert(idx);
            int pos = d;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - d + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i <= d; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
        }
    }
    std::vector<std::vector<std::vector<int>>> orbits;
    while (!remaining.empty()) {
        std::vector<int> rep = *remaining.begin();
        auto orb = orbit_of_set(g, rep);
        for (const auto& s : orb) remaining.erase(s);
        orbits.push_back(std::move(orb));
    }

    // per-orbit ridge degree contributions
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> ridge_deg(
        orbits.size());
    for (std::size_t oi = 0; oi < orbits.size(); ++oi)
        for (const auto& fac : orbits[oi]) {
            Simplex f = Simplex::unchecked(fac);
            for (int v : f) ++ridge_deg[oi][f.without(v)];
        }

    std::vector<SimplicialComplex> results;
    std::unordered_map<Simplex, int, SimplexHash> degree;
    std::vector<std::size_t> chosen;

    std::function<void(std::size_t)> recurse = [&](std::size_t oi) {
        if (oi == orbits.size()) {
            if (chosen.empty()) return;
            for (const auto& [ridge, deg] : degree)
                if (deg != 2) return;
            std::vector<std::vector<int>> facets;
            for (std::size_t c : chosen)
                facets.insert(facets.end(), orbits[c].begin(), orbits[c].end());
            SimplicialComplex cand = SimplicialComplex::from_facets(facets);
            if (cand.pseudomanifold_check().value) results.push_back(std::move(cand));
            return;
        }
        // include orbit oi if no ridge degree would exceed 2
        bool ok = true;
        for (const auto& [ridge, deg] : ridge_deg[oi]) {
            auto it = degree.find(ridge);
            if ((it == degree.end() ? 0 : it->second) + deg > 2) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (const auto& [ridge, deg] : ridge_deg[oi]) degree[ridge] += deg;
            chosen.push_back(oi);
            recurse(oi + 1);
            chosen.pop_back();
            for (const auto& [ridge, deg] : ridge_deg[oi]) degree[ridge] -= deg;
        }
        recurse(oi + 1);
    };
    recurse(0);
    return results;
}

}  // namespace sctk

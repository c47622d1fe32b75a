#include "sctk/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sctk {

std::string to_string(const HomologyGroups& h) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (k) os << ", ";
        os << "[" << h[k].rank << ", [";
        for (std::size_t i = 0; i < h[k].torsion.size(); ++i) {
            if (i) os << ", ";
            os << h[k].torsion[i];
        }
        os << "]]";
    }
    os << "]";
    return os.str();
}

nlohmann::json homology_to_json(const HomologyGroups& h) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : h) out.push_back({g.rank, g.torsion});
    return out;
}

HomologyGroups homology_from_json(const nlohmann::json& j) {
    HomologyGroups out;
    for (const auto& e : j) {
        HomologyGroup g;
        g.rank = e.at(0).get<long long>();
        g.torsion = e.at(1).get<std::vector<long long>>();
        out.push_back(std::move(g));
    }
    return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& kc, int k) {
    if (k < 0 || k > kc.dimension())
        throw std::out_of_range("boundary_matrix: dimension out of range");
    std::vector<Simplex> cols = kc.faces_of_dim(k);
    if (k == 0) return IntegerMatrix(0, cols.size());
    std::vector<Simplex> rows = kc.faces_of_dim(k - 1);
    std::unordered_map<Simplex, std::size_t, SimplexHash> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& c = cols[j];
        for (std::size_t i = 0; i < c.size(); ++i) {
            m(row_index.at(c.without(c[i])), j) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

HomologyGroups homology(const SimplicialComplex& kc) {
    if (kc.is_empty()) return {};
    if (auto hit = kc.cache().get("Homology")) return homology_from_json(*hit);

    int d = kc.dimension();
    std::vector<long long> n_faces(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        n_faces[static_cast<std::size_t>(k)] =
            static_cast<long long>(kc.faces_of_dim(k).size());

    // rank and invariant factors of each boundary operator
    std::vector<long long> rank(static_cast<std::size_t>(d) + 2, 0);
    std::vector<std::vector<long long>> torsion(static_cast<std::size_t>(d) + 2);
    for (int k = 1; k <= d; ++k) {
        SNFResult snf = smith_normal_form(boundary_matrix(kc, k));
        rank[static_cast<std::size_t>(k)] = static_cast<long long>(snf.rank());
        for (const BigInt& f : snf.invariant_factors)
            if (f > 1)
                torsion[static_cast<std::size_t>(k)].push_back(
                    f.convert_to<long long>());
    }

    HomologyGroups out;
    for (int k = 0; k <= d; ++k) {
        HomologyGroup g;
        if (k == 0) {
            g.rank = kc.component_count() - 1;
        } else {
            g.rank = n_faces[static_cast<std::size_t>(k)] -
                     rank[static_cast<std::size_t>(k)] -
                     rank[static_cast<std::size_t>(k) + 1];
        }
        g.torsion = torsion[static_cast<std::size_t>(k) + 1];
        out.push_back(std::move(g));
    }
    kc.cache().put("Homology", homology_to_json(out));
    return out;
}

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Rank of a boundary matrix over GF(p), built directly from the face lists.
long long rank_mod_p(const SimplicialComplex& kc, int k, long long p) {
    if (k <= 0 || k > kc.dimension()) return 0;
    std::vector<Simplex> cols = kc.faces_of_dim(k);
    std::vector<Simplex> rows = kc.faces_of_dim(k - 1);
    std::unordered_map<Simplex, std::size_t, SimplexHash> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    std::vector<std::vector<long long>> m(
        rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Simplex& c = cols[j];
        for (std::size_t i = 0; i < c.size(); ++i) {
            long long s = (i % 2 == 0) ? 1 : p - 1;
            m[row_index.at(c.without(c[i]))][j] = s;
        }
    }
    // Gaussian elimination mod p
    long long rank = 0;
    std::size_t nr = m.size(), nc = nr ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m[piv][col] % p == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[row]);
        // normalize pivot to 1
        long long inv = 1, base = m[row][col] % p, e = p - 2;
        while (e) {  // base^(p-2) mod p
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t j = col; j < nc; ++j) m[row][j] = m[row][j] * inv % p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row) continue;
            long long f = m[i][col] % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < nc; ++j)
                m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<long long> betti_numbers_mod_p(const SimplicialComplex& kc,
                                           long long p) {
    if (!is_prime(p))
        throw std::invalid_argument("betti_numbers_mod_p: p must be prime");
    if (kc.is_empty()) return {};
    int d = kc.dimension();
    std::vector<long long> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k)
        rank[static_cast<std::size_t>(k)] = rank_mod_p(kc, k, p);
    std::vector<long long> out;
    for (int k = 0; k <= d; ++k) {
        long long nk = static_cast<long long>(kc.faces_of_dim(k).size());
        long long b = nk - rank[static_cast<std::size_t>(k)] -
                      rank[static_cast<std::size_t>(k) + 1];
        if (k == 0) b = kc.component_count() - 1;
        out.push_back(b);
    }
    return out;
}

std::optional<std::vector<int>> fundamental_cycle(
    const SimplicialComplex& kc) {
    PseudomanifoldCheck pm = kc.pseudomanifold_check();
    if (!pm.value)
        throw std::invalid_argument(
            "fundamental_cycle: not a closed pseudomanifold (" +
            to_string(pm.issue) + ")");
    const auto& facets = kc.facets();
    int d = kc.dimension();
    // ridge -> (facet index, removed-vertex position)
    std::unordered_map<Simplex, std::vector<std::pair<int, int>>, SimplexHash>
        ridge_map;
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
        for (int i = 0; i <= d; ++i)
            ridge_map[facets[fi].without(facets[fi][static_cast<std::size_t>(i)])]
                .emplace_back(static_cast<int>(fi), i);
    std::vector<int> sign(facets.size(), 0);
    sign[0] = 1;  // lexicographically first facet
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        const Simplex& f = facets[static_cast<std::size_t>(fi)];
        for (int i = 0; i <= d; ++i) {
            const auto& pair = ridge_map[f.without(f[static_cast<std::size_t>(i)])];
            for (const auto& [gj, j] : pair) {
                if (gj == fi) continue;
                // induced orientations on the shared ridge must cancel
                int want = -sign[static_cast<std::size_t>(fi)] *
                           ((i % 2 == 0) ? 1 : -1) * ((j % 2 == 0) ? 1 : -1);
                int& got = sign[static_cast<std::size_t>(gj)];
                if (got == 0) {
                    got = want;
                    stack.push_back(gj);
                } else if (got != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
}

bool is_orientable(const SimplicialComplex& kc) {
    if (auto hit = kc.cache().get("IsOrientable")) return hit->get<bool>();
    bool v = fundamental_cycle(kc).has_value();
    kc.cache().put("IsOrientable", v);
    return v;
}

}  // namespace sctk

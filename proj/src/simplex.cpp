#include "sctk/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sctk {

Simplex::Simplex(std::vector<int> vertices) : verts_(std::move(vertices)) {
    std::sort(verts_.begin(), verts_.end());
    if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
        throw std::invalid_argument("simplex has duplicate vertices");
    if (!verts_.empty() && verts_.front() <= 0)
        throw std::invalid_argument("vertex ids must be positive");
}

Simplex Simplex::unchecked(std::vector<int> sorted_vertices) {
    Simplex s;
    s.verts_ = std::move(sorted_vertices);
    return s;
}

bool Simplex::contains(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(),
                         other.verts_.end());
}

Simplex Simplex::without(int v) const {
    std::vector<int> out;
    out.reserve(verts_.size() - 1);
    for (int x : verts_)
        if (x != v) out.push_back(x);
    return unchecked(std::move(out));
}

Simplex Simplex::united(const Simplex& other) const {
    std::vector<int> out;
    out.reserve(verts_.size() + other.verts_.size());
    std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(),
                   other.verts_.end(), std::back_inserter(out));
    return unchecked(std::move(out));
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) os << " ";
        os << verts_[i];
    }
    os << "}";
    return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : s) h = h * 1099511628211ULL ^ static_cast<std::size_t>(v);
    return h;
}

}  // namespace sctk

#include "simplex.hpp"

#include <algorithm>

#include "error.hpp"

namespace htile {

Simplex::Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
        throw Error(ErrorCode::MalformedInput, "duplicate vertex in simplex");
    for (Vertex v : v_)
        if (v < 0)
            throw Error(ErrorCode::MalformedInput, "negative vertex id");
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(std::vector<Vertex>(vertices)) {}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

Simplex Simplex::with(Vertex v) const {
    if (contains(v)) return *this;
    Simplex s;
    s.v_ = v_;
    s.v_.insert(std::lower_bound(s.v_.begin(), s.v_.end(), v), v);
    return s;
}

Simplex Simplex::without(Vertex v) const {
    Simplex s;
    s.v_.reserve(v_.size());
    for (Vertex w : v_)
        if (w != v) s.v_.push_back(w);
    return s;
}

Simplex Simplex::intersect(const Simplex& other) const {
    Simplex s;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                          std::back_inserter(s.v_));
    return s;
}

Simplex Simplex::unite(const Simplex& other) const {
    Simplex s;
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(s.v_));
    return s;
}

Simplex Simplex::difference(const Simplex& other) const {
    Simplex s;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(s.v_));
    return s;
}

std::vector<Simplex> Simplex::ridges() const {
    std::vector<Simplex> out;
    out.reserve(v_.size());
    for (Vertex v : v_) out.push_back(without(v));
    return out;
}

std::vector<Simplex> Simplex::nonempty_subsets() const {
    std::vector<Simplex> out;
    const std::size_t n = v_.size();
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s.v_.push_back(v_[i]);
        out.push_back(std::move(s));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v_[i]);
    }
    return s;
}

} // namespace htile

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace htile {

using Vertex = int;

/// A face given by its strictly increasing vertex list. Default-constructed
/// value is the empty face (dimension -1).
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool contains(Vertex v) const;
    bool contains(const Simplex& other) const; // other is a subset of this

    Simplex with(Vertex v) const;
    Simplex without(Vertex v) const;
    Simplex intersect(const Simplex& other) const;
    Simplex unite(const Simplex& other) const;
    Simplex difference(const Simplex& other) const;

    /// Codimension-one subfaces, one per removed vertex, in ascending order
    /// of the removed vertex.
    std::vector<Simplex> ridges() const;

    /// All non-empty subsets (including the simplex itself).
    std::vector<Simplex> nonempty_subsets() const;

    const std::vector<Vertex>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    std::string to_string() const; // space-separated vertex ids

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.v_ <=> b.v_; }

private:
    std::vector<Vertex> v_;
};

} // namespace htile

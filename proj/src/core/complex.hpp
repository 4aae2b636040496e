#pragma once

#include <map>
#include <set>
#include <vector>

#include "simplex.hpp"

namespace htile {

/// Finite simplicial complex stored by its facets (pairwise
/// inclusion-incomparable, sorted lexicographically). Vertices created by
/// subdivisions are recorded in a provenance map apex -> subdivided face.
class SimplicialComplex {
public:
    SimplicialComplex() = default; // the empty complex

    static SimplicialComplex from_facets(std::vector<Simplex> facets,
                                         std::map<Vertex, Simplex> provenance = {});

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::map<Vertex, Simplex>& provenance() const { return provenance_; }

    bool empty() const { return facets_.empty(); }
    int dim() const; // -1 for the empty complex

    /// True iff f is a non-empty face (subset of some facet).
    bool is_face(const Simplex& f) const;
    bool is_facet(const Simplex& f) const;

    /// All non-empty faces.
    std::set<Simplex> faces() const;

    std::vector<long long> f_vector() const; // indices 0..dim
    long long euler() const;

    Vertex fresh_vertex() const; // strictly larger than every existing id
    Vertex max_vertex() const;   // -1 when empty

    std::string to_string() const; // facet lines, canonical order

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }

private:
    std::vector<Simplex> facets_;
    std::map<Vertex, Simplex> provenance_;
};

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facet_lists);

struct StructuralPredicates {
    bool is_pure = false;
    bool is_strongly_connected = false;
    bool is_closed_pseudomanifold = false;
};

StructuralPredicates structural_predicates(const SimplicialComplex& k);

// Generators.
SimplicialComplex make_simplex(int n);
SimplicialComplex make_boundary(int n); // boundary of the n-simplex, n >= 1
SimplicialComplex make_wedge_two_simplices(int n);
SimplicialComplex make_disjoint_simplices(int n, int count);
SimplicialComplex make_cone(const SimplicialComplex& base);
SimplicialComplex make_join(const SimplicialComplex& a, const SimplicialComplex& b);

struct StellarResult {
    SimplicialComplex complex;
    Vertex apex;
};

/// Stellar subdivision at a face of positive dimension; the star of tau is
/// replaced by the cone from a fresh apex over the faces not containing tau.
StellarResult stellar_subdivide(const SimplicialComplex& k, const Simplex& tau);
StellarResult stellar_subdivide_with_apex(const SimplicialComplex& k, const Simplex& tau,
                                          Vertex apex);

/// Ids used for barycentric subdivisions: faces of dimension zero keep their
/// vertex id, faces of dimension >= 1 get fresh ids in (dim desc, lex asc)
/// enumeration order.
std::map<Simplex, Vertex> barycentric_vertex_ids(const SimplicialComplex& k);

/// Chain-of-faces construction of the first barycentric subdivision.
SimplicialComplex barycentric_subdivide(const SimplicialComplex& k);

/// The same complex produced as a cascade of stellar subdivisions over all
/// faces of dimension >= 1 in decreasing dimension; agrees with
/// barycentric_subdivide including vertex labels.
SimplicialComplex barycentric_cascade(const SimplicialComplex& k);

/// Pair (ambient, removed): the relative complex of faces of `ambient` that
/// are not faces of `removed`. `removed` must not contain a facet of
/// `ambient`.
class RelativeComplex {
public:
    RelativeComplex() = default;
    explicit RelativeComplex(SimplicialComplex ambient,
                             SimplicialComplex removed = SimplicialComplex());

    const SimplicialComplex& ambient() const { return ambient_; }
    const SimplicialComplex& removed() const { return removed_; }

    int dim() const { return ambient_.dim(); }
    bool contains(const Simplex& f) const; // non-empty face of ambient, not of removed
    std::set<Simplex> faces() const;
    std::vector<long long> f_vector() const;
    long long euler() const;

    friend bool operator==(const RelativeComplex& a, const RelativeComplex& b) {
        return a.ambient_ == b.ambient_ && a.removed_ == b.removed_;
    }

private:
    SimplicialComplex ambient_;
    SimplicialComplex removed_;
};

RelativeComplex stellar_subdivide_pair(const RelativeComplex& s, const Simplex& tau);
RelativeComplex stellar_subdivide_pair_with_apex(const RelativeComplex& s, const Simplex& tau,
                                                 Vertex apex);
RelativeComplex barycentric_subdivide_pair(const RelativeComplex& s);

} // namespace htile

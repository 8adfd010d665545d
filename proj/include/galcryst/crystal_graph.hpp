#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "galcryst/gallery.hpp"

namespace galcryst {

struct CrystalEdge {
    std::size_t from;
    std::size_t to;
    int i;

    bool operator==(const CrystalEdge&) const = default;
    auto operator<=>(const CrystalEdge&) const = default;
};

/// A finite crystal of galleries. Vertices are kept in canonical gallery
/// order and edges (from, to, i) mean to = f_i(from), sorted.
class CrystalGraph {
public:
    CrystalGraph(int rank, std::vector<Gallery> vertices);

    int rank() const noexcept { return rank_; }
    const std::vector<Gallery>& vertices() const noexcept { return vertices_; }
    const std::vector<CrystalEdge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    std::optional<std::size_t> index_of(const Gallery& g) const;
    bool contains(const Gallery& g) const { return index_of(g).has_value(); }
    // Vertices with no incoming edge, i.e. every e_i vanishes inside the graph.
    std::vector<std::size_t> sources() const;
    bool is_connected() const;

private:
    int rank_;
    std::vector<Gallery> vertices_;
    std::vector<CrystalEdge> edges_;
};

CrystalGraph connected_component(const Gallery& g);

// Applies the smallest applicable e_i until none applies.
Gallery highest_weight_vertex(const Gallery& g);

// m_i columns of length i, shortest first in reading order, column of
// length d filled 1..d.
Gallery canonical_dominant_gallery(const DominantWeight& lambda);
Shape shape_of_weight(const DominantWeight& lambda);
// Sum of omega_{d_s} over the columns of a shape.
DominantWeight weight_of_shape(const Shape& shape, int rank);

CrystalGraph generate_b_lambda(const DominantWeight& lambda);

// Simultaneous traversal from the two highest-weight vertices. On success
// the map sends vertex k of c1 to entry k of the result (indices into c2).
// Throws NotConnected if either graph is not connected.
std::optional<std::vector<std::size_t>> is_isomorphic(const CrystalGraph& c1,
                                                      const CrystalGraph& c2);

struct DecompositionEntry {
    DominantWeight lambda;
    std::size_t multiplicity;
    std::vector<Gallery> representatives;  // dominant galleries of weight lambda
};

struct Decomposition {
    int rank;
    Shape shape;
    std::vector<DecompositionEntry> entries;  // sorted by lambda
    std::size_t component_count;
    std::size_t total_vertices;
};

// Connected components of Gamma(d), grouped by highest weight.
std::vector<CrystalGraph> components_of_shape(const Shape& shape, int rank);
Decomposition decompose(const Shape& shape, int rank);

std::uint64_t weyl_dimension(const DominantWeight& lambda);

// Semistandard tableaux of shape underline(lambda) over 1..n, built by
// filling rows top to bottom. Independent of the crystal operators.
std::vector<Gallery> enumerate_ssyt(const DominantWeight& lambda);

}  // namespace galcryst

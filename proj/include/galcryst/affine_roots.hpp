#pragma once

// Affine root bookkeeping along gallery paths.
//
// For a path gamma_0 = 0, gamma_1, ..., gamma_r (partial sums, no shift) the
// crossing set of segment j is
//   S_j = { (eps_a - eps_b, m) : <alpha, gamma_j> = m and <alpha, gamma_{j+1}> > m }
// i.e. the walls through gamma_j that segment j leaves on the positive side.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "galcryst/gallery.hpp"

namespace galcryst {

struct AffineRoot {
    int a;  // alpha = eps_a - eps_b, a < b
    int b;
    int level;

    int pair(const LatticePoint& x) const;

    bool operator==(const AffineRoot&) const = default;
    auto operator<=>(const AffineRoot&) const = default;
};

struct PositiveRoot {
    int a;
    int b;

    bool operator==(const PositiveRoot&) const = default;
    auto operator<=>(const PositiveRoot&) const = default;
};

std::vector<PositiveRoot> positive_roots(int rank);

// One sorted set per segment of path_vertices(g).
using CrossingSets = std::vector<std::vector<AffineRoot>>;
CrossingSets crossing_sets(const Gallery& g);

// eta = gamma * gamma_{1..n} * delta, so in reading order: the columns of
// delta, then the singleton columns 1, 2, ..., n, then the columns of gamma.
struct InsertedFactor {
    Gallery eta;
    std::size_t first_segment;  // number of delta columns
    CrossingSets sets;          // crossing sets of the n inserted segments
    LatticePoint start;         // path vertex where the insertion begins
};

InsertedFactor insert_full_column_word(const Gallery& gamma, const Gallery& delta);

struct DisjointnessResult {
    bool disjoint = true;
    // Violation: segments (relative to the insertion) sharing a root.
    std::optional<std::pair<std::size_t, std::size_t>> segments;
    std::optional<AffineRoot> root;
};

DisjointnessResult appendix_disjointness(const Gallery& gamma, const Gallery& delta);

struct StabilizerResult {
    bool holds = true;
    // Violation: <alpha, start> > m for this root in this inserted segment.
    std::optional<std::size_t> segment;
    std::optional<AffineRoot> root;
};

// Every (alpha, m) crossed inside the inserted factor satisfies
// <alpha, start> <= m.
StabilizerResult stabilizer_condition(const Gallery& gamma, const Gallery& delta);

WeightVector weight_of_full_column_word(int rank);

// Random gallery with the given number of columns: each column has a
// uniform length in 1..n-1 and a uniform subset of that size.
Gallery random_gallery(int rank, std::size_t columns, std::mt19937_64& rng);

}  // namespace galcryst

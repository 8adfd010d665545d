#pragma once

// Galleries over the alphabet {1..n} and the type A_{n-1} weight lattice.
//
// A gallery is a row of box columns, each filled strictly increasing from top
// to bottom. Columns are stored in reading order: index 0 is the rightmost
// column of the displayed picture. The word of a gallery and its lattice path
// are both built in this order.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galcryst/error.hpp"

namespace galcryst {

using Letter = int;
using Word = std::vector<Letter>;
using Shape = std::vector<int>;
using Column = std::vector<Letter>;

// Throws RankInvalid unless n >= 2.
void check_rank(int n);

// Checks strict increase, range 1..n and length <= max_len.
void check_column(std::span<const Letter> column, int n, std::size_t max_len);

class Gallery {
public:
    explicit Gallery(int rank);
    // Columns in reading order; validated (length <= n-1).
    Gallery(int rank, std::vector<Column> columns);

    int rank() const noexcept { return rank_; }
    const std::vector<Column>& columns() const noexcept { return columns_; }
    std::size_t size() const noexcept { return columns_.size(); }
    bool empty() const noexcept { return columns_.empty(); }
    Shape shape() const;
    std::size_t box_count() const;

    // Replace one letter of column `col`; used by the root operators. The
    // result must still be a valid column, otherwise BrokenColumn is thrown.
    Gallery with_letter_replaced(std::size_t col, Letter from, Letter to) const;

    // Canonical order: (shape, columns in reading order), lexicographic.
    std::strong_ordering operator<=>(const Gallery& other) const;
    bool operator==(const Gallery& other) const = default;

private:
    int rank_;
    std::vector<Column> columns_;
};

struct GalleryHash {
    std::size_t operator()(const Gallery& g) const noexcept;
};

// Integer point of Z^n, not reduced modulo the all-ones vector.
struct LatticePoint {
    std::vector<int> coords;

    bool operator==(const LatticePoint&) const = default;
};

/// Element of X = Z^n / Z(1,...,1), kept in canonical form (min coordinate 0).
class WeightVector {
public:
    explicit WeightVector(int rank);
    explicit WeightVector(std::vector<int> counts);

    int rank() const noexcept { return static_cast<int>(counts_.size()); }
    const std::vector<int>& counts() const noexcept { return counts_; }
    bool is_zero() const;
    bool is_dominant() const;

    WeightVector operator+(const WeightVector& other) const;
    WeightVector operator-(const WeightVector& other) const;
    bool operator==(const WeightVector&) const = default;
    auto operator<=>(const WeightVector&) const = default;

    static WeightVector simple_root(int rank, int i);

private:
    std::vector<int> counts_;
};

// <mu, alpha_i^vee> = c_i - c_{i+1}, 1 <= i <= n-1.
int pairing(const WeightVector& mu, int i);

// mu <= lambda in the dominance order: lambda - mu is a nonnegative integer
// combination of simple roots.
bool dominance_leq(const WeightVector& mu, const WeightVector& lambda);

/// Dominant weight in fundamental coordinates: lambda = sum m_i omega_i.
class DominantWeight {
public:
    explicit DominantWeight(int rank);
    DominantWeight(int rank, std::vector<int> fundamental);

    int rank() const noexcept { return rank_; }
    const std::vector<int>& fundamental() const noexcept { return m_; }
    bool is_zero() const;

    // Counts c_k = sum_{i >= k} m_i.
    WeightVector to_weight() const;
    // Throws NotDominant unless the canonical counts weakly decrease.
    static DominantWeight from_weight(const WeightVector& w);

    bool operator==(const DominantWeight&) const = default;
    auto operator<=>(const DominantWeight&) const = default;

private:
    int rank_;
    std::vector<int> m_;
};

// Columns given in reading order.
Gallery validate_gallery(int rank, std::vector<Column> columns);

Word word(const Gallery& g);
Gallery gallery_from_word(std::span<const Letter> w, int rank);

// gamma2 * gamma1: gamma1 is read first (it sits on the right).
Gallery concat(const Gallery& gamma2, const Gallery& gamma1);

WeightVector weight(const Gallery& g);
WeightVector weight_of_word(std::span<const Letter> w, int rank);

// gamma_0 = 0, gamma_{j+1} = gamma_j + indicator of column j+1.
std::vector<LatticePoint> path_vertices(const Gallery& g);

bool is_dominant(const Gallery& g);

// Galleries of the given shape in canonical order.
std::vector<Gallery> enumerate_galleries(const Shape& shape, int rank);
void check_shape(const Shape& shape, int rank);
// Product of binomial(n, d_s).
std::size_t gallery_count(const Shape& shape, int rank);

// Text formats. Galleries print in display order, left to right:
// "3|1,2|5|2". The empty gallery is the empty string.
std::string format_gallery(const Gallery& g);
Gallery parse_gallery(std::string_view text, int rank);

std::string format_word(std::span<const Letter> w);
// Letters separated by spaces or commas; a bare digit string such as
// "25123" is read letter by letter when rank <= 9.
Word parse_word(std::string_view text, int rank);

std::string format_ints(std::span<const int> v, std::string_view sep = " ");
std::vector<int> parse_ints(std::string_view text);

}  // namespace galcryst

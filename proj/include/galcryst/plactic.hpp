#pragma once

// Plactic monoid of SL_n: Knuth relations plus the column relation
// 1 2 ... n = (empty word), and normalization to semistandard tableaux.

#include <vector>

#include "galcryst/gallery.hpp"

namespace galcryst {

// Row insertion output. Columns are in reading order and may have length n,
// so this is not a Gallery.
struct RawTableau {
    int rank = 0;
    std::vector<Column> columns;

    std::vector<std::vector<Letter>> rows() const;
};

// Column lengths weakly increase in reading order and rows weakly increase
// left to right in the display.
bool is_ssyt(const Gallery& g);

// Schensted row insertion of the letters of w, last letter first.
RawTableau rsk_insert(std::span<const Letter> w, int rank);

Gallery strip_full_columns(const RawTableau& t);

// Unique semistandard tableau with columns of length <= n-1 equivalent to g.
Gallery normal_form(const Gallery& g);

bool equivalent(const Gallery& a, const Gallery& b);

// Words of length <= max_len partitioned into plactic classes by closing
// single-position rewrites under
//   a. y x z = y z x   (x <= y < z)
//   b. x z y = z x y   (x < y <= z)
//   c. 1 2 ... n = empty word, deleted or inserted anywhere
// Intermediate words may grow to max_len + n. Each class is sorted by
// (length, lexicographic), classes are sorted by their first word.
std::vector<std::vector<Word>> oracle_plactic_classes(int max_len, int rank);

}  // namespace galcryst

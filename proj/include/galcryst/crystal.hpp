#pragma once

// Root operators e_i, f_i on galleries via the i-signature rule.

#include <optional>
#include <vector>

#include "galcryst/gallery.hpp"

namespace galcryst {

enum class Tag { Plus, Minus, None };

char tag_symbol(Tag t) noexcept;

// Surviving tags after cancelling adjacent (- +) pairs in display order.
// Positions are reading-order column indices; both lists are sorted by
// display position, left to right. Every surviving + sits left of every
// surviving -.
struct SignatureReduction {
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
};

// One tag per column, in display order (left to right).
std::vector<Tag> i_signature(const Gallery& g, int i);

// Takes tags in display order. Column positions in the result are converted
// to reading order using tags.size().
SignatureReduction reduce_signature(const std::vector<Tag>& tags);

// std::nullopt plays the role of the crystal's 0 element.
std::optional<Gallery> f(const Gallery& g, int i);
std::optional<Gallery> e(const Gallery& g, int i);

// Apply f (or e) `times` times; nullopt as soon as the operator vanishes.
std::optional<Gallery> f_power(const Gallery& g, int i, int times);
std::optional<Gallery> e_power(const Gallery& g, int i, int times);

int epsilon(const Gallery& g, int i);
int phi(const Gallery& g, int i);

}  // namespace galcryst

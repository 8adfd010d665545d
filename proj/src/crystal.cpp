#include "galcryst/crystal.hpp"

#include <algorithm>

namespace galcryst {

char tag_symbol(Tag t) noexcept
{
    switch (t) {
    case Tag::Plus: return '+';
    case Tag::Minus: return '-';
    case Tag::None: return '.';
    }
    return '?';
}

namespace {

void check_index(const Gallery& g, int i)
{
    if (i < 1 || i > g.rank() - 1)
        throw Error(ErrorCode::IndexOutOfRange, "simple root index " + std::to_string(i)
                                                    + " outside 1.." + std::to_string(g.rank() - 1));
}

bool contains(const Column& c, Letter a)
{
    return std::binary_search(c.begin(), c.end(), a);
}

}  // namespace

std::vector<Tag> i_signature(const Gallery& g, int i)
{
    check_index(g, i);
    std::vector<Tag> tags;
    tags.reserve(g.size());
    const auto& cols = g.columns();
    for (std::size_t k = cols.size(); k-- > 0;) {
        const bool has_i = contains(cols[k], i);
        const bool has_next = contains(cols[k], i + 1);
        if (has_i == has_next)
            tags.push_back(Tag::None);
        else
            tags.push_back(has_i ? Tag::Plus : Tag::Minus);
    }
    return tags;
}

SignatureReduction reduce_signature(const std::vector<Tag>& tags)
{
    // Bracket matching in display order: a - opens, a later + closes it.
    SignatureReduction out;
    std::vector<std::size_t> open_minus;
    const std::size_t last = tags.size() - 1;
    for (std::size_t d = 0; d < tags.size(); ++d) {
        if (tags[d] == Tag::Minus) {
            open_minus.push_back(d);
        } else if (tags[d] == Tag::Plus) {
            if (!open_minus.empty())
                open_minus.pop_back();
            else
                out.plus.push_back(last - d);
        }
    }
    for (std::size_t d : open_minus)
        out.minus.push_back(last - d);
    return out;
}

std::optional<Gallery> f(const Gallery& g, int i)
{
    const auto red = reduce_signature(i_signature(g, i));
    if (red.plus.empty())
        return std::nullopt;
    return g.with_letter_replaced(red.plus.back(), i, i + 1);
}

std::optional<Gallery> e(const Gallery& g, int i)
{
    const auto red = reduce_signature(i_signature(g, i));
    if (red.minus.empty())
        return std::nullopt;
    return g.with_letter_replaced(red.minus.front(), i + 1, i);
}

std::optional<Gallery> f_power(const Gallery& g, int i, int times)
{
    std::optional<Gallery> cur = g;
    for (int k = 0; k < times && cur; ++k)
        cur = f(*cur, i);
    return cur;
}

std::optional<Gallery> e_power(const Gallery& g, int i, int times)
{
    std::optional<Gallery> cur = g;
    for (int k = 0; k < times && cur; ++k)
        cur = e(*cur, i);
    return cur;
}

int epsilon(const Gallery& g, int i)
{
    return static_cast<int>(reduce_signature(i_signature(g, i)).minus.size());
}

int phi(const Gallery& g, int i)
{
    return static_cast<int>(reduce_signature(i_signature(g, i)).plus.size());
}

}  // namespace galcryst

#include "galcryst/gallery.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace galcryst {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::RankInvalid: return "RankInvalid";
    case ErrorCode::EmptyColumn: return "EmptyColumn";
    case ErrorCode::NonIncreasingColumn: return "NonIncreasingColumn";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::ColumnTooLong: return "ColumnTooLong";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::BrokenColumn: return "BrokenColumn";
    case ErrorCode::ShapeInvalid: return "ShapeInvalid";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::SvgRankUnsupported: return "SvgRankUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

void check_rank(int n)
{
    if (n < 2)
        throw Error(ErrorCode::RankInvalid, "rank must be at least 2, got " + std::to_string(n));
}

void check_column(std::span<const Letter> column, int n, std::size_t max_len)
{
    if (column.empty())
        throw Error(ErrorCode::EmptyColumn, "columns must contain at least one box");
    for (std::size_t k = 0; k < column.size(); ++k) {
        if (column[k] < 1 || column[k] > n)
            throw Error(ErrorCode::LetterOutOfRange,
                        "letter " + std::to_string(column[k]) + " outside 1.." + std::to_string(n));
        if (k > 0 && column[k - 1] >= column[k])
            throw Error(ErrorCode::NonIncreasingColumn,
                        "column entries must be strictly increasing top to bottom");
    }
    if (column.size() > max_len)
        throw Error(ErrorCode::ColumnTooLong,
                    "column of length " + std::to_string(column.size()) + " exceeds "
                        + std::to_string(max_len));
}

// ---------------------------------------------------------------- Gallery

Gallery::Gallery(int rank) : rank_(rank)
{
    check_rank(rank);
}

Gallery::Gallery(int rank, std::vector<Column> columns) : rank_(rank), columns_(std::move(columns))
{
    check_rank(rank);
    for (const auto& c : columns_)
        check_column(c, rank_, static_cast<std::size_t>(rank_ - 1));
}

Shape Gallery::shape() const
{
    Shape d;
    d.reserve(columns_.size());
    for (const auto& c : columns_)
        d.push_back(static_cast<int>(c.size()));
    return d;
}

std::size_t Gallery::box_count() const
{
    std::size_t total = 0;
    for (const auto& c : columns_)
        total += c.size();
    return total;
}

Gallery Gallery::with_letter_replaced(std::size_t col, Letter from, Letter to) const
{
    Gallery out = *this;
    auto& c = out.columns_.at(col);
    auto it = std::find(c.begin(), c.end(), from);
    if (it == c.end())
        throw Error(ErrorCode::BrokenColumn,
                    "column " + std::to_string(col) + " has no letter " + std::to_string(from));
    *it = to;
    if (!std::is_sorted(c.begin(), c.end())
        || std::adjacent_find(c.begin(), c.end()) != c.end())
        throw Error(ErrorCode::BrokenColumn, "letter replacement breaks strict column order");
    return out;
}

std::strong_ordering Gallery::operator<=>(const Gallery& other) const
{
    if (auto c = rank_ <=> other.rank_; c != 0)
        return c;
    // shape() first, without materialising either shape
    const std::size_t common = std::min(columns_.size(), other.columns_.size());
    for (std::size_t k = 0; k < common; ++k)
        if (auto c = columns_[k].size() <=> other.columns_[k].size(); c != 0)
            return c;
    if (auto c = columns_.size() <=> other.columns_.size(); c != 0)
        return c;
    return columns_ <=> other.columns_;
}

std::size_t GalleryHash::operator()(const Gallery& g) const noexcept
{
    std::size_t h = std::hash<int>{}(g.rank());
    for (const auto& c : g.columns()) {
        h = h * 1000003u ^ (c.size() + 0x9e37u);
        for (Letter a : c)
            h = h * 31u + static_cast<std::size_t>(a);
    }
    return h;
}

// ---------------------------------------------------------------- weights

namespace {

std::vector<int> canonicalize(std::vector<int> c)
{
    if (c.empty())
        return c;
    const int m = *std::min_element(c.begin(), c.end());
    for (auto& x : c)
        x -= m;
    return c;
}

void check_simple_index(int rank, int i)
{
    if (i < 1 || i > rank - 1)
        throw Error(ErrorCode::IndexOutOfRange,
                    "simple root index " + std::to_string(i) + " outside 1.."
                        + std::to_string(rank - 1));
}

void check_same_rank(int a, int b)
{
    if (a != b)
        throw Error(ErrorCode::RankMismatch,
                    "rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

WeightVector::WeightVector(int rank)
{
    check_rank(rank);
    counts_.assign(static_cast<std::size_t>(rank), 0);
}

WeightVector::WeightVector(std::vector<int> counts) : counts_(canonicalize(std::move(counts)))
{
    check_rank(static_cast<int>(counts_.size()));
}

bool WeightVector::is_zero() const
{
    return std::all_of(counts_.begin(), counts_.end(), [](int x) { return x == 0; });
}

bool WeightVector::is_dominant() const
{
    return std::is_sorted(counts_.begin(), counts_.end(), std::greater<>{});
}

WeightVector WeightVector::operator+(const WeightVector& other) const
{
    check_same_rank(rank(), other.rank());
    std::vector<int> c(counts_);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] += other.counts_[k];
    return WeightVector(std::move(c));
}

WeightVector WeightVector::operator-(const WeightVector& other) const
{
    check_same_rank(rank(), other.rank());
    std::vector<int> c(counts_);
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] -= other.counts_[k];
    return WeightVector(std::move(c));
}

WeightVector WeightVector::simple_root(int rank, int i)
{
    check_rank(rank);
    check_simple_index(rank, i);
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    c[static_cast<std::size_t>(i)] = -1;
    return WeightVector(std::move(c));
}

int pairing(const WeightVector& mu, int i)
{
    check_simple_index(mu.rank(), i);
    const auto& c = mu.counts();
    return c[static_cast<std::size_t>(i - 1)] - c[static_cast<std::size_t>(i)];
}

bool dominance_leq(const WeightVector& mu, const WeightVector& lambda)
{
    check_same_rank(mu.rank(), lambda.rank());
    const int n = mu.rank();
    const auto& a = mu.counts();
    const auto& b = lambda.counts();
    const long sa = std::accumulate(a.begin(), a.end(), 0L);
    const long sb = std::accumulate(b.begin(), b.end(), 0L);
    // lambda - mu must lie in the root lattice: pick the lift of lambda whose
    // coordinate sum matches mu.
    if ((sb - sa) % n != 0)
        return false;
    const long shift = (sa - sb) / n;
    long partial = 0;
    for (int k = 0; k < n - 1; ++k) {
        partial += (b[static_cast<std::size_t>(k)] + shift) - a[static_cast<std::size_t>(k)];
        if (partial < 0)
            return false;
    }
    return true;
}

DominantWeight::DominantWeight(int rank) : rank_(rank)
{
    check_rank(rank);
    m_.assign(static_cast<std::size_t>(rank - 1), 0);
}

DominantWeight::DominantWeight(int rank, std::vector<int> fundamental)
    : rank_(rank), m_(std::move(fundamental))
{
    check_rank(rank);
    if (m_.size() != static_cast<std::size_t>(rank - 1))
        throw Error(ErrorCode::RankMismatch, "dominant weight needs " + std::to_string(rank - 1)
                                                 + " fundamental coordinates");
    for (int x : m_)
        if (x < 0)
            throw Error(ErrorCode::NotDominant, "fundamental coordinates must be nonnegative");
}

bool DominantWeight::is_zero() const
{
    return std::all_of(m_.begin(), m_.end(), [](int x) { return x == 0; });
}

WeightVector DominantWeight::to_weight() const
{
    std::vector<int> c(static_cast<std::size_t>(rank_), 0);
    for (int k = rank_ - 2; k >= 0; --k)
        c[static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(k + 1)] + m_[static_cast<std::size_t>(k)];
    return WeightVector(std::move(c));
}

DominantWeight DominantWeight::from_weight(const WeightVector& w)
{
    if (!w.is_dominant())
        throw Error(ErrorCode::NotDominant,
                    "weight (" + format_ints(w.counts(), ",") + ") is not dominant");
    std::vector<int> m;
    const auto& c = w.counts();
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        m.push_back(c[k] - c[k + 1]);
    return DominantWeight(w.rank(), std::move(m));
}

// ---------------------------------------------------------------- galleries

Gallery validate_gallery(int rank, std::vector<Column> columns)
{
    return Gallery(rank, std::move(columns));
}

Word word(const Gallery& g)
{
    Word w;
    w.reserve(g.box_count());
    for (const auto& c : g.columns())
        w.insert(w.end(), c.begin(), c.end());
    return w;
}

Gallery gallery_from_word(std::span<const Letter> w, int rank)
{
    std::vector<Column> cols;
    cols.reserve(w.size());
    for (Letter a : w)
        cols.push_back(Column{a});
    return Gallery(rank, std::move(cols));
}

Gallery concat(const Gallery& gamma2, const Gallery& gamma1)
{
    check_same_rank(gamma2.rank(), gamma1.rank());
    std::vector<Column> cols = gamma1.columns();
    cols.insert(cols.end(), gamma2.columns().begin(), gamma2.columns().end());
    return Gallery(gamma1.rank(), std::move(cols));
}

WeightVector weight_of_word(std::span<const Letter> w, int rank)
{
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    for (Letter a : w)
        ++c.at(static_cast<std::size_t>(a - 1));
    return WeightVector(std::move(c));
}

WeightVector weight(const Gallery& g)
{
    const Word w = word(g);
    return weight_of_word(w, g.rank());
}

std::vector<LatticePoint> path_vertices(const Gallery& g)
{
    std::vector<LatticePoint> out;
    out.reserve(g.size() + 1);
    LatticePoint x{std::vector<int>(static_cast<std::size_t>(g.rank()), 0)};
    out.push_back(x);
    for (const auto& c : g.columns()) {
        for (Letter a : c)
            ++x.coords[static_cast<std::size_t>(a - 1)];
        out.push_back(x);
    }
    return out;
}

bool is_dominant(const Gallery& g)
{
    for (const auto& p : path_vertices(g))
        if (!std::is_sorted(p.coords.begin(), p.coords.end(), std::greater<>{}))
            return false;
    return true;
}

void check_shape(const Shape& shape, int rank)
{
    check_rank(rank);
    for (int d : shape)
        if (d < 1 || d > rank - 1)
            throw Error(ErrorCode::ShapeInvalid, "column length " + std::to_string(d)
                                                     + " outside 1.." + std::to_string(rank - 1));
}

namespace {

// All strictly increasing columns of length len over 1..n, lexicographic.
std::vector<Column> columns_of_length(int len, int n)
{
    std::vector<Column> out;
    Column c(static_cast<std::size_t>(len));
    std::iota(c.begin(), c.end(), 1);
    while (true) {
        out.push_back(c);
        int k = len - 1;
        while (k >= 0 && c[static_cast<std::size_t>(k)] == n - (len - 1 - k))
            --k;
        if (k < 0)
            break;
        ++c[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < len; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

std::vector<Gallery> enumerate_galleries(const Shape& shape, int rank)
{
    check_shape(shape, rank);
    std::vector<std::vector<Column>> choices;
    for (int d : shape)
        choices.push_back(columns_of_length(d, rank));

    std::vector<Gallery> out;
    out.reserve(gallery_count(shape, rank));
    std::vector<std::size_t> idx(shape.size(), 0);
    std::vector<Column> cols(shape.size());
    while (true) {
        for (std::size_t s = 0; s < shape.size(); ++s)
            cols[s] = choices[s][idx[s]];
        out.emplace_back(rank, cols);
        // odometer with the last column varying fastest keeps canonical order
        bool exhausted = true;
        for (std::size_t s = shape.size(); s-- > 0;) {
            if (++idx[s] < choices[s].size()) {
                exhausted = false;
                break;
            }
            idx[s] = 0;
        }
        if (exhausted)
            break;
    }
    return out;
}

std::size_t gallery_count(const Shape& shape, int rank)
{
    check_shape(shape, rank);
    std::size_t total = 1;
    for (int d : shape) {
        std::size_t b = 1;
        for (int k = 1; k <= d; ++k)
            b = b * static_cast<std::size_t>(rank - d + k) / static_cast<std::size_t>(k);
        total *= b;
    }
    return total;
}

// ---------------------------------------------------------------- text

std::string format_ints(std::span<const int> v, std::string_view sep)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0)
            out += sep;
        out += std::to_string(v[k]);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view tok)
{
    tok = trim(tok);
    int value = 0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (tok.empty() || ec != std::errc{} || ptr != end)
        throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::vector<int> parse_ints(std::string_view text)
{
    std::vector<int> out;
    text = trim(text);
    if (text.empty())
        return out;
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::size_t pos = 0;
    while (pos < normalized.size()) {
        while (pos < normalized.size() && std::isspace(static_cast<unsigned char>(normalized[pos])))
            ++pos;
        std::size_t end = pos;
        while (end < normalized.size() && !std::isspace(static_cast<unsigned char>(normalized[end])))
            ++end;
        if (end > pos)
            out.push_back(parse_int(std::string_view(normalized).substr(pos, end - pos)));
        pos = end;
    }
    return out;
}

std::string format_gallery(const Gallery& g)
{
    std::string out;
    const auto& cols = g.columns();
    for (std::size_t k = cols.size(); k-- > 0;) {
        out += format_ints(cols[k], ",");
        if (k > 0)
            out += '|';
    }
    return out;
}

Gallery parse_gallery(std::string_view text, int rank)
{
    check_rank(rank);
    text = trim(text);
    std::vector<Column> display;
    if (!text.empty()) {
        for (auto part : split(text, '|')) {
            Column c;
            for (auto tok : split(part, ','))
                c.push_back(parse_int(tok));
            display.push_back(std::move(c));
        }
    }
    std::reverse(display.begin(), display.end());
    return Gallery(rank, std::move(display));
}

std::string format_word(std::span<const Letter> w)
{
    return format_ints(w, " ");
}

Word parse_word(std::string_view text, int rank)
{
    check_rank(rank);
    text = trim(text);
    const bool compact = rank <= 9 && text.size() > 1
                         && std::all_of(text.begin(), text.end(), [](char ch) {
                                return std::isdigit(static_cast<unsigned char>(ch));
                            });
    Word w;
    if (compact) {
        for (char ch : text)
            w.push_back(ch - '0');
    } else {
        w = parse_ints(text);
    }
    for (Letter a : w)
        if (a < 1 || a > rank)
            throw Error(ErrorCode::LetterOutOfRange,
                        "letter " + std::to_string(a) + " outside 1.." + std::to_string(rank));
    return w;
}

}  // namespace galcryst

#include "galcryst/plactic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace galcryst {

std::vector<std::vector<Letter>> RawTableau::rows() const
{
    // Display columns run left to right in reverse reading order.
    std::vector<std::vector<Letter>> out;
    for (std::size_t k = columns.size(); k-- > 0;) {
        const auto& c = columns[k];
        if (out.size() < c.size())
            out.resize(c.size());
        for (std::size_t r = 0; r < c.size(); ++r)
            out[r].push_back(c[r]);
    }
    return out;
}

bool is_ssyt(const Gallery& g)
{
    const Shape d = g.shape();
    if (!std::is_sorted(d.begin(), d.end()))
        return false;
    const auto& cols = g.columns();
    // Neighbouring display columns: cols[k+1] sits left of cols[k].
    for (std::size_t k = 0; k + 1 < cols.size(); ++k) {
        const auto& right = cols[k];
        const auto& left = cols[k + 1];
        for (std::size_t r = 0; r < right.size(); ++r)
            if (left[r] > right[r])
                return false;
    }
    return true;
}

RawTableau rsk_insert(std::span<const Letter> w, int rank)
{
    check_rank(rank);
    std::vector<std::vector<Letter>> rows;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Letter x = *it;
        if (x < 1 || x > rank)
            throw Error(ErrorCode::LetterOutOfRange,
                        "letter " + std::to_string(x) + " outside 1.." + std::to_string(rank));
        bool placed = false;
        for (auto& row : rows) {
            auto pos = std::upper_bound(row.begin(), row.end(), x);
            if (pos == row.end()) {
                row.push_back(x);
                placed = true;
                break;
            }
            std::swap(*pos, x);
        }
        if (!placed)
            rows.push_back({x});
    }

    RawTableau t;
    t.rank = rank;
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    t.columns.resize(width);
    for (std::size_t j = 0; j < width; ++j) {
        auto& col = t.columns[width - 1 - j];
        for (const auto& row : rows) {
            if (row.size() <= j)
                break;
            col.push_back(row[j]);
        }
    }
    return t;
}

Gallery strip_full_columns(const RawTableau& t)
{
    std::vector<Column> kept;
    for (const auto& c : t.columns) {
        if (static_cast<int>(c.size()) == t.rank)
            continue;
        kept.push_back(c);
    }
    return Gallery(t.rank, std::move(kept));
}

Gallery normal_form(const Gallery& g)
{
    Word w = word(g);
    while (true) {
        const RawTableau t = rsk_insert(w, g.rank());
        Gallery stripped = strip_full_columns(t);
        if (stripped.size() == t.columns.size())
            return stripped;
        w = word(stripped);
    }
}

bool equivalent(const Gallery& a, const Gallery& b)
{
    if (a.rank() != b.rank())
        throw Error(ErrorCode::RankMismatch, "rank mismatch: " + std::to_string(a.rank()) + " vs "
                                                 + std::to_string(b.rank()));
    return normal_form(a) == normal_form(b);
}

namespace {

bool shortlex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<Word>> oracle_plactic_classes(int max_len, int rank)
{
    check_rank(rank);
    if (max_len < 0)
        throw Error(ErrorCode::IndexOutOfRange, "max_len must be nonnegative");
    const int bound = max_len + rank;

    // Index words of each length in base-n; offset[l] is the id of the first
    // word of length l.
    std::vector<std::size_t> offset(static_cast<std::size_t>(bound) + 2, 0);
    std::size_t count = 1;
    for (int l = 0; l <= bound; ++l) {
        offset[static_cast<std::size_t>(l) + 1] = offset[static_cast<std::size_t>(l)] + count;
        count *= static_cast<std::size_t>(rank);
    }
    const std::size_t total = offset.back();

    auto id_of = [&](const Word& w) {
        std::size_t code = 0;
        for (Letter a : w)
            code = code * static_cast<std::size_t>(rank) + static_cast<std::size_t>(a - 1);
        return offset[w.size()] + code;
    };

    UnionFind uf(total);
    Word full(static_cast<std::size_t>(rank));
    std::iota(full.begin(), full.end(), 1);

    Word w;
    for (int l = 0; l <= bound; ++l) {
        w.assign(static_cast<std::size_t>(l), 1);
        while (true) {
            const std::size_t id = id_of(w);
            for (std::size_t p = 0; p + 2 < w.size(); ++p) {
                const Letter a = w[p], b = w[p + 1], c = w[p + 2];
                // a. y x z -> y z x with x <= y < z
                if (b <= a && a < c) {
                    Word v = w;
                    std::swap(v[p + 1], v[p + 2]);
                    uf.unite(id, id_of(v));
                }
                // b. x z y -> z x y with x < y <= z
                if (a < c && c <= b) {
                    Word v = w;
                    std::swap(v[p], v[p + 1]);
                    uf.unite(id, id_of(v));
                }
            }
            // c. delete a factor 1..n (insertion is the same edge seen from
            // the longer word)
            for (std::size_t p = 0; p + full.size() <= w.size(); ++p) {
                if (std::equal(full.begin(), full.end(), w.begin() + static_cast<std::ptrdiff_t>(p))) {
                    Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
                    v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(p + full.size()), w.end());
                    uf.unite(id, id_of(v));
                }
            }
            // next word of this length
            int k = l - 1;
            while (k >= 0 && w[static_cast<std::size_t>(k)] == rank)
                w[static_cast<std::size_t>(k--)] = 1;
            if (k < 0)
                break;
            ++w[static_cast<std::size_t>(k)];
        }
    }

    std::map<std::size_t, std::vector<Word>> by_root;
    for (int l = 0; l <= max_len; ++l) {
        w.assign(static_cast<std::size_t>(l), 1);
        while (true) {
            by_root[uf.find(id_of(w))].push_back(w);
            int k = l - 1;
            while (k >= 0 && w[static_cast<std::size_t>(k)] == rank)
                w[static_cast<std::size_t>(k--)] = 1;
            if (k < 0)
                break;
            ++w[static_cast<std::size_t>(k)];
        }
    }

    std::vector<std::vector<Word>> classes;
    classes.reserve(by_root.size());
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end(), shortlex_less);
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return shortlex_less(x.front(), y.front()); });
    return classes;
}

}  // namespace galcryst

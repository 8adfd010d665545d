#include "galcryst/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "galcryst/crystal.hpp"

namespace galcryst {

// ---------------------------------------------------------------- graph

CrystalGraph::CrystalGraph(int rank, std::vector<Gallery> vertices)
    : rank_(rank), vertices_(std::move(vertices))
{
    check_rank(rank);
    for (const auto& v : vertices_)
        if (v.rank() != rank)
            throw Error(ErrorCode::RankMismatch, "vertex rank differs from graph rank");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        for (int i = 1; i < rank_; ++i) {
            if (auto t = f(vertices_[k], i)) {
                if (auto idx = index_of(*t))
                    edges_.push_back({k, *idx, i});
            }
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

std::optional<std::size_t> CrystalGraph::index_of(const Gallery& g) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), g);
    if (it == vertices_.end() || !(*it == g))
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> CrystalGraph::sources() const
{
    std::vector<bool> has_incoming(vertices_.size(), false);
    for (const auto& edge : edges_)
        has_incoming[edge.to] = true;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (!has_incoming[k])
            out.push_back(k);
    return out;
}

bool CrystalGraph::is_connected() const
{
    if (vertices_.empty())
        return false;
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& edge : edges_) {
        adj[edge.from].push_back(edge.to);
        adj[edge.to].push_back(edge.from);
    }
    std::vector<bool> seen(vertices_.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t u : adj[v]) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                queue.push_back(u);
            }
        }
    }
    return reached == vertices_.size();
}

CrystalGraph connected_component(const Gallery& g)
{
    std::unordered_set<Gallery, GalleryHash> seen{g};
    std::deque<Gallery> queue{g};
    while (!queue.empty()) {
        const Gallery v = std::move(queue.front());
        queue.pop_front();
        for (int i = 1; i < g.rank(); ++i) {
            for (auto* op : {&f, &e}) {
                if (auto next = op(v, i); next && !seen.contains(*next)) {
                    seen.insert(*next);
                    queue.push_back(std::move(*next));
                }
            }
        }
    }
    return CrystalGraph(g.rank(), std::vector<Gallery>(seen.begin(), seen.end()));
}

Gallery highest_weight_vertex(const Gallery& g)
{
    Gallery cur = g;
    while (true) {
        bool moved = false;
        for (int i = 1; i < g.rank(); ++i) {
            if (auto up = e(cur, i)) {
                cur = std::move(*up);
                moved = true;
                break;
            }
        }
        if (!moved)
            return cur;
    }
}

// ---------------------------------------------------------------- B(lambda)

Shape shape_of_weight(const DominantWeight& lambda)
{
    Shape d;
    const auto& m = lambda.fundamental();
    for (std::size_t i = 0; i < m.size(); ++i)
        d.insert(d.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i + 1));
    return d;
}

DominantWeight weight_of_shape(const Shape& shape, int rank)
{
    check_shape(shape, rank);
    std::vector<int> m(static_cast<std::size_t>(rank - 1), 0);
    for (int d : shape)
        ++m[static_cast<std::size_t>(d - 1)];
    return DominantWeight(rank, std::move(m));
}

Gallery canonical_dominant_gallery(const DominantWeight& lambda)
{
    std::vector<Column> cols;
    for (int d : shape_of_weight(lambda)) {
        Column c(static_cast<std::size_t>(d));
        std::iota(c.begin(), c.end(), 1);
        cols.push_back(std::move(c));
    }
    return Gallery(lambda.rank(), std::move(cols));
}

CrystalGraph generate_b_lambda(const DominantWeight& lambda)
{
    return connected_component(canonical_dominant_gallery(lambda));
}

// ---------------------------------------------------------------- isomorphism

std::optional<std::vector<std::size_t>> is_isomorphic(const CrystalGraph& c1,
                                                      const CrystalGraph& c2)
{
    if (!c1.is_connected() || !c2.is_connected())
        throw Error(ErrorCode::NotConnected, "isomorphism test needs connected crystals");
    if (c1.rank() != c2.rank() || c1.size() != c2.size())
        return std::nullopt;
    const auto s1 = c1.sources();
    const auto s2 = c2.sources();
    if (s1.size() != 1 || s2.size() != 1)
        return std::nullopt;
    const auto& v1 = c1.vertices();
    const auto& v2 = c2.vertices();
    if (weight(v1[s1[0]]) != weight(v2[s2[0]]))
        return std::nullopt;

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(c1.size(), unset);
    std::vector<bool> used(c2.size(), false);
    map[s1[0]] = s2[0];
    used[s2[0]] = true;
    std::deque<std::size_t> queue{s1[0]};

    auto step = [&](const std::optional<Gallery>& a, const std::optional<Gallery>& b) {
        if (a.has_value() != b.has_value())
            return false;
        if (!a)
            return true;
        const auto ia = c1.index_of(*a);
        const auto ib = c2.index_of(*b);
        if (ia.has_value() != ib.has_value())
            return false;
        if (!ia)
            return true;
        if (map[*ia] == unset) {
            if (used[*ib])
                return false;
            map[*ia] = *ib;
            used[*ib] = true;
            queue.push_back(*ia);
            return true;
        }
        return map[*ia] == *ib;
    };

    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        const Gallery& a = v1[k];
        const Gallery& b = v2[map[k]];
        for (int i = 1; i < c1.rank(); ++i) {
            if (!step(f(a, i), f(b, i)) || !step(e(a, i), e(b, i)))
                return std::nullopt;
        }
    }
    if (std::find(map.begin(), map.end(), unset) != map.end())
        return std::nullopt;
    return map;
}

// ---------------------------------------------------------------- Gamma(d)

std::vector<CrystalGraph> components_of_shape(const Shape& shape, int rank)
{
    const auto all = enumerate_galleries(shape, rank);
    std::vector<bool> done(all.size(), false);
    std::vector<CrystalGraph> out;
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (done[k])
            continue;
        CrystalGraph comp = connected_component(all[k]);
        for (const auto& v : comp.vertices()) {
            auto it = std::lower_bound(all.begin(), all.end(), v);
            done[static_cast<std::size_t>(it - all.begin())] = true;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

Decomposition decompose(const Shape& shape, int rank)
{
    check_shape(shape, rank);
    std::map<DominantWeight, DecompositionEntry> by_lambda;
    std::size_t total = 0;
    for (const auto& g : enumerate_galleries(shape, rank)) {
        ++total;
        if (!is_dominant(g))
            continue;
        auto lambda = DominantWeight::from_weight(weight(g));
        auto [it, inserted] = by_lambda.try_emplace(lambda, DecompositionEntry{lambda, 0, {}});
        ++it->second.multiplicity;
        it->second.representatives.push_back(g);
    }
    Decomposition out{rank, shape, {}, 0, total};
    for (auto& [lambda, entry] : by_lambda) {
        out.component_count += entry.multiplicity;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

// ---------------------------------------------------------------- dimension

std::uint64_t weyl_dimension(const DominantWeight& lambda)
{
    const auto c = lambda.to_weight().counts();
    const int n = lambda.rank();
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= static_cast<unsigned>(c[static_cast<std::size_t>(i)]
                                         - c[static_cast<std::size_t>(j)] + j - i);
            den *= static_cast<unsigned>(j - i);
            unsigned __int128 a = num, b = den;
            while (b != 0) {
                const auto r = a % b;
                a = b;
                b = r;
            }
            num /= a;
            den /= a;
        }
    }
    return static_cast<std::uint64_t>(num / den);
}

// ---------------------------------------------------------------- SSYT

namespace {

struct RowFiller {
    int n;
    std::vector<int> row_len;
    std::vector<int> col_height;
    std::vector<std::vector<Letter>> rows;
    std::vector<Gallery> out;

    void fill(std::size_t r, std::size_t j)
    {
        if (r == row_len.size()) {
            emit();
            return;
        }
        if (j == static_cast<std::size_t>(row_len[r])) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, rows[r][j - 1]);
        if (r > 0)
            lo = std::max(lo, rows[r - 1][j] + 1);
        const int hi = n - (col_height[j] - 1 - static_cast<int>(r));
        for (int v = lo; v <= hi; ++v) {
            rows[r][j] = v;
            fill(r, j + 1);
        }
    }

    void emit()
    {
        const std::size_t width = row_len.empty() ? 0 : static_cast<std::size_t>(row_len[0]);
        std::vector<Column> cols(width);
        for (std::size_t j = 0; j < width; ++j) {
            auto& col = cols[width - 1 - j];
            for (std::size_t r = 0; r < rows.size() && static_cast<std::size_t>(row_len[r]) > j; ++r)
                col.push_back(rows[r][j]);
        }
        out.emplace_back(n, std::move(cols));
    }
};

}  // namespace

std::vector<Gallery> enumerate_ssyt(const DominantWeight& lambda)
{
    const auto c = lambda.to_weight().counts();
    RowFiller filler;
    filler.n = lambda.rank();
    for (int len : c)
        if (len > 0)
            filler.row_len.push_back(len);
    const int width = filler.row_len.empty() ? 0 : filler.row_len[0];
    filler.col_height.assign(static_cast<std::size_t>(width), 0);
    for (int len : filler.row_len)
        for (int j = 0; j < len; ++j)
            ++filler.col_height[static_cast<std::size_t>(j)];
    for (int len : filler.row_len)
        filler.rows.emplace_back(static_cast<std::size_t>(len), 0);
    filler.fill(0, 0);
    std::sort(filler.out.begin(), filler.out.end());
    return filler.out;
}

}  // namespace galcryst

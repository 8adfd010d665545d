#include "galcryst/affine_roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace galcryst {

int AffineRoot::pair(const LatticePoint& x) const
{
    return x.coords[static_cast<std::size_t>(a - 1)] - x.coords[static_cast<std::size_t>(b - 1)];
}

std::vector<PositiveRoot> positive_roots(int rank)
{
    check_rank(rank);
    std::vector<PositiveRoot> out;
    for (int a = 1; a <= rank; ++a)
        for (int b = a + 1; b <= rank; ++b)
            out.push_back({a, b});
    return out;
}

CrossingSets crossing_sets(const Gallery& g)
{
    const auto path = path_vertices(g);
    const auto roots = positive_roots(g.rank());
    CrossingSets out;
    out.reserve(g.size());
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        std::vector<AffineRoot> s;
        for (const auto& r : roots) {
            AffineRoot probe{r.a, r.b, 0};
            const int here = probe.pair(path[j]);
            // the wall through gamma_j has level m = here
            if (probe.pair(path[j + 1]) > here)
                s.push_back({r.a, r.b, here});
        }
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    }
    return out;
}

InsertedFactor insert_full_column_word(const Gallery& gamma, const Gallery& delta)
{
    if (gamma.rank() != delta.rank())
        throw Error(ErrorCode::RankMismatch, "rank mismatch: " + std::to_string(gamma.rank())
                                                 + " vs " + std::to_string(delta.rank()));
    const int n = gamma.rank();
    Word full(static_cast<std::size_t>(n));
    std::iota(full.begin(), full.end(), 1);
    // The factor 1..n is a full column; as a word gallery it is n singleton
    // columns, which keeps every column below length n.
    Gallery eta = concat(gamma, concat(gallery_from_word(full, n), delta));

    InsertedFactor out{eta, delta.size(), {}, {}};
    const auto all = crossing_sets(eta);
    out.sets.assign(all.begin() + static_cast<std::ptrdiff_t>(out.first_segment),
                    all.begin() + static_cast<std::ptrdiff_t>(out.first_segment + full.size()));
    out.start = path_vertices(eta)[out.first_segment];
    return out;
}

DisjointnessResult appendix_disjointness(const Gallery& gamma, const Gallery& delta)
{
    const auto ins = insert_full_column_word(gamma, delta);
    DisjointnessResult res;
    for (std::size_t x = 0; x < ins.sets.size(); ++x) {
        for (std::size_t y = x + 1; y < ins.sets.size(); ++y) {
            std::vector<AffineRoot> common;
            std::set_intersection(ins.sets[x].begin(), ins.sets[x].end(), ins.sets[y].begin(),
                                  ins.sets[y].end(), std::back_inserter(common));
            if (!common.empty()) {
                res.disjoint = false;
                res.segments = std::pair{x, y};
                res.root = common.front();
                return res;
            }
        }
    }
    return res;
}

StabilizerResult stabilizer_condition(const Gallery& gamma, const Gallery& delta)
{
    const auto ins = insert_full_column_word(gamma, delta);
    StabilizerResult res;
    for (std::size_t x = 0; x < ins.sets.size(); ++x) {
        for (const auto& root : ins.sets[x]) {
            if (root.pair(ins.start) > root.level) {
                res.holds = false;
                res.segment = x;
                res.root = root;
                return res;
            }
        }
    }
    return res;
}

WeightVector weight_of_full_column_word(int rank)
{
    check_rank(rank);
    Word full(static_cast<std::size_t>(rank));
    std::iota(full.begin(), full.end(), 1);
    return weight(gallery_from_word(full, rank));
}

Gallery random_gallery(int rank, std::size_t columns, std::mt19937_64& rng)
{
    check_rank(rank);
    std::vector<Column> cols;
    cols.reserve(columns);
    std::vector<Letter> letters(static_cast<std::size_t>(rank));
    for (std::size_t k = 0; k < columns; ++k) {
        const auto len = static_cast<std::size_t>(1 + rng() % static_cast<std::uint64_t>(rank - 1));
        std::iota(letters.begin(), letters.end(), 1);
        // partial Fisher-Yates on raw generator output, portable across
        // standard libraries
        for (std::size_t t = 0; t < len; ++t) {
            const auto pick = t + static_cast<std::size_t>(rng() % (letters.size() - t));
            std::swap(letters[t], letters[pick]);
        }
        Column c(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len));
        std::sort(c.begin(), c.end());
        cols.push_back(std::move(c));
    }
    return Gallery(rank, std::move(cols));
}

}  // namespace galcryst

#include <doctest.h>

#include <map>
#include <random>

#include "galcryst/crystal.hpp"
#include "galcryst/plactic.hpp"
#include "oracles.hpp"

using namespace galcryst;

namespace {

Gallery G(const char* s, int n) { return parse_gallery(s, n); }
Gallery W(std::initializer_list<int> w, int n) { return gallery_from_word(Word(w), n); }

}  // namespace

TEST_CASE("is_ssyt")
{
    CHECK(is_ssyt(G("1,4|2|2", 5)));
    CHECK(is_ssyt(G("1,2|1", 3)));
    CHECK_FALSE(is_ssyt(G("1|1,2", 3)));
    CHECK(is_ssyt(Gallery(3)));
    CHECK_FALSE(is_ssyt(G("2|1", 3)));
    CHECK(is_ssyt(G("1|1", 3)));
    CHECK_FALSE(is_ssyt(G("2,3|1", 3)));  // row 2 | 1 decreases
}

TEST_CASE("rsk_insert")
{
    auto t = rsk_insert(Word{1, 2, 1}, 3);
    CHECK(t.columns == std::vector<Column>{{1}, {1, 2}});
    CHECK(t.rows() == std::vector<std::vector<Letter>>{{1, 1}, {2}});

    t = rsk_insert(Word{1}, 3);
    CHECK(t.columns == std::vector<Column>{{1}});

    t = rsk_insert(Word{3, 2, 1}, 3);
    CHECK(t.columns == std::vector<Column>{{3}, {2}, {1}});
    CHECK(rsk_insert(Word{1, 2, 3}, 3).columns == std::vector<Column>{{1, 2, 3}});

    CHECK(rsk_insert(Word{}, 3).columns.empty());
    CHECK_THROWS_AS(rsk_insert(Word{4}, 3), Error);
}

TEST_CASE("strip_full_columns")
{
    CHECK(strip_full_columns(RawTableau{3, {{1, 2, 3}}}).empty());
    CHECK(strip_full_columns(RawTableau{3, {{1}, {1, 2}}}) == G("1,2|1", 3));
    CHECK(strip_full_columns(RawTableau{3, {{1, 2}, {1, 2, 3}}}) == G("1,2", 3));
}

TEST_CASE("normal_form")
{
    const int n = 3;
    CHECK(normal_form(G("1,2|1", n)) == G("1,2|1", n));
    CHECK(normal_form(G("1|2|1", n)) == G("1,2|1", n));
    CHECK(normal_form(G("1|2|3|1|2|1", n)) == G("1,2|1", n));
    CHECK(normal_form(W({1, 2, 3}, n)).empty());
    CHECK(normal_form(Gallery(n)).empty());
    // the drawn top vertex of the shape (2,1) crystal
    CHECK(normal_form(G("1|1,2", n)) == G("1,2|1", n));
}

TEST_CASE("normal form needs repeated stripping")
{
    // 1 2 3 1 2 3 inserts to two full columns for n = 3
    CHECK(normal_form(W({1, 2, 3, 1, 2, 3}, 3)).empty());
    // 2 1 3 2 ... word whose tableau after stripping still has content
    const Gallery g = W({3, 2, 1, 1}, 3);
    const Gallery t = normal_form(g);
    CHECK(is_ssyt(t));
    CHECK(weight(t) == weight(g));
}

TEST_CASE("equivalent")
{
    CHECK(equivalent(G("3|1,2|5|2", 5), G("3|2|1|5|2", 5)));
    CHECK(equivalent(G("1,2|1", 3), G("1|2|1", 3)));
    CHECK_FALSE(equivalent(G("1", 3), G("2", 3)));
    CHECK(equivalent(Gallery(3), W({1, 2, 3}, 3)));
    CHECK_THROWS_AS(equivalent(G("1", 3), G("1", 4)), Error);
}

TEST_CASE("oracle classes")
{
    const auto classes = oracle_plactic_classes(3, 3);
    auto class_of = [&](const Word& w) -> const std::vector<Word>* {
        for (const auto& c : classes)
            if (std::find(c.begin(), c.end(), w) != c.end())
                return &c;
        return nullptr;
    };
    REQUIRE(class_of(Word{1, 1, 2}) != nullptr);
    CHECK(class_of(Word{1, 1, 2}) == class_of(Word{1, 2, 1}));
    CHECK(class_of(Word{1, 2, 3}) == class_of(Word{}));
    CHECK(class_of(Word{1, 3, 2}) != class_of(Word{}));

    // words of length 2 over {1,2}: [2,1] shares its class with no other
    const auto c21 = class_of(Word{2, 1});
    REQUIRE(c21 != nullptr);
    for (const auto& w : *c21)
        if (w.size() == 2 && w[0] <= 2 && w[1] <= 2)
            CHECK(w == Word{2, 1});

    std::size_t total = 0;
    for (const auto& c : classes)
        total += c.size();
    CHECK(total == 1 + 3 + 9 + 27);
}

TEST_CASE("oracle agrees with normal form, n = 4, length <= 4")
{
    const int n = 4;
    const auto classes = oracle_plactic_classes(4, n);
    std::map<Gallery, std::size_t> class_of_nf;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        for (const auto& w : classes[k]) {
            const Gallery nf = normal_form(gallery_from_word(w, n));
            auto [it, inserted] = class_of_nf.emplace(nf, k);
            CHECK(it->second == k);
        }
    }
    CHECK(class_of_nf.size() == classes.size());
}

TEST_CASE("normal form properties")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto random_word = [&](std::size_t len) {
            Word w;
            for (std::size_t k = 0; k < len; ++k)
                w.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
            return w;
        };
        const Gallery g = gallery_from_word(random_word(rng() % 10), n);
        const Gallery t = normal_form(g);
        CHECK(is_ssyt(t));
        for (int d : t.shape())
            CHECK(d <= n - 1);
        CHECK(normal_form(t) == t);
        CHECK(weight(t) == weight(g));

        // crystal compatibility
        for (int i = 1; i < n; ++i) {
            const auto fg = f(g, i);
            const auto ft = f(t, i);
            CHECK(fg.has_value() == ft.has_value());
            if (fg && ft)
                CHECK(equivalent(*fg, *ft));
        }

        // congruence for concat
        const Gallery h = gallery_from_word(random_word(rng() % 6), n);
        CHECK(normal_form(concat(h, g)) == normal_form(concat(normal_form(h), t)));
    }
}

// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the allowed limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "galcryst/affine_roots.hpp"
#include "galcryst/crystal.hpp"
#include "galcryst/crystal_graph.hpp"
#include "galcryst/mv_map.hpp"
#include "galcryst/plactic.hpp"
#include "oracles.hpp"

using namespace galcryst;

namespace {

// Counts checks and failures of one criterion, keeping the first message.
struct Checker {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (ok)
            return;
        if (failures++ == 0)
            first = what;
    }
};

Gallery G(const char* s, int n) { return parse_gallery(s, n); }

using Edges = std::set<std::tuple<std::string, std::string, int>>;

Edges labelled_edges(const CrystalGraph& c)
{
    Edges out;
    for (const auto& e : c.edges())
        out.emplace(format_gallery(c.vertices()[e.from]), format_gallery(c.vertices()[e.to]), e.i);
    return out;
}

void worked_examples(Checker& c)
{
    const Gallery star = G("3|1,2|5|2", 5);
    c.expect(word(star) == Word{2, 5, 1, 2, 3}, "word of 3|1,2|5|2");
    c.expect(f(star, 2) == G("3|1,2|5|3", 5), "f_2 of 3|1,2|5|2");
    c.expect(!f(star, 1).has_value(), "f_1 of 3|1,2|5|2 should be absent");
}

void dominance_example(Checker& c)
{
    const Gallery nu = G("1,2|1", 3);
    const Gallery delta = G("2|3|1", 3);
    c.expect(is_dominant(nu), "1,2|1 dominant");
    c.expect(!is_dominant(delta), "2|3|1 not dominant");
    c.expect(weight(nu) == WeightVector({2, 1, 0}), "weight of 1,2|1");
    c.expect(weight(delta).is_zero(), "weight of 2|3|1");
}

void plactic_example(Checker& c)
{
    const Gallery t = G("1,2|1", 3);
    for (const char* s : {"1,2|1", "1|2|1", "1|2|1|3|2|1"})
        c.expect(normal_form(G(s, 3)) == t, std::string("normal form of ") + s);
    c.expect(normal_form(gallery_from_word(Word{1, 2, 3}, 3)).empty(), "normal form of 1 2 3");
}

void crystal_figure(Checker& c)
{
    const auto nu = connected_component(G("1,2|1", 3));
    c.expect(nu.size() == 8, "component of 1,2|1 has 8 vertices");

    // The drawn diagram, display strings, top vertex 1|1,2.
    const Edges drawn{
        {"1|1,2", "2|1,2", 1}, {"1|1,2", "1|1,3", 2}, {"2|1,2", "2|1,3", 2},
        {"2|1,3", "3|1,3", 2}, {"3|1,3", "3|2,3", 1}, {"1|1,3", "1|2,3", 1},
        {"1|2,3", "2|2,3", 1}, {"2|2,3", "3|2,3", 2},
    };
    const auto fig = connected_component(G("1|1,2", 3));
    c.expect(fig.size() == 8, "drawn component has 8 vertices");
    c.expect(labelled_edges(fig) == drawn, "edge labels of the drawn component");
    c.expect(is_isomorphic(fig, nu).has_value(), "drawn component isomorphic to component of 1,2|1");

    for (const auto* comp : {&nu, &fig}) {
        const Gallery top = comp->vertices()[comp->sources().at(0)];
        const auto image = connected_component(gallery_from_word(word(top), 3));
        c.expect(image.size() == 8, "word image has 8 vertices");
        for (const auto& v : image.vertices())
            c.expect(v.shape() == Shape{1, 1, 1}, "word image lies in shape (1,1,1)");
        const auto iso = is_isomorphic(*comp, image);
        c.expect(iso.has_value(), "word reading is an isomorphism onto its image");
        if (iso)
            for (std::size_t k = 0; k < comp->size(); ++k)
                c.expect(image.vertices()[(*iso)[k]] ==
                             gallery_from_word(word(comp->vertices()[k]), 3),
                         "isomorphism equals word reading");
    }
}

void appendix_example(Checker& c)
{
    const auto s = crossing_sets(gallery_from_word(Word{1, 2, 3}, 3));
    c.expect(s.size() == 3, "three segments");
    if (s.size() == 3) {
        c.expect(s[0] == std::vector<AffineRoot>{{1, 2, 0}, {1, 3, 0}}, "first crossing set");
        c.expect(s[1] == std::vector<AffineRoot>{{2, 3, 0}}, "second crossing set");
        c.expect(s[2].empty(), "third crossing set");
    }
    c.expect(appendix_disjointness(Gallery(3), Gallery(3)).disjoint, "disjointness for empty factors");
}

void crystal_axioms(Checker& c)
{
    for (int n : {2, 3, 4}) {
        for (const auto& d : oracle::shapes_up_to(5, n)) {
            for (const auto& g : enumerate_galleries(d, n)) {
                const std::string at = format_gallery(g) + " n=" + std::to_string(n);
                const Gallery gw = gallery_from_word(word(g), n);
                bool all_e_absent = true;
                for (int i = 1; i < n; ++i) {
                    const auto up = e(g, i);
                    const auto down = f(g, i);
                    all_e_absent = all_e_absent && !up;
                    if (down) {
                        c.expect(e(*down, i) == g, "e f = id at " + at);
                        c.expect(weight(*down) + WeightVector::simple_root(n, i) == weight(g),
                                 "f lowers weight at " + at);
                        c.expect(down->shape() == d, "f keeps shape at " + at);
                    }
                    if (up) {
                        c.expect(f(*up, i) == g, "f e = id at " + at);
                        c.expect(weight(*up) == weight(g) + WeightVector::simple_root(n, i),
                                 "e raises weight at " + at);
                        c.expect(up->shape() == d, "e keeps shape at " + at);
                    }
                    c.expect(phi(g, i) == epsilon(g, i) + pairing(weight(g), i), "string axiom at " + at);
                    c.expect(epsilon(g, i) == oracle::string_length_e(g, i), "epsilon at " + at);
                    c.expect(phi(g, i) == oracle::string_length_f(g, i), "phi at " + at);

                    const auto fw = f(gw, i);
                    c.expect(fw.has_value() == down.has_value() &&
                                 (!fw || *fw == gallery_from_word(word(*down), n)),
                             "word reading commutes with f at " + at);
                    const auto ew = e(gw, i);
                    c.expect(ew.has_value() == up.has_value() &&
                                 (!ew || *ew == gallery_from_word(word(*up), n)),
                             "word reading commutes with e at " + at);
                }
                c.expect(is_dominant(g) == all_e_absent, "dominant iff all e absent at " + at);
            }
        }
    }
}

void oracle_equivalence(Checker& c)
{
    for (int n : {2, 3}) {
        const auto classes = oracle_plactic_classes(5, n);
        std::vector<std::pair<Gallery, std::size_t>> words;
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (const auto& w : classes[k])
                words.emplace_back(gallery_from_word(w, n), k);
        std::vector<Gallery> nf;
        for (const auto& [g, k] : words)
            nf.push_back(normal_form(g));
        for (std::size_t x = 0; x < words.size(); ++x)
            for (std::size_t y = x; y < words.size(); ++y)
                c.expect((words[x].second == words[y].second) == (nf[x] == nf[y]),
                         "oracle vs normal form: " + format_word(word(words[x].first)) + " / " +
                             format_word(word(words[y].first)) + " n=" + std::to_string(n));
    }
}

// All dominant weights of rank n with Weyl dimension <= limit. The dimension
// grows in every coordinate, so each coordinate stops at the first overflow.
void weights_with_dimension(int n, std::uint64_t limit, std::vector<int>& m, std::size_t k,
                            std::vector<DominantWeight>& out)
{
    if (k == m.size()) {
        out.emplace_back(n, m);
        return;
    }
    for (m[k] = 0;; ++m[k]) {
        std::vector<int> probe = m;
        for (std::size_t j = k + 1; j < probe.size(); ++j)
            probe[j] = 0;
        if (weyl_dimension(DominantWeight(n, probe)) > limit)
            break;
        weights_with_dimension(n, limit, m, k + 1, out);
    }
    m[k] = 0;
}

void dimensions(Checker& c)
{
    std::size_t count = 0;
    for (int n : {2, 3, 4}) {
        std::vector<DominantWeight> lambdas;
        std::vector<int> m(static_cast<std::size_t>(n - 1), 0);
        weights_with_dimension(n, 500, m, 0, lambdas);
        for (const auto& lambda : lambdas) {
            const std::string at = "lambda=" + format_ints(lambda.fundamental(), ",") + " n=" + std::to_string(n);
            const auto b = generate_b_lambda(lambda);
            c.expect(b.size() == weyl_dimension(lambda), "|B(lambda)| at " + at);
            std::map<WeightVector, std::size_t> crystal_mult, tableau_mult;
            for (const auto& v : b.vertices())
                ++crystal_mult[weight(v)];
            for (const auto& t : enumerate_ssyt(lambda))
                ++tableau_mult[weight(t)];
            c.expect(crystal_mult == tableau_mult, "weight multiplicities at " + at);
            ++count;
        }
    }
    c.expect(count > 100, "enumerated weights");

    const auto d = decompose({1, 1, 1}, 3);
    std::map<std::vector<int>, std::size_t> mult;
    std::uint64_t total = 0;
    for (const auto& e : d.entries) {
        mult[e.lambda.fundamental()] = e.multiplicity;
        total += e.multiplicity * weyl_dimension(e.lambda);
    }
    c.expect(mult == std::map<std::vector<int>, std::size_t>{{{0, 0}, 1}, {{1, 1}, 2}, {{3, 0}, 1}},
             "decomposition of (1,1,1)");
    c.expect(total == 27 && d.total_vertices == 27, "10+8+8+1 = 27");
}

void label_map(Checker& c)
{
    for (int n : {2, 3, 4}) {
        for (const auto& d : oracle::shapes_up_to(5, n)) {
            const std::string at = "d=" + format_ints(d, ",") + " n=" + std::to_string(n);
            const auto report = verify_surjectivity(d, n);
            c.expect(report.ok(), "surjectivity at " + at);

            long expected = 1;
            for (int ds : d)
                expected *= oracle::binomial(n, ds);

            std::map<Gallery, std::size_t> labels;
            for (const auto& g : enumerate_galleries(d, n))
                ++labels[mv_label(g).tableau()];
            std::size_t fiber_total = 0;
            std::set<Gallery> seen;
            for (const auto& [t, size] : labels) {
                const auto fib = fiber(MVLabel(weight_of_shape(t.shape(), n), t), d);
                c.expect(fib.size() == size, "fiber size at " + at);
                for (const auto& g : fib)
                    c.expect(seen.insert(g).second, "fibers overlap at " + at);
                fiber_total += fib.size();
            }
            c.expect(static_cast<long>(fiber_total) == expected, "fibers cover Gamma(d) at " + at);

            std::map<DominantWeight, std::size_t> component_mult;
            for (const auto& comp : components_of_shape(d, n)) {
                std::set<Gallery> image;
                for (const auto& v : comp.vertices())
                    image.insert(mv_label(v).tableau());
                c.expect(image.size() == comp.size(), "injective on a component at " + at);
                const Gallery& top = comp.vertices()[comp.sources().at(0)];
                ++component_mult[DominantWeight::from_weight(weight(top))];
            }
            c.expect(component_mult == image_weights(d, n), "component multiplicities at " + at);
        }
    }
}

void appendix_run(Checker& c)
{
    auto check_pair = [&](const Gallery& gamma, const Gallery& delta) {
        const std::string at = "gamma=" + format_gallery(gamma) + " delta=" + format_gallery(delta) +
                               " n=" + std::to_string(gamma.rank());
        c.expect(appendix_disjointness(gamma, delta).disjoint, "disjointness at " + at);
        c.expect(stabilizer_condition(gamma, delta).holds, "stabilizer at " + at);
    };
    for (int n : {2, 3, 4}) {
        std::vector<Gallery> small;
        for (const auto& d : oracle::shapes_up_to(2 * (n - 1), n))
            if (d.size() <= 2)
                for (const auto& g : enumerate_galleries(d, n))
                    small.push_back(g);
        for (const auto& gamma : small)
            for (const auto& delta : small)
                check_pair(gamma, delta);
    }
    std::mt19937_64 rng(20240601);
    for (int k = 0; k < 1000; ++k) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const Gallery gamma = random_gallery(n, 3 + rng() % 6, rng);
        const Gallery delta = random_gallery(n, 3 + rng() % 6, rng);
        check_pair(gamma, delta);
    }
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Checker&)> body;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "worked examples: word and root operators", 1, worked_examples},
        {2, "dominance and weight example", 1, dominance_example},
        {3, "plactic normal form example", 1, plactic_example},
        {4, "crystal figure and word-reading isomorphism", 1, crystal_figure},
        {5, "crossing sets of 1 2 3 and empty disjointness", 1, appendix_example},
        {6, "crystal axioms, |d| <= 5, n in {2,3,4}", 60, crystal_axioms},
        {7, "rewriting oracle vs normal form, length <= 5, n in {2,3}", 120, oracle_equivalence},
        {8, "|B(lambda)| and weight multiplicities, dim <= 500", 60, dimensions},
        {9, "label map: surjective, fibers, injective on components", 120, label_map},
        {10, "appendix disjointness and stabilizer run", 60, appendix_run},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        std::string error;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(c);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < cr.limit_seconds;
        const bool ok = error.empty() && c.failures == 0 && in_time;
        failed += ok ? 0 : 1;

        std::ostringstream line;
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": " << cr.title << " ("
             << c.checks << " checks, " << seconds << " s, limit " << cr.limit_seconds << " s)";
        if (!error.empty())
            line << " exception: " << error;
        if (c.failures)
            line << " " << c.failures << " failed, first: " << c.first;
        if (!in_time)
            line << " over time limit";
        std::printf("%s\n", line.str().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

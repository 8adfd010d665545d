#include "galcryst/cli.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "galcryst/affine_roots.hpp"
#include "galcryst/crystal.hpp"
#include "galcryst/crystal_graph.hpp"
#include "galcryst/emit.hpp"
#include "galcryst/mv_map.hpp"
#include "galcryst/plactic.hpp"

namespace galcryst::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int rank = 0;
    std::string format = "text";
    std::uint64_t seed = 0;

    std::string gallery;
    std::string second;
    std::string word;
    std::string op = "f";
    int i = 1;
    int times = 1;
    int max_len = 3;
    std::string lambda;
    std::string tableau;
    std::string shape;
    std::string gamma;
    std::string delta;
    bool have_gamma = false;
    bool have_delta = false;
    int samples = 1000;
    int max_columns = 4;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    std::string list;
    for (const char* f : allowed)
        list += (list.empty() ? "" : "|") + std::string(f);
    throw UsageError("--format " + o.format + " not supported here (use " + list + ")");
}

std::string bool_text(bool b)
{
    return b ? "true" : "false";
}

std::string lambda_text(const DominantWeight& w)
{
    return format_ints(w.fundamental(), ",");
}

Shape parse_shape(const std::string& text, int rank)
{
    Shape d = parse_ints(text);
    check_shape(d, rank);
    return d;
}

DominantWeight parse_lambda(const std::string& text, int rank)
{
    return DominantWeight(rank, parse_ints(text));
}

void emit_gallery(const Options& o, std::ostream& out, const Gallery& g)
{
    require_format(o, {"text", "json"});
    if (o.format == "json")
        out << Json{{"gallery", format_gallery(g)}, {"shape", g.shape()}}.dump() << "\n";
    else
        out << format_gallery(g) << "\n";
}

void emit_optional_gallery(const Options& o, std::ostream& out, const std::optional<Gallery>& g)
{
    require_format(o, {"text", "json"});
    if (o.format == "json")
        out << Json{{"gallery", g ? Json(format_gallery(*g)) : Json(nullptr)}}.dump() << "\n";
    else
        out << (g ? format_gallery(*g) : std::string("0")) << "\n";
}

void emit_bool(const Options& o, std::ostream& out, const char* key, bool value)
{
    require_format(o, {"text", "json"});
    if (o.format == "json")
        out << Json{{key, value}}.dump() << "\n";
    else
        out << bool_text(value) << "\n";
}

void emit_graph(const Options& o, std::ostream& out, const CrystalGraph& g)
{
    require_format(o, {"text", "json", "dot"});
    if (o.format == "json")
        out << graph_to_json(g).dump() << "\n";
    else if (o.format == "dot")
        out << graph_to_dot(g);
    else
        out << graph_to_text(g);
}

Json appendix_json(const Gallery& gamma, const Gallery& delta)
{
    const auto ins = insert_full_column_word(gamma, delta);
    const auto dis = appendix_disjointness(gamma, delta);
    const auto stab = stabilizer_condition(gamma, delta);
    Json j{{"gamma", format_gallery(gamma)},
           {"delta", format_gallery(delta)},
           {"eta", format_gallery(ins.eta)},
           {"first_segment", ins.first_segment},
           {"start", ins.start.coords},
           {"inserted", crossings_to_json(ins.sets)},
           {"disjoint", dis.disjoint},
           {"stabilizer", stab.holds}};
    if (dis.root)
        j["disjoint_witness"] = Json{{"segments", {dis.segments->first, dis.segments->second}},
                                     {"a", dis.root->a}, {"b", dis.root->b}, {"m", dis.root->level}};
    if (stab.root)
        j["stabilizer_witness"] = Json{{"segment", *stab.segment},
                                       {"a", stab.root->a}, {"b", stab.root->b}, {"m", stab.root->level}};
    return j;
}

using Handler = std::function<void(const Options&, std::ostream&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Crystal operations on type A galleries", "galcryst"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--rank,-n", o.rank, "n for SL_n; the alphabet is 1..n")->required();
    app.add_option("--format", o.format, "text|json|dot|svg")
        ->check(CLI::IsMember({"text", "json", "dot", "svg"}));
    app.add_option("--seed", o.seed, "seed for randomized checks");

    std::vector<std::pair<CLI::App*, Handler>> handlers;
    auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        handlers.emplace_back(sub, std::move(h));
        return sub;
    };
    auto gallery_arg = [&](CLI::App* sub) {
        sub->add_option("gallery", o.gallery, "gallery, display order, e.g. 3|1,2|5|2")->required();
    };

    gallery_arg(add("validate", "check a gallery and print it canonically",
                    [](const Options& o, std::ostream& out) {
                        emit_gallery(o, out, parse_gallery(o.gallery, o.rank));
                    }));

    gallery_arg(add("word", "word of a gallery", [](const Options& o, std::ostream& out) {
        require_format(o, {"text", "json"});
        const Word w = word(parse_gallery(o.gallery, o.rank));
        if (o.format == "json")
            out << Json{{"word", w}}.dump() << "\n";
        else
            out << format_word(w) << "\n";
    }));

    add("from-word", "gallery of a word", [](const Options& o, std::ostream& out) {
        emit_gallery(o, out, gallery_from_word(parse_word(o.word, o.rank), o.rank));
    })->add_option("word", o.word, "letters, e.g. \"2 5 1 2 3\"")->required();

    {
        auto* sub = add("concat", "gamma2 * gamma1 (gamma1 is read first)",
                        [](const Options& o, std::ostream& out) {
                            emit_gallery(o, out,
                                         concat(parse_gallery(o.gallery, o.rank),
                                                parse_gallery(o.second, o.rank)));
                        });
        sub->add_option("gamma2", o.gallery)->required();
        sub->add_option("gamma1", o.second)->required();
    }

    gallery_arg(add("weight", "weight as canonical counts", [](const Options& o, std::ostream& out) {
        require_format(o, {"text", "json"});
        const auto w = weight(parse_gallery(o.gallery, o.rank));
        if (o.format == "json")
            out << Json{{"counts", w.counts()}}.dump() << "\n";
        else
            out << format_ints(w.counts()) << "\n";
    }));

    gallery_arg(add("dominant", "does the path stay in the dominant chamber",
                    [](const Options& o, std::ostream& out) {
                        emit_bool(o, out, "dominant", is_dominant(parse_gallery(o.gallery, o.rank)));
                    }));

    {
        auto* sub = add("signature", "i-signature in display order",
                        [](const Options& o, std::ostream& out) {
                            require_format(o, {"text", "json"});
                            const Gallery g = parse_gallery(o.gallery, o.rank);
                            const auto tags = i_signature(g, o.i);
                            std::string text;
                            for (Tag t : tags) {
                                if (!text.empty())
                                    text += ' ';
                                text += tag_symbol(t);
                            }
                            if (o.format == "json") {
                                Json arr = Json::array();
                                for (Tag t : tags)
                                    arr.push_back(std::string(1, tag_symbol(t)));
                                out << Json{{"tags", arr},
                                            {"epsilon", epsilon(g, o.i)},
                                            {"phi", phi(g, o.i)}}
                                           .dump()
                                    << "\n";
                            } else {
                                out << text << "\n";
                            }
                        });
        sub->add_option("--i", o.i, "simple root index")->required();
        gallery_arg(sub);
    }

    {
        auto* sub = add("apply", "apply a root operator", [](const Options& o, std::ostream& out) {
            const Gallery g = parse_gallery(o.gallery, o.rank);
            emit_optional_gallery(o, out,
                                  o.op == "f" ? f_power(g, o.i, o.times) : e_power(g, o.i, o.times));
        });
        sub->add_option("--op", o.op, "f or e")->required()->check(CLI::IsMember({"f", "e"}));
        sub->add_option("--i", o.i, "simple root index")->required();
        sub->add_option("--times", o.times, "number of applications")->check(CLI::NonNegativeNumber);
        gallery_arg(sub);
    }

    gallery_arg(add("normal-form", "equivalent semistandard tableau",
                    [](const Options& o, std::ostream& out) {
                        emit_gallery(o, out, normal_form(parse_gallery(o.gallery, o.rank)));
                    }));

    {
        auto* sub = add("equivalent", "plactic equivalence of two galleries",
                        [](const Options& o, std::ostream& out) {
                            emit_bool(o, out, "equivalent",
                                      equivalent(parse_gallery(o.gallery, o.rank),
                                                 parse_gallery(o.second, o.rank)));
                        });
        sub->add_option("gamma", o.gallery)->required();
        sub->add_option("delta", o.second)->required();
    }

    add("oracle-classes", "plactic classes by brute-force rewriting",
        [](const Options& o, std::ostream& out) {
            require_format(o, {"text", "json"});
            const auto classes = oracle_plactic_classes(o.max_len, o.rank);
            if (o.format == "json") {
                out << Json(classes).dump() << "\n";
                return;
            }
            for (const auto& cls : classes) {
                std::string line;
                for (const auto& w : cls)
                    line += (line.empty() ? "[" : " [") + format_word(w) + "]";
                out << line << "\n";
            }
        })
        ->add_option("--max-len", o.max_len, "longest word listed")
        ->required()
        ->check(CLI::Range(0, 12));

    gallery_arg(add("component", "connected component of a gallery",
                    [](const Options& o, std::ostream& out) {
                        emit_graph(o, out, connected_component(parse_gallery(o.gallery, o.rank)));
                    }));

    add("blambda", "the crystal B(lambda)", [](const Options& o, std::ostream& out) {
        emit_graph(o, out, generate_b_lambda(parse_lambda(o.lambda, o.rank)));
    })->add_option("--lambda", o.lambda, "fundamental coordinates m1,...,m_{n-1}")->required();

    add("decompose", "components of Gamma(d) by highest weight",
        [](const Options& o, std::ostream& out) {
            require_format(o, {"text", "json"});
            const auto d = decompose(parse_shape(o.shape, o.rank), o.rank);
            if (o.format == "json") {
                out << decomposition_to_json(d).dump() << "\n";
                return;
            }
            for (const auto& e : d.entries)
                out << "lambda=" << lambda_text(e.lambda) << " multiplicity=" << e.multiplicity
                    << " dimension=" << weyl_dimension(e.lambda) << "\n";
            out << "galleries=" << d.total_vertices << " components=" << d.component_count << "\n";
        })
        ->add_option("--shape", o.shape, "d1,d2,... in reading order")
        ->required();

    gallery_arg(add("phi", "MV cycle label of a gallery", [](const Options& o, std::ostream& out) {
        require_format(o, {"text", "json"});
        const auto z = mv_label(parse_gallery(o.gallery, o.rank));
        if (o.format == "json")
            out << label_to_json(z).dump() << "\n";
        else
            out << "lambda=" << lambda_text(z.lambda()) << " tableau=" << format_gallery(z.tableau())
                << " mu=" << format_ints(z.mu().counts(), ",") << "\n";
    }));

    {
        auto* sub = add("fiber", "galleries of a shape with a given label",
                        [](const Options& o, std::ostream& out) {
                            require_format(o, {"text", "json"});
                            const MVLabel z(parse_lambda(o.lambda, o.rank),
                                            parse_gallery(o.tableau, o.rank));
                            const auto gs = fiber(z, parse_shape(o.shape, o.rank));
                            if (o.format == "json") {
                                Json arr = Json::array();
                                for (const auto& g : gs)
                                    arr.push_back(format_gallery(g));
                                out << Json{{"label", label_to_json(z)}, {"fiber", arr}}.dump() << "\n";
                                return;
                            }
                            for (const auto& g : gs)
                                out << format_gallery(g) << "\n";
                        });
        sub->add_option("--lambda", o.lambda)->required();
        sub->add_option("--tableau", o.tableau)->required();
        sub->add_option("--shape", o.shape)->required();
    }

    add("image-weights", "lambda with multiplicities n^lambda_d",
        [](const Options& o, std::ostream& out) {
            require_format(o, {"text", "json"});
            const auto w = image_weights(parse_shape(o.shape, o.rank), o.rank);
            if (o.format == "json") {
                Json arr = Json::array();
                for (const auto& [lambda, mult] : w)
                    arr.push_back(Json{{"lambda", lambda.fundamental()}, {"multiplicity", mult}});
                out << arr.dump() << "\n";
                return;
            }
            for (const auto& [lambda, mult] : w)
                out << "lambda=" << lambda_text(lambda) << " multiplicity=" << mult << "\n";
        })
        ->add_option("--shape", o.shape)
        ->required();

    gallery_arg(add("crossings", "affine roots crossed along the path",
                    [](const Options& o, std::ostream& out) {
                        require_format(o, {"text", "json"});
                        const auto sets = crossing_sets(parse_gallery(o.gallery, o.rank));
                        if (o.format == "json") {
                            out << crossings_to_json(sets).dump() << "\n";
                            return;
                        }
                        for (std::size_t j = 0; j < sets.size(); ++j) {
                            out << j << ":";
                            for (const auto& r : sets[j])
                                out << " (" << r.a << "," << r.b << "," << r.level << ")";
                            out << "\n";
                        }
                    }));

    {
        auto* sub = add("appendix-check", "insert 1..n between delta and gamma and check crossings",
                        [](const Options& o, std::ostream& out) {
                            require_format(o, {"text", "json"});
                            std::vector<Json> reports;
                            if (o.have_gamma || o.have_delta) {
                                reports.push_back(appendix_json(parse_gallery(o.gamma, o.rank),
                                                                parse_gallery(o.delta, o.rank)));
                            } else {
                                std::mt19937_64 rng(o.seed);
                                for (int k = 0; k < o.samples; ++k) {
                                    const auto cg = static_cast<std::size_t>(
                                        rng() % static_cast<std::uint64_t>(o.max_columns + 1));
                                    const auto cd = static_cast<std::size_t>(
                                        rng() % static_cast<std::uint64_t>(o.max_columns + 1));
                                    const Gallery gamma = random_gallery(o.rank, cg, rng);
                                    const Gallery delta = random_gallery(o.rank, cd, rng);
                                    reports.push_back(appendix_json(gamma, delta));
                                }
                            }
                            std::size_t failures = 0;
                            for (const auto& r : reports)
                                if (!r["disjoint"].get<bool>() || !r["stabilizer"].get<bool>())
                                    ++failures;
                            if (o.format == "json") {
                                out << Json{{"checked", reports.size()},
                                            {"failures", failures},
                                            {"cases", reports}}
                                           .dump()
                                    << "\n";
                                return;
                            }
                            for (const auto& r : reports)
                                out << "gamma=" << r["gamma"].get<std::string>()
                                    << " delta=" << r["delta"].get<std::string>()
                                    << " disjoint=" << bool_text(r["disjoint"].get<bool>())
                                    << " stabilizer=" << bool_text(r["stabilizer"].get<bool>()) << "\n";
                            out << "checked=" << reports.size() << " failures=" << failures << "\n";
                        });
        sub->add_option("--gamma", o.gamma, "left factor gamma")
            ->each([&o](const std::string&) { o.have_gamma = true; });
        sub->add_option("--delta", o.delta, "right factor delta")
            ->each([&o](const std::string&) { o.have_delta = true; });
        sub->add_option("--samples", o.samples, "random pairs when no gallery is given")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--max-columns", o.max_columns, "columns per random factor")
            ->check(CLI::Range(0, 64));
    }

    gallery_arg(add("path", "lattice path of a gallery", [](const Options& o, std::ostream& out) {
        require_format(o, {"text", "json", "svg"});
        const Gallery g = parse_gallery(o.gallery, o.rank);
        if (o.format == "svg") {
            out << path_to_svg(g);
            return;
        }
        if (o.format == "json") {
            out << path_to_json(g).dump() << "\n";
            return;
        }
        for (const auto& p : path_vertices(g))
            out << format_ints(p.coords) << "\n";
    }));

    std::vector<std::string> argv_store{"galcryst"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        check_rank(o.rank);
        for (auto& [sub, handler] : handlers) {
            if (sub->parsed()) {
                handler(o, out);
                return 0;
            }
        }
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        err << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        err << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump()
            << "\n";
        return 1;
    }
}

}  // namespace galcryst::cli

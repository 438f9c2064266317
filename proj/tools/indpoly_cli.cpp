#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indpoly/enumerate.hpp"

using namespace indpoly;
using nlohmann::json;

namespace {

// Decimal rendering of a rational, truncated toward zero.
std::string rat_to_decimal(Rat r, int digits) {
    bool neg = r < 0;
    if (neg) r = -r;
    Int ip(r.get_num() / r.get_den());
    Rat frac = r - Rat(ip);
    std::string s = neg ? "-" : "";
    s += ip.get_str();
    s += '.';
    for (int i = 0; i < digits; ++i) {
        frac *= 10;
        Int d(frac.get_num() / frac.get_den());
        s += d.get_str();
        frac -= Rat(d);
    }
    return s;
}

bool looks_like_family(const std::string& text) {
    if (text.find(':') != std::string::npos) return true;
    return text == "t1" || text == "t2";
}

struct Input {
    std::string label;
    Graph graph;
};

void resolve_one(const std::string& text, std::vector<Input>& out) {
    if (text.size() > 1 && text[0] == '@') {  // bare "@" is K_1 in graph6
        std::ifstream in(text.substr(1));
        if (!in) throw ParseError("cannot open " + text.substr(1), 0);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) resolve_one(line, out);
        }
        return;
    }
    if (looks_like_family(text))
        out.push_back({text, make(parse_family_spec(text))});
    else
        out.push_back({text, parse_graph6(text)});
}

std::vector<Input> resolve_inputs(const std::vector<std::string>& positional,
                                  const std::vector<std::string>& families) {
    std::vector<Input> out;
    for (const auto& t : positional) resolve_one(t, out);
    for (const auto& t : families) out.push_back({t, make(parse_family_spec(t))});
    return out;
}

std::vector<Input> resolve_exactly(const std::vector<std::string>& positional,
                                   const std::vector<std::string>& families, std::size_t count) {
    auto inputs = resolve_inputs(positional, families);
    if (inputs.size() != count)
        throw ParseError("expected " + std::to_string(count) + " graphs, got " +
                             std::to_string(inputs.size()),
                         0);
    return inputs;
}

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Equivalent: return "equivalent";
        case Relation::FirstStrictlyLess: return "left-strictly-less";
        case Relation::SecondStrictlyLess: return "right-strictly-less";
        case Relation::Incomparable: return "incomparable";
    }
    return "?";
}

json interval_json(const IsolatingInterval& iv, int digits) {
    return json{{"lo", rat_to_string(iv.lo)},
                {"hi", rat_to_string(iv.hi)},
                {"decimal", rat_to_decimal(iv.lo, digits) + ".." + rat_to_decimal(iv.hi, digits)}};
}

json survey_json(const SurveyReport& r) {
    json j{{"class", r.family},        {"order", r.order},
           {"count", r.count},         {"asserted", r.asserted},
           {"lower", r.lower_graph6},  {"upper", r.upper_graph6},
           {"lower_equal", r.lower_equal}, {"upper_equal", r.upper_equal},
           {"violations", r.violations},
           {"equivalence_class_sizes", r.equivalence_class_sizes}};
    json anti = json::array();
    for (const auto& set : r.antichain_examples) anti.push_back(set);
    j["antichains"] = anti;
    return j;
}

const std::map<std::string, SurveyClass> kSurveyClasses{
    {"trees", SurveyClass::Trees},
    {"unicyclic", SurveyClass::Unicyclic},
    {"wc_trees", SurveyClass::WcTrees},
    {"wc_unicyclic_even", SurveyClass::WcUnicyclicEven},
    {"wc_unicyclic_odd", SurveyClass::WcUnicyclicOdd},
    {"bipartite", SurveyClass::Bipartite},
    {"triangle_free", SurveyClass::TriangleFree},
};

struct VerifyCheck {
    std::string name;
    bool (*run)(PolyCache&, int);
};

bool verify_counterexample(PolyCache& cache, int) {
    if (poly_to_string(independence_poly(make_g2n(5), cache)) !=
        "1 + 10x + 36x^2 + 59x^3 + 45x^4 + 13x^5")
        return false;
    for (int n = 5; n <= 10; ++n) {
        Graph g = make_g2n(n);
        if (!is_equivalent(corona(make_path(n)), g, cache)) return false;
        if (pendant_edges_perfect_matching(g)) return false;
    }
    return true;
}

bool verify_incomparable_pair(PolyCache& cache, int) {
    auto res = compare(make_t1(), make_t2(), cache);
    if (res.relation != Relation::Incomparable) return false;
    Poly d = independence_poly(make_t1(), cache) - independence_poly(make_t2(), cache);
    return d.sign_at(make_rat(-1, 10)) * d.sign_at(make_rat(-1, 5)) == -1;
}

bool verify_unicyclic_extremes(PolyCache& cache, int workers) {
    for (int n = 5; n <= 7; ++n) {
        auto r = survey_extremal(SurveyClass::Unicyclic, n, cache, workers);
        if (!r.violations.empty()) return false;
        std::set<std::string> low(r.lower_equal.begin(), r.lower_equal.end());
        if (low != std::set<std::string>{canonical_key(make_cycle(n)), canonical_key(make_d(n))})
            return false;
        if (r.upper_equal != std::vector<std::string>{canonical_key(make_u(n))}) return false;
    }
    return true;
}

bool verify_tree_extremes(PolyCache& cache, int workers) {
    for (int n = 2; n <= 8; ++n)
        if (!survey_extremal(SurveyClass::Trees, n, cache, workers).violations.empty())
            return false;
    if (!antichains(trees(7), 2, cache).empty()) return false;
    return !antichains(trees(8), 2, cache).empty();
}

bool verify_equivalence_classes(PolyCache& cache, int) {
    for (int n = 5; n <= 7; ++n) {
        std::string cn = canonical_key(make_cycle(n)), dn = canonical_key(make_d(n));
        std::string un = canonical_key(make_u(n));
        for (const auto& cls : equivalence_classes(connected_unicyclic(n), cache)) {
            std::set<std::string> keys;
            for (const Graph& g : cls) keys.insert(canonical_key(g));
            if (keys.count(cn) && keys != std::set<std::string>{cn, dn}) return false;
            if (keys.count(un) && keys.size() != 1) return false;
        }
    }
    return true;
}

bool verify_corona_identities(PolyCache& cache, int) {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& t : trees(n))
            if (independence_poly(corona(t), cache) !=
                corona_transform(independence_poly(t, cache), t.order()))
                return false;
    auto ts = trees(5);
    for (const Graph& a : ts)
        for (const Graph& b : ts)
            if (is_preceq(a, b, cache) != is_preceq(corona(a), corona(b), cache)) return false;
    return true;
}

bool verify_wellcovered_criteria(PolyCache& cache, int) {
    (void)cache;
    std::string c7 = canonical_key(make_cycle(7));
    for (int n = 2; n <= 9; ++n)
        for (const Graph& g : connected_girth_at_least_6(n)) {
            if (canonical_key(g) == c7) continue;
            if (is_well_covered(g) != pendant_edges_perfect_matching(g)) return false;
        }
    for (int n = 2; n <= 10; ++n) {
        std::set<std::string> coronas;
        if (n % 2 == 0)
            for (const Graph& t : trees(n / 2)) coronas.insert(canonical_key(corona(t)));
        for (const Graph& t : trees(n))
            if (is_well_covered(t) != (coronas.count(canonical_key(t)) > 0)) return false;
    }
    for (int n = 3; n <= 9; ++n) {
        std::set<std::string> catalogue;
        for (const Graph& g : well_covered_unicyclic_members(n))
            catalogue.insert(canonical_key(g));
        for (const Graph& g : connected_unicyclic(n))
            if (is_well_covered(g) != (catalogue.count(canonical_key(g)) > 0)) return false;
    }
    return true;
}

bool verify_sp_equivalence(PolyCache& cache, int workers) {
    for (int order = 5; order <= 13; order += 2) {
        std::set<std::string> polys;
        for (int g : {3, 5})
            for (int k = 0; (order - g) / 2 - k >= 0; ++k) {
                int l = (order - g) / 2 - k;
                if (k + l == 0 || g + 2 * (k + l) != order) continue;
                polys.insert(poly_to_string(independence_poly(make_g_gkl(g, k, l), cache)));
            }
        if (polys.size() != 1) return false;
    }
    auto r = survey_extremal(SurveyClass::WcUnicyclicOdd, 9, cache, workers);
    return r.violations.empty() && !r.lower_equal.empty() && !r.upper_equal.empty();
}

bool verify_swap_monotonicity(PolyCache& cache, int) {
    // spider with legs (2,1,1): star swap moving a short leg onto the long one
    Graph spider = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
    if (!is_preceq(star_swap(spider, 3, 0, 1), spider, cache)) return false;
    // triangle with two pendant K_2 legs: dagger result precedes the original
    GraphBuilder b(7);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(0, 2);
    b.add_edge(0, 3);
    b.add_edge(3, 4);
    b.add_edge(0, 5);
    b.add_edge(5, 6);
    Graph g = b.take();
    Graph dg = dagger_swap(g, 5, 0, 3);
    return is_preceq(dg, g, cache);
}

bool verify_bipartite_bounds(PolyCache& cache, int workers) {
    for (int n = 2; n <= 7; ++n)
        if (!survey_extremal(SurveyClass::Bipartite, n, cache, workers).violations.empty())
            return false;
    return survey_extremal(SurveyClass::TriangleFree, 7, cache, workers).violations.empty();
}

bool verify_engine_oracles(PolyCache& cache, int) {
    for (int n = 3; n <= 8; ++n)
        for (const Graph& g : connected_unicyclic(n)) {
            if (independence_poly(g, cache) != independence_poly_bruteforce(g)) return false;
            if (auto gi = girth(g); gi && *gi == 3) {
                for (auto [u, v] : g.edges())
                    if (std::uint64_t w = g.neighbors_mask(u) & g.neighbors_mask(v)) {
                        std::vector<int> clique{u, v, std::countr_zero(w)};
                        if (independence_poly_clique(g, clique, cache) !=
                            independence_poly(g, cache))
                            return false;
                        break;
                    }
            }
        }
    return true;
}

const std::vector<VerifyCheck> kVerifyChecks{
    {"counterexample-family", verify_counterexample},
    {"incomparable-pair", verify_incomparable_pair},
    {"unicyclic-extremes", verify_unicyclic_extremes},
    {"tree-extremes", verify_tree_extremes},
    {"equivalence-classes", verify_equivalence_classes},
    {"corona-identities", verify_corona_identities},
    {"wellcovered-criteria", verify_wellcovered_criteria},
    {"sp-equivalence", verify_sp_equivalence},
    {"swap-monotonicity", verify_swap_monotonicity},
    {"bipartite-bounds", verify_bipartite_bounds},
    {"engine-oracles", verify_engine_oracles},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence polynomial toolkit"};
    app.require_subcommand(1);

    if (const char* path = std::getenv("INDPOLY_CACHE"); path && *path)
        global_cache().attach_file(path);

    std::vector<std::string> graphs, families;
    bool as_json = false;
    int digits = 12;
    int workers = 1;
    auto add_graph_opts = [&](CLI::App* cmd, bool json_flag = true) {
        cmd->add_option("graphs", graphs, "graph6 strings, @files, or family specs");
        cmd->add_option("--family", families, "family spec, e.g. u_n:7 or g_gkl:3,2,1")
            ->allow_extra_args(false);  // one spec per flag; keep positionals free
        if (json_flag) cmd->add_flag("--json", as_json, "emit JSON");
    };

    int exit_code = 0;

    auto* poly_cmd = app.add_subcommand("poly", "independence polynomial of each input graph");
    add_graph_opts(poly_cmd);
    poly_cmd->callback([&] {
        json out = json::array();
        for (const auto& in : resolve_inputs(graphs, families)) {
            std::string p = poly_to_string(independence_poly(in.graph, global_cache()));
            if (as_json)
                out.push_back({{"input", in.label},
                               {"graph6", render_graph6(in.graph)},
                               {"poly", p}});
            else
                std::cout << p << "\n";
        }
        if (as_json) std::cout << out.dump(2) << "\n";
    });

    auto* xi_cmd = app.add_subcommand("xi", "certified interval for the smallest-modulus real root");
    add_graph_opts(xi_cmd);
    xi_cmd->add_option("--digits", digits, "interval width 10^-digits")->check(CLI::Range(1, 60));
    xi_cmd->callback([&] {
        Rat width(1);
        for (int i = 0; i < digits; ++i) width /= 10;
        json out = json::array();
        for (const auto& in : resolve_inputs(graphs, families)) {
            IsolatingInterval iv = xi(in.graph, width, global_cache());
            bool exact = iv.poly.sign_at(iv.hi) == 0;
            std::string decimal =
                rat_to_decimal(iv.lo, digits) + ".." + rat_to_decimal(iv.hi, digits);
            if (as_json) {
                json j = interval_json(iv, digits);
                j["input"] = in.label;
                j["exact"] = exact ? json(rat_to_string(iv.hi)) : json(nullptr);
                out.push_back(j);
            } else if (exact) {
                std::cout << rat_to_string(iv.hi) << " (exact)\n";
            } else {
                std::cout << decimal << "\n";
            }
        }
        if (as_json) std::cout << out.dump(2) << "\n";
    });

    auto* compare_cmd = app.add_subcommand("compare", "decide the order relation of two graphs");
    add_graph_opts(compare_cmd);
    compare_cmd->callback([&] {
        auto in = resolve_exactly(graphs, families, 2);
        auto res = compare(in[0].graph, in[1].graph, global_cache());
        if (as_json) {
            json j{{"left", in[0].label},
                   {"right", in[1].label},
                   {"relation", relation_name(res.relation)},
                   {"xi_left", interval_json(res.xi_left, digits)},
                   {"xi_right", interval_json(res.xi_right, digits)}};
            json w = json::array();
            for (const Rat& r : res.witnesses) w.push_back(rat_to_string(r));
            j["witnesses"] = w;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << relation_name(res.relation);
            if (!res.witnesses.empty()) {
                std::cout << " (witnesses:";
                for (const Rat& r : res.witnesses) std::cout << " " << rat_to_string(r);
                std::cout << ")";
            }
            std::cout << "\n";
        }
    });

    auto* equiv_cmd = app.add_subcommand("equiv", "test whether two graphs share a polynomial");
    add_graph_opts(equiv_cmd);
    equiv_cmd->callback([&] {
        auto in = resolve_exactly(graphs, families, 2);
        bool eq = is_equivalent(in[0].graph, in[1].graph, global_cache());
        if (as_json)
            std::cout << json{{"left", in[0].label},
                              {"right", in[1].label},
                              {"equivalent", eq}}
                             .dump(2)
                      << "\n";
        else
            std::cout << (eq ? "equivalent" : "distinct") << "\n";
    });

    auto* wc_cmd = app.add_subcommand("wc", "well-coveredness report");
    add_graph_opts(wc_cmd);
    wc_cmd->callback([&] {
        json out = json::array();
        for (const auto& in : resolve_inputs(graphs, families)) {
            auto report = maximal_independent_sets(in.graph);
            bool wc = report.size_counts.size() == 1;
            bool vwc = wc && report.max_size() * 2 == in.graph.order();
            if (as_json) {
                json sizes = json::object();
                for (auto [size, count] : report.size_counts)
                    sizes[std::to_string(size)] = count;
                out.push_back({{"input", in.label},
                               {"sizes", sizes},
                               {"well_covered", wc},
                               {"very_well_covered", vwc}});
            } else {
                std::cout << in.label << ": "
                          << (wc ? (vwc ? "very well-covered" : "well-covered")
                                 : "not well-covered")
                          << " (maximal set sizes";
                for (auto [size, count] : report.size_counts)
                    std::cout << " " << size << "x" << count;
                std::cout << ")\n";
            }
        }
        if (as_json) std::cout << out.dump(2) << "\n";
    });

    std::string gen_class;
    int gen_order = 0;
    auto* gen_cmd = app.add_subcommand("gen", "emit graphs as line-delimited graph6");
    add_graph_opts(gen_cmd, false);
    gen_cmd->add_option("--class", gen_class,
                        "trees|unicyclic|connected|girth6|wc_unicyclic|s3|s4|s5|ku");
    gen_cmd->add_option("-n,--order", gen_order, "order for --class");
    gen_cmd->callback([&] {
        for (const auto& in : resolve_inputs(graphs, families))
            std::cout << render_graph6(in.graph) << "\n";
        if (gen_class.empty()) return;
        std::vector<Graph> out;
        if (gen_class == "trees") out = trees(gen_order);
        else if (gen_class == "unicyclic") out = connected_unicyclic(gen_order);
        else if (gen_class == "connected") out = connected_graphs(gen_order);
        else if (gen_class == "girth6") out = connected_girth_at_least_6(gen_order);
        else if (gen_class == "wc_unicyclic") out = well_covered_unicyclic_members(gen_order);
        else if (gen_class == "s3") out = s3_s5_members(3, gen_order);
        else if (gen_class == "s5") out = s3_s5_members(5, gen_order);
        else if (gen_class == "s4") out = s4_members(gen_order);
        else if (gen_class == "ku") out = ku_members(gen_order);
        else throw ParseError("unknown class: " + gen_class, 0);
        for (const Graph& g : out) std::cout << render_graph6(g) << "\n";
    });

    std::string survey_class;
    int survey_order = 0;
    int antichain_size = 0;
    bool survey_equiv = false;
    auto* survey_cmd = app.add_subcommand("survey", "extremal/equivalence/antichain surveys");
    survey_cmd->add_option("--class", survey_class, "survey class")
        ->required()
        ->check(CLI::IsMember([&] {
            std::vector<std::string> names;
            for (const auto& [name, cls] : kSurveyClasses) names.push_back(name);
            return names;
        }()));
    survey_cmd->add_option("-n,--order", survey_order, "graph order")->required();
    survey_cmd->add_flag("--json", as_json, "emit JSON");
    survey_cmd->add_flag("--equiv", survey_equiv, "list equivalence class sizes only");
    survey_cmd->add_option("--antichains", antichain_size, "search antichains up to this size");
    survey_cmd->add_option("--workers", workers, "worker threads (default 1)")
        ->check(CLI::Range(1, 64));
    survey_cmd->callback([&] {
        SurveyClass cls = kSurveyClasses.at(survey_class);
        SurveyReport report = survey_extremal(cls, survey_order, global_cache(), workers);
        if (antichain_size >= 2) {
            auto plan = survey_plan(cls, survey_order);
            for (const auto& set : antichains(plan.corpus, antichain_size, global_cache())) {
                std::vector<std::string> keys;
                for (const Graph& g : set) keys.push_back(render_graph6(g));
                report.antichain_examples.push_back(std::move(keys));
            }
        }
        if (as_json) {
            std::cout << survey_json(report).dump(2) << "\n";
            return;
        }
        std::cout << "class " << report.family << " order " << report.order << ": "
                  << report.count << " graphs\n";
        std::cout << "lower bound " << report.lower_graph6 << ", attained by "
                  << report.lower_equal.size() << "\n";
        if (!report.upper_graph6.empty())
            std::cout << "upper bound " << report.upper_graph6 << ", attained by "
                      << report.upper_equal.size() << "\n";
        std::cout << "violations: " << report.violations.size()
                  << (report.asserted ? "" : " (bounds conjectured, not asserted)") << "\n";
        for (const auto& v : report.violations) std::cout << "  " << v << "\n";
        if (survey_equiv) {
            std::cout << "equivalence class sizes:";
            for (auto s : report.equivalence_class_sizes) std::cout << " " << s;
            std::cout << "\n";
        }
        for (const auto& set : report.antichain_examples) {
            std::cout << "antichain:";
            for (const auto& k : set) std::cout << " " << k;
            std::cout << "\n";
        }
    });

    auto* verify_cmd = app.add_subcommand("verify", "run the full regression battery");
    verify_cmd->add_option("--workers", workers, "worker threads (default 1)")
        ->check(CLI::Range(1, 64));
    verify_cmd->callback([&] {
        bool all = true;
        for (const auto& check : kVerifyChecks) {
            bool ok = check.run(global_cache(), workers);
            all = all && ok;
            std::cout << (ok ? "PASS" : "FAIL") << " " << check.name << "\n";
        }
        if (!all) exit_code = 4;
    });

    std::string cache_action, cache_file;
    auto* cache_cmd = app.add_subcommand("cache", "inspect or compact the polynomial cache");
    cache_cmd->add_option("action", cache_action, "stats|compact")
        ->required()
        ->check(CLI::IsMember({"stats", "compact"}));
    cache_cmd->add_option("--file", cache_file, "cache path (default $INDPOLY_CACHE)");
    cache_cmd->callback([&] {
        if (cache_file.empty())
            if (const char* p = std::getenv("INDPOLY_CACHE"); p && *p) cache_file = p;
        if (cache_file.empty()) throw ParseError("no cache file given", 0);
        std::ifstream in(cache_file);
        if (!in) throw ParseError("cannot open " + cache_file, 0);
        std::map<std::string, std::string> entries;
        std::size_t lines = 0;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            ++lines;
            auto tab = line.find('\t');
            if (tab == std::string::npos) throw ParseError("malformed cache line", lines);
            poly_from_string(line.substr(tab + 1));  // validate
            entries.emplace(line.substr(0, tab), line.substr(tab + 1));
        }
        if (cache_action == "stats") {
            std::cout << "entries " << entries.size() << ", lines " << lines << "\n";
            return;
        }
        std::ofstream out(cache_file, std::ios::trunc);
        for (const auto& [key, poly] : entries) out << key << "\t" << poly << "\n";
        std::cout << "kept " << entries.size() << " of " << lines << " lines\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return exit_code;
}

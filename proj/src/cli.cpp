#include <iap/cli.hpp>
#include <iap/extremal.hpp>
#include <iap/finder.hpp>
#include <iap/io.hpp>
#include <iap/report.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

namespace iap {

namespace
{
    constexpr int exit_found = 0;
    constexpr int exit_none = 1;
    constexpr int exit_error = 2;

    struct Options
    {
        std::string file;
        std::optional<Int> n;
        Int k = 0;
        Int m = 0;
        Int t = 0;
        std::optional<Int> e;
        Int n_max = 0;
        Int m_max = 0;
        Int k_min = 0;
        Int k_max = 0;
        std::string mode = "strict";
        std::string family = "auto";
        std::uint64_t seed = 1;
        Int trials = 100;
        Int budget_nodes = SearchBudget{}.node_limit;
        double budget_secs = SearchBudget{}.time_limit;
        std::string format = "json";
        double eta = FinderConfig{}.eta;
        double epsilon = FinderConfig{}.epsilon;
        std::string graph_file, coloring_file, permutation_file, witness_file;
    };

    FinderConfig finder_config(const Options & o)
    {
        FinderConfig cfg;
        cfg.eta = o.eta;
        cfg.epsilon = o.epsilon;
        cfg.family = parse_family_choice(o.family);
        cfg.validate();
        return cfg;
    }

    SearchBudget search_budget(const Options & o)
    {
        if (o.budget_nodes < 1 || ! (o.budget_secs > 0))
            throw std::invalid_argument("search budgets must be positive");
        return SearchBudget{o.budget_nodes, o.budget_secs};
    }

    void add_finder_options(CLI::App * cmd, Options & o)
    {
        cmd->add_option("--family", o.family, "first family scanned: auto|coprime|prime|all")->capture_default_str();
        cmd->add_option("--eta", o.eta, "sieve density constant")->capture_default_str();
        cmd->add_option("--epsilon", o.epsilon, "edge-budget constant")->capture_default_str();
    }

    void add_budget_options(CLI::App * cmd, Options & o)
    {
        cmd->add_option("--budget-nodes", o.budget_nodes, "node limit per search")->capture_default_str();
        cmd->add_option("--budget-secs", o.budget_secs, "time limit per search")->capture_default_str();
    }

    void add_format_option(CLI::App * cmd, Options & o)
    {
        cmd->add_option("--format", o.format, "json|text")
            ->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    }

    void print_text(std::ostream & out, const Json & j, const std::string & prefix)
    {
        if (j.is_object()) {
            for (auto it = j.begin() ; it != j.end() ; ++it) {
                std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
                if (it.value().is_object())
                    print_text(out, it.value(), key);
                else
                    out << key << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                        << '\n';
            }
        }
        else
            out << prefix << ": " << j.dump() << '\n';
    }

    void emit(std::ostream & out, const Options & o, const Json & j)
    {
        if (o.format == "text")
            print_text(out, j, "");
        else
            out << j.dump(2) << '\n';
    }

    Json base_config(const Options & o, const FinderConfig & cfg)
    {
        Json c;
        c["k"] = o.k;
        c.update(to_json(cfg));
        return c;
    }

    SieveTable table_for(Int n)
    {
        return build_sieve(std::max<Int>(n, 2));
    }

    Json witness_or_null(const std::optional<Witness> & w)
    {
        return w ? to_json(*w) : Json(nullptr);
    }

    int cmd_find(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        auto input = read_edge_list_file(o.file, o.n);
        const auto & g = input.graph;
        auto table = table_for(g.n());
        auto w = find_independent_ap(g, o.k, cfg, table);
        if (w && ! is_independent(g, w->progression))
            throw std::logic_error("finder returned a dependent progression");

        Json config = base_config(o, cfg);
        config["n"] = g.n();
        config["forbidden"] = g.forbidden_vertices();
        Json j;
        j["command"] = "find";
        j["config"] = std::move(config);
        j["input"] = Json{{"file", o.file}, {"n", g.n()}, {"edges", g.edge_count()}, {"loops", input.loops}};
        j["found"] = w.has_value();
        j["witness"] = witness_or_null(w);
        emit(out, o, j);
        return w ? exit_found : exit_none;
    }

    int cmd_rainbow(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        auto c = read_coloring_file(o.file, o.n);
        auto table = table_for(c.n());
        auto w = find_rainbow_ap(c, o.k, cfg, table);

        Json j;
        j["command"] = "rainbow";
        Json config = base_config(o, cfg);
        config["n"] = c.n();
        j["config"] = std::move(config);
        j["input"] = Json{{"file", o.file}, {"n", c.n()}, {"colors", c.color_count()},
            {"max_multiplicity", c.max_multiplicity()}};
        j["found"] = w.has_value();
        j["witness"] = witness_or_null(w);
        if (w) {
            Json labels = Json::array();
            for (Int x : elements(w->progression))
                labels.push_back(c.label_of(x));
            j["witness"]["colors"] = std::move(labels);
        }
        emit(out, o, j);
        return w ? exit_found : exit_none;
    }

    int cmd_permute(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        auto mode = parse_mode(o.mode);
        auto p = read_permutation_file(o.file);
        auto table = table_for(p.n());
        auto w = find_unmapped_ap(p, o.k, mode, cfg, table);

        Int fixed = 0;
        for (Int i = 1 ; i <= p.n() ; ++i)
            fixed += p.image(i) == i;

        Json j;
        j["command"] = "permute";
        Json config = base_config(o, cfg);
        config["n"] = p.n();
        config["mode"] = to_string(mode);
        j["config"] = std::move(config);
        j["input"] = Json{{"file", o.file}, {"n", p.n()}, {"fixed_points", fixed},
            {"edges", from_permutation(p, mode).edge_count()}};
        j["found"] = w.has_value();
        j["witness"] = witness_or_null(w);
        if (w) {
            Json images = Json::array();
            for (Int x : elements(w->progression))
                images.push_back(p.image(x));
            j["witness"]["images"] = std::move(images);
        }
        else if (mode == FixedPointMode::strict && fixed > 0)
            j["reason"] = "strict mode forbids the " + std::to_string(fixed)
                + " fixed point(s); no progression avoiding them and their images is independent";
        emit(out, o, j);
        return w ? exit_found : exit_none;
    }

    int cmd_verify(const Options & o, std::ostream & out)
    {
        int sources = ! o.graph_file.empty() + ! o.coloring_file.empty() + ! o.permutation_file.empty();
        if (sources != 1)
            throw std::invalid_argument("verify needs exactly one of --graph, --coloring, --permutation");

        std::ifstream in(o.witness_file);
        if (! in)
            throw ParseError("cannot open '" + o.witness_file + "'", 0);
        Json doc = Json::parse(in);
        auto p = progression_from_json(doc);

        std::optional<IntGraph> g;
        std::string kind;
        if (! o.graph_file.empty()) {
            g = read_edge_list_file(o.graph_file, o.n).graph;
            kind = "independent";
        }
        else if (! o.coloring_file.empty()) {
            g = from_coloring(read_coloring_file(o.coloring_file, o.n));
            kind = "rainbow";
        }
        else {
            g = from_permutation(read_permutation_file(o.permutation_file), parse_mode(o.mode));
            kind = "unmapped (" + o.mode + ")";
        }

        std::string reason;
        if (o.k > 0 && p.length != o.k)
            reason = "length " + std::to_string(p.length) + " differs from k = " + std::to_string(o.k);
        else if (p.last() > g->n())
            reason = "progression leaves [1, " + std::to_string(g->n()) + "]";
        else if (! is_independent(*g, p))
            reason = "progression is not " + kind;

        Json j;
        j["command"] = "verify";
        j["progression"] = to_json(p);
        j["valid"] = reason.empty();
        if (! reason.empty())
            j["reason"] = reason;
        emit(out, o, j);
        return reason.empty() ? exit_found : exit_none;
    }

    int cmd_bounds(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        Json j;
        j["command"] = "bounds";
        Json config = base_config(o, cfg);
        config["m"] = o.m;
        j["config"] = std::move(config);
        j["sr_upper_bound"] = sr_upper_bound(o.m, o.k, cfg);
        j["tk_upper_bound"] = tk_upper_bound(o.k, cfg);
        auto table = table_for(cfg.n0_horizon);
        try {
            j["n0_upper_bound"] = n0_upper_bound(o.k, cfg, table);
        }
        catch (const HorizonError & e) {
            j["n0_upper_bound"] = nullptr;
            j["n0_note"] = e.what();
        }
        emit(out, o, j);
        return exit_found;
    }

    int cmd_budget(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        Int n = o.n.value_or(0);
        if (n < o.k || o.k < 2)
            throw std::invalid_argument("budget needs n >= k >= 2");
        auto table = table_for(n);
        Json families = Json::array();
        for (const auto & family : {DifferenceFamily::coprime_to(o.k), DifferenceFamily::prime(), DifferenceFamily::all()}) {
            families.push_back(Json{
                    {"family", family.name()},
                    {"aps", count_aps(n, o.k, family, table)},
                    {"max_pair_hits", max_pair_hits(n, o.k, family, table)},
                    {"budget", certified_edge_budget(n, o.k, family, table)}});
        }
        Json j;
        j["command"] = "budget";
        Json config = base_config(o, cfg);
        config["n"] = n;
        j["config"] = std::move(config);
        j["regime"] = large_regime(n, o.k, cfg) ? "large" : "small";
        j["first_family"] = scan_order(n, o.k, cfg).front().name();
        j["families"] = std::move(families);
        if (n >= 2 * o.k)
            j["restricted_family_size"] = restricted_family_size(n, o.k, table);
        emit(out, o, j);
        return exit_found;
    }

    int cmd_exact_sr(const Options & o, std::ostream & out)
    {
        auto budget = search_budget(o);
        auto r = sr_exact(o.m, o.k, o.n_max, budget);
        Json j;
        j["command"] = "exact sr";
        j["config"] = Json{{"m", o.m}, {"k", o.k}, {"n_max", o.n_max}, {"budget", to_json(budget)}};
        j.update(to_json(r));
        if (r.value && o.k >= 3) {
            FinderConfig cfg;
            cfg.epsilon = o.epsilon;
            j["sr_upper_bound"] = sr_upper_bound(o.m, o.k, cfg);
        }
        emit(out, o, j);
        return r.value ? exit_found : exit_none;
    }

    int cmd_exact_coloring(const Options & o, std::ostream & out)
    {
        auto budget = search_budget(o);
        auto r = exists_coloring_without_rainbow(o.n.value_or(0), o.m, o.k, budget);
        Json j;
        j["command"] = "exact coloring";
        j["config"] = Json{{"n", o.n.value_or(0)}, {"m", o.m}, {"k", o.k}, {"budget", to_json(budget)}};
        j["bad_exists"] = r.witness ? Json(true) : r.outcome == Outcome::complete ? Json(false) : Json(nullptr);
        j["outcome"] = to_string(r.outcome);
        j["nodes"] = r.nodes;
        j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
        emit(out, o, j);
        return r.outcome == Outcome::complete ? exit_found : exit_none;
    }

    int cmd_exact_permutation(const Options & o, std::ostream & out)
    {
        auto budget = search_budget(o);
        auto mode = parse_mode(o.mode);
        auto r = exists_permutation_without_free_ap(o.n.value_or(0), o.k, mode, budget);
        Json j;
        j["command"] = "exact permutation";
        j["config"] = Json{{"n", o.n.value_or(0)}, {"k", o.k}, {"mode", to_string(mode)}, {"budget", to_json(budget)}};
        j["bad_exists"] = r.witness ? Json(true) : r.outcome == Outcome::complete ? Json(false) : Json(nullptr);
        j["outcome"] = to_string(r.outcome);
        j["nodes"] = r.nodes;
        j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
        emit(out, o, j);
        return r.outcome == Outcome::complete ? exit_found : exit_none;
    }

    int cmd_probe_tightness(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        Int n = o.n.value_or(0);
        if (n < o.k || o.k < 2)
            throw std::invalid_argument("tightness probe needs n >= k >= 2");
        auto table = table_for(n);
        auto family = scan_order(n, o.k, cfg).front();
        Int budget = certified_edge_budget(n, o.k, family, table);
        Int edges = o.e.value_or(budget);
        if (edges < 0 || edges > n * (n - 1) / 2)
            throw std::invalid_argument("edge count outside [0, n(n-1)/2]");
        double fraction = empirical_probe(n, o.k, edges, o.trials, o.seed);

        Json j;
        j["command"] = "probe tightness";
        Json config = base_config(o, cfg);
        config["n"] = n;
        config["e"] = edges;
        config["trials"] = o.trials;
        config["seed"] = o.seed;
        j["config"] = std::move(config);
        j["certified_family"] = family.name();
        j["certified_budget"] = budget;
        j["within_budget"] = edges <= budget;
        j["fraction"] = fraction;
        emit(out, o, j);
        return exit_found;
    }

    int cmd_probe_n0(const Options & o, std::ostream & out)
    {
        auto cfg = finder_config(o);
        auto budget = search_budget(o);
        auto mode = parse_mode(o.mode);
        auto table = table_for(cfg.n0_horizon);
        auto r = n0_probe(o.k, mode, o.n_max, budget, cfg, table);
        Json j;
        j["command"] = "probe n0";
        Json config = base_config(o, cfg);
        config["mode"] = to_string(mode);
        config["n_max"] = o.n_max;
        config["budget"] = to_json(budget);
        j["config"] = std::move(config);
        j.update(to_json(r));
        emit(out, o, j);
        return exit_found;
    }

    int cmd_probe_tk(const Options & o, std::ostream & out)
    {
        auto budget = search_budget(o);
        auto r = tk_probe(o.t, o.k, o.m_max, budget);
        Json j;
        j["command"] = "probe tk";
        j["config"] = Json{{"t", o.t}, {"k", o.k}, {"m_max", o.m_max}, {"budget", to_json(budget)}};
        j.update(to_json(r));
        emit(out, o, j);
        return exit_found;
    }

    int cmd_probe_epsilon(const Options & o, std::ostream & out)
    {
        EpsilonGrid grid;
        auto table = table_for(grid.k_max * grid.scales.back());
        auto d = derive_epsilon(table, grid);
        Json j;
        j["command"] = "probe epsilon";
        j["grid"] = Json{{"k_min", grid.k_min}, {"k_max", grid.k_max}, {"scales", grid.scales}};
        j["raw_minimum"] = d.raw_minimum;
        j["argmin"] = Json{{"n", d.argmin_n}, {"k", d.argmin_k}};
        j["epsilon"] = d.epsilon;
        j["pinned_epsilon"] = pinned_epsilon;
        j["reproduced"] = d.epsilon == pinned_epsilon;
        emit(out, o, j);
        return d.epsilon == pinned_epsilon ? exit_found : exit_none;
    }

    int cmd_probe_lemma1(const Options & o, std::ostream & out)
    {
        if (o.k_min < 2 || o.k_max < o.k_min)
            throw std::invalid_argument("lemma1 probe needs 2 <= k-min <= k-max");
        // n = ceil(k log k) is the smallest n the density bound speaks about
        Int largest_n = static_cast<Int>(std::ceil(o.k_max * std::log(static_cast<double>(o.k_max))));
        auto table = table_for(largest_n);
        Json rows = Json::array();
        double minimum = 1e300;
        for (Int k = o.k_min ; k <= o.k_max ; ++k) {
            Int n = std::max<Int>(1, static_cast<Int>(std::ceil(k * std::log(static_cast<double>(k)))));
            auto r = lemma1_ratio(table, n, k);
            minimum = std::min(minimum, r.value());
            rows.push_back(Json{{"k", k}, {"n", n}, {"phi", r.phi}, {"ratio", r.value()}});
        }
        Json j;
        j["command"] = "probe lemma1";
        j["config"] = Json{{"k_min", o.k_min}, {"k_max", o.k_max}};
        j["min_ratio"] = minimum;
        j["rows"] = std::move(rows);
        emit(out, o, j);
        return exit_found;
    }
}

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    Options o;
    CLI::App app{"Independent and rainbow arithmetic progressions"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto * find = app.add_subcommand("find", "independent k-progression in a graph given as an edge list");
    find->add_option("graph", o.file, "edge-list file")->required();
    find->add_option("--k", o.k, "progression length")->required();
    find->add_option("--n", o.n, "number of vertices (default: largest vertex in the file)");
    add_finder_options(find, o);
    add_format_option(find, o);
    find->callback([&] { action = [&] { return cmd_find(o, out); }; });

    auto * rainbow = app.add_subcommand("rainbow", "rainbow k-progression in a colouring");
    rainbow->add_option("coloring", o.file, "colouring file")->required();
    rainbow->add_option("--k", o.k, "progression length")->required();
    rainbow->add_option("--n", o.n, "length of the coloured interval");
    add_finder_options(rainbow, o);
    add_format_option(rainbow, o);
    rainbow->callback([&] { action = [&] { return cmd_rainbow(o, out); }; });

    auto * permute = app.add_subcommand("permute", "k-progression A with pi(A) disjoint from A");
    permute->add_option("permutation", o.file, "permutation file")->required();
    permute->add_option("--k", o.k, "progression length")->required();
    permute->add_option("--mode", o.mode, "fixed points: strict|weak")->capture_default_str();
    add_finder_options(permute, o);
    add_format_option(permute, o);
    permute->callback([&] { action = [&] { return cmd_permute(o, out); }; });

    auto * verify = app.add_subcommand("verify", "re-check a witness against its input");
    verify->add_option("--witness", o.witness_file, "witness JSON or a find/rainbow/permute output")->required();
    verify->add_option("--graph", o.graph_file, "edge-list file");
    verify->add_option("--coloring", o.coloring_file, "colouring file");
    verify->add_option("--permutation", o.permutation_file, "permutation file");
    verify->add_option("--mode", o.mode, "fixed points: strict|weak")->capture_default_str();
    verify->add_option("--n", o.n, "number of vertices");
    verify->add_option("--k", o.k, "expected progression length");
    add_format_option(verify, o);
    verify->callback([&] { action = [&] { return cmd_verify(o, out); }; });

    auto * bounds = app.add_subcommand("bounds", "sub-Ramsey, T_k and set-mapping upper bounds");
    bounds->add_option("--m", o.m, "colour multiplicity bound")->required();
    bounds->add_option("--k", o.k, "progression length")->required();
    add_finder_options(bounds, o);
    add_format_option(bounds, o);
    bounds->callback([&] { action = [&] { return cmd_bounds(o, out); }; });

    auto * budget = app.add_subcommand("budget", "certified edge budgets on [n]");
    budget->add_option("--n", o.n, "interval length")->required();
    budget->add_option("--k", o.k, "progression length")->required();
    add_finder_options(budget, o);
    add_format_option(budget, o);
    budget->callback([&] { action = [&] { return cmd_budget(o, out); }; });

    auto * exact = app.add_subcommand("exact", "exhaustive extremal searches");
    exact->require_subcommand(1);
    auto * exact_sr = exact->add_subcommand("sr", "sub-Ramsey number sr(m, k)");
    exact_sr->add_option("m", o.m, "multiplicity bound")->required();
    exact_sr->add_option("k", o.k, "progression length")->required();
    o.n_max = 12;
    exact_sr->add_option("--n-max", o.n_max, "largest n searched")->capture_default_str();
    exact_sr->add_option("--epsilon", o.epsilon, "constant for the reported upper bound")->capture_default_str();
    add_budget_options(exact_sr, o);
    add_format_option(exact_sr, o);
    exact_sr->callback([&] { action = [&] { return cmd_exact_sr(o, out); }; });

    auto * exact_col = exact->add_subcommand("coloring", "colouring of [n] without rainbow k-progression");
    exact_col->add_option("n", o.n, "interval length")->required();
    exact_col->add_option("m", o.m, "multiplicity bound")->required();
    exact_col->add_option("k", o.k, "progression length")->required();
    add_budget_options(exact_col, o);
    add_format_option(exact_col, o);
    exact_col->callback([&] { action = [&] { return cmd_exact_coloring(o, out); }; });

    auto * exact_perm = exact->add_subcommand("permutation", "permutation of [n] without a free k-progression");
    exact_perm->add_option("n", o.n, "interval length")->required();
    exact_perm->add_option("k", o.k, "progression length")->required();
    exact_perm->add_option("--mode", o.mode, "fixed points: strict|weak")->capture_default_str();
    add_budget_options(exact_perm, o);
    add_format_option(exact_perm, o);
    exact_perm->callback([&] { action = [&] { return cmd_exact_permutation(o, out); }; });

    auto * probe = app.add_subcommand("probe", "empirical and horizon-limited probes");
    probe->require_subcommand(1);
    auto * tight = probe->add_subcommand("tightness", "fraction of random e-edge graphs with an independent k-progression");
    tight->add_option("--n", o.n, "interval length")->required();
    tight->add_option("--k", o.k, "progression length")->required();
    tight->add_option("--e", o.e, "edge count (default: certified budget)");
    tight->add_option("--trials", o.trials, "number of random graphs")->capture_default_str();
    tight->add_option("--seed", o.seed, "random seed")->capture_default_str();
    add_finder_options(tight, o);
    add_format_option(tight, o);
    tight->callback([&] { action = [&] { return cmd_probe_tightness(o, out); }; });

    auto * n0 = probe->add_subcommand("n0", "bad permutations of [n] for n <= n-max");
    n0->add_option("--k", o.k, "progression length")->required();
    n0->add_option("--mode", o.mode, "fixed points: strict|weak")->capture_default_str();
    n0->add_option("--n-max", o.n_max, "largest n searched")->capture_default_str();
    add_finder_options(n0, o);
    add_budget_options(n0, o);
    add_format_option(n0, o);
    n0->callback([&] { action = [&] { return cmd_probe_n0(o, out); }; });

    auto * tk = probe->add_subcommand("tk", "equinumerous t-colourings of [t m] for m <= m-max");
    tk->add_option("--t", o.t, "number of colours")->required();
    tk->add_option("--k", o.k, "progression length")->required();
    o.m_max = 3;
    tk->add_option("--m-max", o.m_max, "largest m searched")->capture_default_str();
    add_budget_options(tk, o);
    add_format_option(tk, o);
    tk->callback([&] { action = [&] { return cmd_probe_tk(o, out); }; });

    auto * eps = probe->add_subcommand("epsilon", "re-derive the pinned edge-budget constant");
    add_format_option(eps, o);
    eps->callback([&] { action = [&] { return cmd_probe_epsilon(o, out); }; });

    auto * lemma = probe->add_subcommand("lemma1", "sieve density ratio at n = ceil(k log k)");
    o.k_min = 10;
    o.k_max = 100;
    lemma->add_option("--k-min", o.k_min, "smallest k")->capture_default_str();
    lemma->add_option("--k-max", o.k_max, "largest k")->capture_default_str();
    add_format_option(lemma, o);
    lemma->callback([&] { action = [&] { return cmd_probe_lemma1(o, out); }; });

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("iap");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto & s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_error;
    }

    try {
        return action ? action() : exit_error;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
}

}

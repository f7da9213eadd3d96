#include "rrg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "rrg/colouring.hpp"
#include "rrg/density.hpp"
#include "rrg/error.hpp"
#include "rrg/forcing.hpp"
#include "rrg/game.hpp"
#include "rrg/graph_io.hpp"
#include "rrg/product.hpp"

namespace rrg::cli {

namespace {

std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Edge parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument(text);
        std::size_t used = 0;
        const int a = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        const std::string rest = text.substr(comma + 1);
        const int b = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw ParseError(std::string(what) + " must look like u,v (got \"" + text + "\")");
    }
}

Json load_json(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// A matching file is a graph file whose edges are the pairs, or a bare JSON list of pairs.
std::vector<Edge> load_matching(const std::string& path) {
    const std::string text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(path + ": " + e.what());
        }
        std::vector<Edge> pairs;
        for (const Json& p : j) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
                throw ParseError(path + ": bad pair " + p.dump());
            pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
        return pairs;
    }
    return parse_graph(text).edges();
}

std::string join(const std::vector<Vertex>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
    return os.str();
}

struct Globals {
    std::optional<std::uint64_t> seed;
    std::string out = "-";
    bool quiet = false;
    int threads = 1;
};

struct Run {
    std::string output;
    int code = kExitOk;
    Json config = Json::object();
    std::optional<std::uint64_t> seed;
};

// ------------------------------------------------------------- handlers

struct DensityArgs {
    std::string graph;
    std::string kind = "m2";
};

Run run_density(const DensityArgs& a) {
    const Graph g = load_graph(a.graph);
    Run run;
    run.config = {{"graph", a.graph}, {"kind", a.kind}};
    const char base = a.kind[0];
    const DensityKind kind = a.kind.size() == 1 ? DensityKind::plain : a.kind[1] == '1' ? DensityKind::one : DensityKind::two;
    if (base == 'd') {
        run.output = local_density(g, kind).str() + "\n";
    } else {
        const DensityReport r = max_density(g, kind);
        run.output = r.value.str() + "\nwitness: " + join(r.witness) + "\n";
    }
    return run;
}

struct CheckArgs {
    std::string graph;
    std::string predicate;
};

Run run_check(const CheckArgs& a) {
    const Graph g = load_graph(a.graph);
    Run run;
    run.config = {{"graph", a.graph}, {"predicate", a.predicate}};
    if (a.predicate == "m2-decreasing-edge") {
        const auto e = find_m2_decreasing_edge(g);
        run.output = e ? "edge " + std::to_string(e->u) + " " + std::to_string(e->v) + "\n" : "none\n";
        return run;
    }
    const bool strict = a.predicate.rfind("strictly-", 0) == 0;
    const std::string rest = strict ? a.predicate.substr(9) : a.predicate;
    const DensityKind kind = rest == "balanced" ? DensityKind::plain : rest == "1-balanced" ? DensityKind::one : DensityKind::two;
    const BalanceReport r = balancedness_report(g, kind, strict);
    std::ostringstream os;
    os << (r.holds ? "holds" : "fails") << "\n";
    os << "density: " << r.density.str() << "\n";
    if (r.counterexample) {
        os << "counterexample: vertices " << join(r.counterexample->vertices);
        if (r.counterexample->removed_edge)
            os << " minus edge " << r.counterexample->removed_edge->u << " " << r.counterexample->removed_edge->v;
        os << " density " << r.counterexample->value.str() << "\n";
    }
    run.output = os.str();
    return run;
}

struct ProductArgs {
    std::string g;
    std::string h;
    std::string root;
    int k = 1;
    bool reduced = false;
};

Run run_product(const ProductArgs& a) {
    const Graph g = load_graph(a.g);
    const Graph h = load_graph(a.h);
    const Edge root = parse_pair(a.root, "--root");
    // Keep the order the user gave: the first vertex plays u.
    const auto comma = a.root.find(',');
    const Vertex ru = std::stoi(a.root.substr(0, comma));
    const Vertex rv = ru == root.u ? root.v : root.u;
    const RootedGraph rooted(h, ru, rv);
    const ProductGraph p = a.reduced ? reduced_edge_rooted_product(g, rooted, a.k) : edge_rooted_product(g, rooted, a.k);
    Json j = graph_to_json(p.graph);
    Json central_edges = Json::array();
    for (const Edge& e : p.central_edges) central_edges.push_back(Json::array({e.u, e.v}));
    Json attachments = Json::array();
    for (const Attachment& at : p.attachments)
        attachments.push_back(Json{{"central_edge", Json::array({at.central_edge.u, at.central_edge.v})},
                                   {"copy", at.copy_index},
                                   {"vertices", at.vertices}});
    j["annotation"] = Json{{"k", a.k},
                           {"root", Json::array({ru, rv})},
                           {"reduced", p.reduced},
                           {"central_vertices", p.central_vertices},
                           {"central_edges", std::move(central_edges)},
                           {"attachments", std::move(attachments)}};
    Run run;
    run.config = {{"G", a.g}, {"H", a.h}, {"root", a.root}, {"k", a.k}, {"reduced", a.reduced}};
    run.output = j.dump(2) + "\n";
    return run;
}

struct ColourSearchArgs {
    std::string g;
    std::string h;
    int colours = 2;
    std::int64_t budget = 10'000'000;
};

Run run_colour_search(const ColourSearchArgs& a) {
    const Graph g = load_graph(a.g);
    const Graph h = load_graph(a.h);
    const ColouringSearchResult r = search_h_free_colouring(g, h, a.colours, a.budget);
    Json j;
    j["verdict"] = std::string(to_string(r.verdict));
    j["nodes"] = r.nodes;
    j["colouring"] = r.colouring ? colouring_to_json(*r.colouring) : Json();
    Run run;
    run.config = {{"G", a.g}, {"H", a.h}, {"colours", a.colours}, {"budget", a.budget}};
    run.output = j.dump(2) + "\n";
    if (r.verdict == SearchVerdict::unknown) run.code = kExitBudget;
    return run;
}

struct CheckForcingArgs {
    std::string h;
    std::string f_red;
    std::string f_blue;
    std::string matching;
};

Run run_check_forcing(const CheckForcingArgs& a) {
    const Graph h = load_graph(a.h);
    const ForcingStructure s{load_graph(a.f_red), load_graph(a.f_blue), load_matching(a.matching)};
    Run run;
    run.config = {{"H", a.h}, {"F_red", a.f_red}, {"F_blue", a.f_blue}, {"M", a.matching}};
    run.output = forcing_report_to_json(check_forcing_structure(h, s)).dump(2) + "\n";
    return run;
}

struct ForcedArgs {
    std::string g;
    std::string colouring;
    std::string h;
    int palette = 2;
    std::string root;
    bool witnesses = false;
};

Run run_forced(const ForcedArgs& a) {
    const Graph g = load_graph(a.g);
    const Graph h = load_graph(a.h);
    const Colouring phi = colouring_from_json(load_json(a.colouring), g);
    if (!phi.is_total()) throw DomainError("forced: colouring does not cover every edge of G");
    if (a.palette == 2 && phi.uses(Colour::green)) throw DomainError("forced: palette 2 colouring uses green");
    RootPolicy policy;
    if (!a.root.empty()) policy = RootPolicy::fixed(parse_pair(a.root, "--root"));
    const BaseMap bases = colour_bases(phi, h, policy);
    const ForcedSet forced = forced_set(bases, a.palette, h, g.vertex_count());
    Run run;
    run.config = {{"G", a.g}, {"colouring", a.colouring}, {"H", a.h}, {"palette", a.palette},
                  {"root", a.root.empty() ? Json("all_edges") : Json(a.root)}, {"witnesses", a.witnesses}};
    run.output = forced_set_to_json(forced, bases, h, a.witnesses).dump(2) + "\n";
    return run;
}

struct SimulateArgs {
    std::string config;
    int trials = 1;
};

std::filesystem::path parent_of(const std::string& path) { return std::filesystem::path(path).parent_path(); }

bool budget_ran_out(const GameTranscript& t) {
    return t.round_one_status == RoundOneStatus::unknown || (t.outcome && t.outcome->verdict == ExtendVerdict::unknown);
}

Run run_simulate(const SimulateArgs& a, const Globals& g) {
    GameConfig cfg = game_config_from_json(load_json(a.config), parent_of(a.config));
    if (g.seed) cfg.seed = *g.seed;
    if (a.trials < 1) throw DomainError("simulate: --trials must be at least 1");
    Run run;
    run.config = game_config_to_json(cfg);
    run.config["trials"] = a.trials;
    run.seed = cfg.seed;
    Json result;
    if (a.trials == 1) {
        const GameTranscript t = play_two_round(cfg);
        if (budget_ran_out(t)) run.code = kExitBudget;
        result = transcript_to_json(t);
    } else {
        result = Json::array();
        for (int i = 0; i < a.trials; ++i) {
            GameConfig trial = cfg;
            trial.seed = trial_seed(cfg.seed, cfg, i);
            const GameTranscript t = play_two_round(trial);
            if (budget_ran_out(t)) run.code = kExitBudget;
            result.push_back(transcript_to_json(t));
        }
    }
    run.output = result.dump(2) + "\n";
    return run;
}

struct SweepArgs {
    std::string config;
    std::optional<int> trials;
};

Run run_sweep(const SweepArgs& a, const Globals& g) {
    SweepGrid grid = sweep_grid_from_json(load_json(a.config), parent_of(a.config));
    if (g.seed) grid.base.seed = *g.seed;
    const int trials = a.trials ? *a.trials : grid.trials.value_or(20);
    Run run;
    run.config = {{"config", a.config}, {"trials", trials}, {"base", game_config_to_json(grid.base)}};
    run.seed = grid.base.seed;
    run.output = to_csv(monte_carlo(grid, trials, g.threads));
    return run;
}

struct StatsArgs {
    std::string f;
    int n = 50;
    double prob = 0.3;
    int trials = 200;
    double k = 10;
};

Run run_stats(const StatsArgs& a, const Globals& g) {
    const Graph f = load_graph(a.f);
    const std::uint64_t seed = g.seed.value_or(0);
    Run run;
    run.config = {{"F", a.f}, {"n", a.n}, {"prob", a.prob}, {"trials", a.trials}, {"K", a.k}};
    run.seed = seed;
    run.output = subgraph_statistics_to_json(subgraph_count_statistics(f, a.n, a.prob, a.trials, seed, a.k)).dump(2) + "\n";
    return run;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open " + path + " for writing");
    file << text;
    if (!file) throw DomainError("failed writing " + path);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random two-round Ramsey games: densities, products, colourings, forcing and simulation", "rrg"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Master seed");
    app.add_option("--out", g.out, "Output path, - for standard output");
    app.add_flag("--quiet", g.quiet, "No manifest on standard error");
    app.add_option("--threads", g.threads, "Parallel trials")->check(CLI::PositiveNumber);
    app.set_version_flag("--version", kToolVersion);

    DensityArgs density;
    auto* c_density = app.add_subcommand("density", "Exact density or maximum density");
    c_density->add_option("graph", density.graph)->required();
    c_density->add_option("--kind", density.kind)->check(CLI::IsMember({"m", "m1", "m2", "d", "d1", "d2"}));

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "Balancedness predicates");
    c_check->add_option("graph", check.graph)->required();
    c_check->add_option("--predicate", check.predicate)
        ->required()
        ->check(CLI::IsMember({"balanced", "strictly-balanced", "1-balanced", "strictly-1-balanced", "2-balanced",
                               "strictly-2-balanced", "m2-decreasing-edge"}));

    ProductArgs product;
    auto* c_product = app.add_subcommand("product", "Edge-rooted product");
    c_product->add_option("G", product.g)->required();
    c_product->add_option("H", product.h)->required();
    c_product->add_option("--root", product.root)->required();
    c_product->add_option("--k", product.k)->required();
    c_product->add_flag("--reduced", product.reduced);

    ColourSearchArgs search;
    auto* c_search = app.add_subcommand("colour-search", "Search for a colouring with no monochromatic H");
    c_search->add_option("G", search.g)->required();
    c_search->add_option("H", search.h)->required();
    c_search->add_option("--colours", search.colours)->check(CLI::IsMember({2, 3}));
    c_search->add_option("--budget", search.budget);

    CheckForcingArgs forcing;
    auto* c_forcing = app.add_subcommand("check-forcing", "Check a forcing structure");
    c_forcing->add_option("H", forcing.h)->required();
    c_forcing->add_option("Fred", forcing.f_red)->required();
    c_forcing->add_option("Fblue", forcing.f_blue)->required();
    c_forcing->add_option("M", forcing.matching)->required();

    ForcedArgs forced;
    auto* c_forced = app.add_subcommand("forced", "Colour bases and forced pairs of a colouring");
    c_forced->add_option("G", forced.g)->required();
    c_forced->add_option("colouring", forced.colouring)->required();
    c_forced->add_option("H", forced.h)->required();
    c_forced->add_option("--palette", forced.palette)->check(CLI::IsMember({2, 3}));
    c_forced->add_option("--root", forced.root);
    c_forced->add_flag("--witnesses", forced.witnesses);

    SimulateArgs simulate;
    auto* c_simulate = app.add_subcommand("simulate", "Play the two-round game");
    c_simulate->add_option("--config", simulate.config)->required();
    c_simulate->add_option("--trials", simulate.trials);

    SweepArgs sweep;
    auto* c_sweep = app.add_subcommand("sweep", "Monte Carlo sweep over a grid, CSV out");
    c_sweep->add_option("--config", sweep.config)->required();
    c_sweep->add_option("--trials", sweep.trials);

    StatsArgs stats;
    auto* c_stats = app.add_subcommand("stats", "Subgraph count statistics in G(n,p)");
    c_stats->add_option("F", stats.f)->required();
    c_stats->add_option("--n", stats.n);
    c_stats->add_option("--prob", stats.prob);
    c_stats->add_option("--trials", stats.trials);
    c_stats->add_option("--k", stats.k);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const std::string started = timestamp();
    Run run;
    try {
        if (sub == c_density) run = run_density(density);
        else if (sub == c_check) run = run_check(check);
        else if (sub == c_product) run = run_product(product);
        else if (sub == c_search) run = run_colour_search(search);
        else if (sub == c_forcing) run = run_check_forcing(forcing);
        else if (sub == c_forced) run = run_forced(forced);
        else if (sub == c_simulate) run = run_simulate(simulate, g);
        else if (sub == c_sweep) run = run_sweep(sweep, g);
        else run = run_stats(stats, g);

        const bool to_file = g.out != "-";
        if (to_file) write_text(g.out, run.output);
        else out << run.output << std::flush;

        Json manifest;
        manifest["tool"] = "rrg";
        manifest["tool_version"] = kToolVersion;
        manifest["contract_version"] = "1";
        manifest["subcommand"] = name;
        manifest["configuration"] = run.config;
        manifest["configuration"]["threads"] = g.threads;
        const auto seed = run.seed ? run.seed : g.seed;
        manifest["seed"] = seed ? Json(*seed) : Json();
        manifest["output"] = g.out;
        manifest["exit_code"] = run.code;
        manifest["started"] = started;
        manifest["finished"] = timestamp();
        if (to_file) write_text(g.out + ".manifest.json", manifest.dump(2) + "\n");
        else if (!g.quiet) err << manifest.dump() << "\n";
        if (run.code == kExitBudget) err << name << ": search budget exhausted\n";
        return run.code;
    } catch (const BudgetExceeded& e) {
        err << name << ": " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << name << ": " << e.what() << "\n";
        return kExitDomain;
    }
}

} // namespace rrg::cli

#include "rrg/game.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include "rrg/canonical.hpp"
#include "rrg/colouring.hpp"
#include "rrg/density.hpp"
#include "rrg/error.hpp"
#include "rrg/graph_io.hpp"
#include "rrg/seeding.hpp"

namespace rrg {

std::string_view to_string(ColouringSource s) {
    switch (s) {
    case ColouringSource::search: return "search";
    case ColouringSource::supplied: return "supplied";
    case ColouringSource::adversarial_greedy: return "adversarial-greedy";
    }
    return "?";
}

std::string_view to_string(ExtendVerdict v) {
    switch (v) {
    case ExtendVerdict::extendable: return "extendable";
    case ExtendVerdict::not_extendable: return "not_extendable";
    case ExtendVerdict::unknown: return "unknown";
    }
    return "?";
}

std::string_view to_string(CertificateKind k) {
    switch (k) {
    case CertificateKind::forced_pair: return "forced_pair";
    case CertificateKind::forced_copy: return "forced_copy";
    case CertificateKind::exhaustive: return "exhaustive";
    }
    return "?";
}

std::string_view to_string(RoundOneStatus s) {
    switch (s) {
    case RoundOneStatus::found: return "found";
    case RoundOneStatus::none_exists: return "none_exists";
    case RoundOneStatus::unknown: return "unknown";
    case RoundOneStatus::heuristic_failed: return "heuristic_failed";
    case RoundOneStatus::supplied: return "supplied";
    }
    return "?";
}

// ---------------------------------------------------------------- config

namespace {

const std::set<std::string> kConfigKeys{"n",        "H",           "palette",     "c",
                                        "p",        "q",           "q_coeff",     "colouring_source",
                                        "colouring", "search_budget", "extend_budget", "root_policy",
                                        "fast_path", "seed"};

template <class T>
T field(const Json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw ParseError(std::string("config field \"") + key + "\" is missing or has the wrong type");
    }
}

template <class T>
std::optional<T> optional_field(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return field<T>(j, key);
}

Json resolve_inline(const Json& value, const std::filesystem::path& base_dir) {
    if (!value.is_string()) return value;
    const std::filesystem::path path = base_dir / value.get<std::string>();
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Graph resolve_graph(const Json& value, const std::filesystem::path& base_dir) {
    if (value.is_string()) return load_graph(base_dir / value.get<std::string>());
    return graph_from_json(value);
}

void check_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream os;
        os << name << " = " << x << " violates 0 <= " << name << " <= 1";
        throw DomainError(os.str());
    }
}

double clamp01(double x) {
    if (std::isnan(x)) return 0.0;
    return std::clamp(x, 0.0, 1.0);
}

// n^(-1/m) with the exponent formed exactly.
double inverse_power(int n, const Rational& m) {
    if (m <= Rational(0)) throw DomainError("H needs at least one edge");
    if (n <= 1) return 1.0;
    const Rational exponent = Rational(-1) / m;
    return std::pow(static_cast<double>(n), exponent.to_double());
}

} // namespace

GameConfig game_config_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ParseError("game config must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (!kConfigKeys.count(key)) throw ParseError("unknown config field \"" + key + "\"");
    GameConfig cfg;
    cfg.n = field<int>(j, "n");
    if (cfg.n < 0) throw DomainError("n must be non-negative");
    if (!j.contains("H")) throw ParseError("config field \"H\" is missing");
    cfg.h = resolve_graph(j.at("H"), base_dir);
    if (auto v = optional_field<int>(j, "palette")) cfg.palette = *v;
    palette_colours(cfg.palette);
    if (auto v = optional_field<double>(j, "c")) cfg.c = *v;
    if (cfg.c < 0) throw DomainError("c must be non-negative");
    cfg.p = optional_field<double>(j, "p");
    cfg.q = optional_field<double>(j, "q");
    cfg.q_coeff = optional_field<double>(j, "q_coeff");
    if (cfg.p) check_unit_interval(*cfg.p, "p");
    if (cfg.q) check_unit_interval(*cfg.q, "q");
    if (cfg.q && cfg.q_coeff) throw DomainError("give either q or q_coeff, not both");
    if (cfg.q_coeff && *cfg.q_coeff < 0) throw DomainError("q_coeff must be non-negative");
    if (auto v = optional_field<std::string>(j, "colouring_source")) {
        if (*v == "search") cfg.colouring_source = ColouringSource::search;
        else if (*v == "supplied") cfg.colouring_source = ColouringSource::supplied;
        else if (*v == "adversarial-greedy") cfg.colouring_source = ColouringSource::adversarial_greedy;
        else throw ParseError("unknown colouring_source \"" + *v + "\"");
    }
    if (j.contains("colouring") && !j.at("colouring").is_null()) cfg.colouring = resolve_inline(j.at("colouring"), base_dir);
    if (cfg.colouring_source == ColouringSource::supplied && !cfg.colouring)
        throw DomainError("colouring_source \"supplied\" needs a colouring");
    if (auto v = optional_field<std::int64_t>(j, "search_budget")) cfg.search_budget = *v;
    if (auto v = optional_field<std::int64_t>(j, "extend_budget")) cfg.extend_budget = *v;
    if (cfg.search_budget <= 0 || cfg.extend_budget <= 0) throw DomainError("budgets must be positive");
    if (j.contains("root_policy") && !j.at("root_policy").is_null()) {
        const Json& r = j.at("root_policy");
        if (r.is_string() && r.get<std::string>() == "all_edges") {
            cfg.root_policy = RootPolicy::all_edges();
        } else if (r.is_array() && r.size() == 2 && r[0].is_number_integer() && r[1].is_number_integer()) {
            const Edge root(r[0].get<int>(), r[1].get<int>());
            if (!cfg.h.has_edge(root)) throw DomainError("root_policy edge is not an edge of H");
            cfg.root_policy = RootPolicy::fixed(root);
        } else {
            throw ParseError("root_policy must be \"all_edges\" or [u, v]");
        }
    }
    if (auto v = optional_field<bool>(j, "fast_path")) cfg.fast_path = *v;
    if (auto v = optional_field<std::uint64_t>(j, "seed")) cfg.seed = *v;
    return cfg;
}

Json game_config_to_json(const GameConfig& cfg) {
    Json j;
    j["n"] = cfg.n;
    j["H"] = graph_to_json(cfg.h);
    j["palette"] = cfg.palette;
    j["c"] = cfg.c;
    j["p"] = cfg.p ? Json(*cfg.p) : Json();
    j["q"] = cfg.q ? Json(*cfg.q) : Json();
    j["q_coeff"] = cfg.q_coeff ? Json(*cfg.q_coeff) : Json();
    j["colouring_source"] = std::string(to_string(cfg.colouring_source));
    j["colouring"] = cfg.colouring ? *cfg.colouring : Json();
    j["search_budget"] = cfg.search_budget;
    j["extend_budget"] = cfg.extend_budget;
    if (cfg.root_policy.fixed_root)
        j["root_policy"] = Json::array({cfg.root_policy.fixed_root->u, cfg.root_policy.fixed_root->v});
    else
        j["root_policy"] = "all_edges";
    j["fast_path"] = cfg.fast_path;
    j["seed"] = cfg.seed;
    return j;
}

double round_one_probability(const GameConfig& cfg) {
    if (cfg.p) {
        check_unit_interval(*cfg.p, "p");
        return *cfg.p;
    }
    const Rational m2 = max_density(cfg.h, DensityKind::two).value;
    return clamp01(cfg.c * inverse_power(cfg.n, m2));
}

double round_two_probability(const GameConfig& cfg) {
    if (cfg.q) {
        check_unit_interval(*cfg.q, "q");
        return *cfg.q;
    }
    if (!cfg.q_coeff) return 0.0;
    if (cfg.palette == 2) {
        if (cfg.n <= 1) return clamp01(*cfg.q_coeff);
        return clamp01(*cfg.q_coeff / (static_cast<double>(cfg.n) * static_cast<double>(cfg.n)));
    }
    const Rational m = max_density(cfg.h, DensityKind::plain).value;
    return clamp01(*cfg.q_coeff * inverse_power(cfg.n, m));
}

Graph sample_gnp(int n, double prob, std::uint64_t seed) {
    check_unit_interval(prob, "prob");
    if (n < 0) throw DomainError("sample_gnp: negative n");
    Engine engine(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform01(engine) < prob) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// ---------------------------------------------------------- extendability

namespace {

std::vector<Edge> normalise_new_edges(const Graph& g, const std::vector<Edge>& new_edges) {
    std::vector<Edge> out = new_edges;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const Edge& e : out) {
        if (e.u == e.v || e.u < 0 || e.v >= g.vertex_count())
            throw DomainError("decide_extendability: new edge out of range");
        if (g.has_edge(e)) throw DomainError("decide_extendability: new edge already in G");
    }
    return out;
}

void check_round_one(const Graph& g, const Colouring& phi, const Graph& h, int palette) {
    palette_colours(palette);
    if (!(phi.host() == g)) throw DomainError("decide_extendability: colouring is not on G");
    if (!phi.is_total()) throw DomainError("decide_extendability: colouring is partial");
    if (palette == 2 && phi.uses(Colour::green)) throw DomainError("decide_extendability: palette 2 colouring uses green");
    if (!is_monochromatic_free(phi, h)) throw DomainError("decide_extendability: colouring has a monochromatic copy of H");
}

Colouring extend_colouring(const Colouring& phi, const Graph& unioned) {
    Colouring out(unioned);
    const auto& edges = phi.host().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) out.set(edges[i], *phi.assignment()[i]);
    return out;
}

// Whether colouring `pair` with c on top of phi completes a monochromatic h.
bool completes_copy(const Colouring& phi, const Graph& h, Edge pair, Colour c) {
    BitGraph bits(phi.colour_class(c));
    bits.add_edge(pair.u, pair.v);
    return contains_copy_through(h, bits, pair);
}

} // namespace

ExtendResult decide_extendability(const Graph& g, const Colouring& phi, const std::vector<Edge>& new_edges,
                                  const Graph& h, int palette, const ExtendOptions& options) {
    check_round_one(g, phi, h, palette);
    if (options.budget <= 0) throw DomainError("decide_extendability: budget must be positive");
    const std::vector<Edge> fresh = normalise_new_edges(g, new_edges);
    const Graph unioned = g.with_edges(fresh);

    ExtendResult result;
    if (fresh.empty()) {
        result.verdict = ExtendVerdict::extendable;
        result.witness = phi;
        return result;
    }

    if (options.fast_path && h.edge_count() > 0) {
        const BaseMap bases = colour_bases(phi, h, options.root_policy);
        if (palette == 2) {
            for (const Edge& e : fresh) {
                if (bases.is_base(e, Colour::red) && bases.is_base(e, Colour::blue)) {
                    result.verdict = ExtendVerdict::not_extendable;
                    result.certificate = Certificate{CertificateKind::forced_pair, Colour::green, e, {}, 0};
                    return result;
                }
            }
        } else {
            for (Colour c : kColours) {
                std::vector<Edge> pairs;
                for (const Edge& e : forced_pairs(bases, c))
                    if (std::binary_search(fresh.begin(), fresh.end(), e)) pairs.push_back(e);
                if (static_cast<int>(pairs.size()) < h.edge_count()) continue;
                const auto copies = find_copies(h, Graph(g.vertex_count(), pairs));
                if (!copies.empty()) {
                    result.verdict = ExtendVerdict::not_extendable;
                    result.certificate = Certificate{CertificateKind::forced_copy, c, {}, copies.front(), 0};
                    return result;
                }
            }
        }
    }

    const CopyHypergraph hg = build_copy_hypergraph(h, unioned, &fresh);
    std::vector<std::optional<Colour>> fixed(static_cast<std::size_t>(unioned.edge_count()));
    const auto& g_edges = g.edges();
    for (std::size_t i = 0; i < g_edges.size(); ++i) fixed[*unioned.edge_index(g_edges[i])] = phi.assignment()[i];
    std::vector<std::uint32_t> free_edges;
    for (const Edge& e : fresh) free_edges.push_back(static_cast<std::uint32_t>(*unioned.edge_index(e)));

    AvoidanceProblem problem;
    problem.hypergraph = &hg;
    problem.palette = palette;
    problem.fixed = fixed;
    problem.order = fail_first_order(hg, free_edges);
    problem.budget = options.budget;
    problem.break_colour_symmetry = false;
    const AvoidanceResult solved = solve_avoidance(problem);
    result.nodes = solved.nodes;
    switch (solved.verdict) {
    case SearchVerdict::found: {
        Colouring witness(unioned);
        for (std::size_t i = 0; i < solved.colours.size(); ++i) witness.set_index(i, *solved.colours[i]);
        result.verdict = ExtendVerdict::extendable;
        result.witness = std::move(witness);
        break;
    }
    case SearchVerdict::none_exists:
        result.verdict = ExtendVerdict::not_extendable;
        result.certificate = Certificate{CertificateKind::exhaustive, Colour::green, {}, {}, solved.nodes};
        break;
    case SearchVerdict::unknown:
        result.verdict = ExtendVerdict::unknown;
        break;
    }
    return result;
}

bool extendable_by_enumeration(const Graph& g, const Colouring& phi, const std::vector<Edge>& new_edges,
                               const Graph& h, int palette) {
    check_round_one(g, phi, h, palette);
    const std::vector<Edge> fresh = normalise_new_edges(g, new_edges);
    const Graph unioned = g.with_edges(fresh);
    std::size_t total = 1;
    for (std::size_t i = 0; i < fresh.size(); ++i) total *= static_cast<std::size_t>(palette);
    for (std::size_t code = 0; code < total; ++code) {
        Colouring full = extend_colouring(phi, unioned);
        std::size_t rest = code;
        for (const Edge& e : fresh) {
            full.set(e, static_cast<Colour>(rest % static_cast<std::size_t>(palette)));
            rest /= static_cast<std::size_t>(palette);
        }
        if (is_monochromatic_free(full, h)) return true;
    }
    return false;
}

bool validate_extend_result(const Graph& g, const Colouring& phi, const std::vector<Edge>& new_edges, const Graph& h,
                            int palette, const ExtendResult& result, int max_enumerated) {
    const std::vector<Edge> fresh = normalise_new_edges(g, new_edges);
    const Graph unioned = g.with_edges(fresh);
    const auto in_fresh = [&](Edge e) { return std::binary_search(fresh.begin(), fresh.end(), e); };
    const auto palette_set = palette_colours(palette);

    switch (result.verdict) {
    case ExtendVerdict::unknown:
        return !result.witness && !result.certificate;
    case ExtendVerdict::extendable: {
        if (!result.witness) return false;
        const Colouring& w = *result.witness;
        if (!(w.host() == unioned) || !w.is_total()) return false;
        if (palette == 2 && w.uses(Colour::green)) return false;
        for (const Edge& e : g.edges())
            if (w.colour_of(e) != phi.colour_of(e)) return false;
        return is_monochromatic_free(w, h);
    }
    case ExtendVerdict::not_extendable:
        break;
    }
    if (!result.certificate) return false;
    const Certificate& cert = *result.certificate;
    switch (cert.kind) {
    case CertificateKind::forced_pair:
        if (!in_fresh(cert.pair)) return false;
        for (Colour c : palette_set)
            if (c != cert.colour && !completes_copy(phi, h, cert.pair, c)) return false;
        return palette == 2 && cert.colour == Colour::green;
    case CertificateKind::forced_copy: {
        if (static_cast<int>(cert.copy.edges.size()) != h.edge_count()) return false;
        for (const Edge& e : cert.copy.edges)
            if (!in_fresh(e)) return false;
        const Graph placed = induced_subgraph(Graph(g.vertex_count(), cert.copy.edges), cert.copy.vertices);
        if (!are_isomorphic(placed, h)) return false;
        for (const Edge& e : cert.copy.edges)
            for (Colour c : palette_set)
                if (c != cert.colour && !completes_copy(phi, h, e, c)) return false;
        return true;
    }
    case CertificateKind::exhaustive: {
        if (static_cast<int>(fresh.size()) <= max_enumerated)
            return !extendable_by_enumeration(g, phi, fresh, h, palette);
        const CopyHypergraph hg = build_copy_hypergraph(h, unioned, nullptr);
        AvoidanceProblem problem;
        problem.hypergraph = &hg;
        problem.palette = palette;
        problem.fixed.assign(static_cast<std::size_t>(unioned.edge_count()), std::nullopt);
        for (const Edge& e : g.edges()) problem.fixed[*unioned.edge_index(e)] = phi.colour_of(e);
        for (const Edge& e : fresh) problem.order.push_back(static_cast<std::uint32_t>(*unioned.edge_index(e)));
        problem.budget = std::numeric_limits<std::int64_t>::max();
        problem.break_colour_symmetry = false;
        return solve_avoidance(problem).verdict == SearchVerdict::none_exists;
    }
    }
    return false;
}

// ------------------------------------------------------------------- game

ExtendVerdict GameTranscript::overall() const {
    if (outcome) return outcome->verdict;
    if (round_one_status == RoundOneStatus::none_exists) return ExtendVerdict::not_extendable;
    return ExtendVerdict::unknown;
}

namespace {

std::optional<Copy> first_monochromatic_copy(const Colouring& phi, const Graph& h, Colour& colour) {
    for (Colour c : kColours) {
        if (!phi.uses(c)) continue;
        auto copies = monochromatic_copies(phi, h, c);
        if (!copies.empty()) {
            colour = c;
            return copies.front();
        }
    }
    return std::nullopt;
}

std::string describe_copy(const Copy& copy) {
    std::ostringstream os;
    for (std::size_t i = 0; i < copy.edges.size(); ++i) os << (i ? " " : "") << copy.edges[i].u << "-" << copy.edges[i].v;
    return os.str();
}

} // namespace

GameTranscript play_two_round(const GameConfig& config) {
    GameTranscript t;
    t.config = config;
    t.p = round_one_probability(config);
    t.q = round_two_probability(config);
    palette_colours(config.palette);

    if (config.colouring_source == ColouringSource::supplied) {
        if (!config.colouring) throw DomainError("play_two_round: supplied source without a colouring");
        Colouring phi = colouring_from_json(*config.colouring, config.n);
        if (config.palette == 2 && phi.uses(Colour::green))
            throw DomainError("play_two_round: supplied colouring uses green under palette 2");
        Colour bad = Colour::red;
        if (auto copy = first_monochromatic_copy(phi, config.h, bad))
            throw DomainError("play_two_round: supplied colouring has a " + std::string(to_string(bad)) +
                              " copy of H on edges " + describe_copy(*copy));
        t.round_one = phi.host();
        t.round_one_status = RoundOneStatus::supplied;
        t.colouring = std::move(phi);
    } else {
        t.round_one = sample_gnp(config.n, t.p, combine(config.seed, 1));
        if (config.colouring_source == ColouringSource::search) {
            const auto found = search_h_free_colouring(t.round_one, config.h, config.palette, config.search_budget);
            t.round_one_nodes = found.nodes;
            switch (found.verdict) {
            case SearchVerdict::found:
                t.round_one_status = RoundOneStatus::found;
                t.colouring = found.colouring;
                break;
            case SearchVerdict::none_exists: t.round_one_status = RoundOneStatus::none_exists; break;
            case SearchVerdict::unknown: t.round_one_status = RoundOneStatus::unknown; break;
            }
        } else {
            t.colouring = adversarial_greedy_colouring(t.round_one, config.h, config.palette, config.search_budget);
            t.round_one_status = t.colouring ? RoundOneStatus::found : RoundOneStatus::heuristic_failed;
        }
    }

    const Graph extra = sample_gnp(config.n, t.q, combine(config.seed, 2));
    for (const Edge& e : extra.edges())
        if (!t.round_one.has_edge(e)) t.round_two.push_back(e);

    if (t.colouring) {
        if (config.h.edge_count() > 0) {
            const BaseMap bases = colour_bases(*t.colouring, config.h, config.root_policy);
            const ForcedSet forced = forced_set(bases, config.palette, config.h, config.n);
            for (std::size_t i = 0; i < 3; ++i) {
                t.forced_pairs[i] = forced.pairs[i].size();
                t.forced_copies[i] = forced.copies[i].size();
            }
        }
        t.outcome = decide_extendability(t.round_one, *t.colouring, t.round_two, config.h, config.palette,
                                         ExtendOptions{config.extend_budget, config.fast_path, config.root_policy});
    }
    return t;
}

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
    return out;
}

Json per_colour(const std::array<std::size_t, 3>& counts) {
    Json j;
    for (Colour c : kColours) j[std::string(to_string(c))] = counts[index_of(c)];
    return j;
}

} // namespace

Json transcript_to_json(const GameTranscript& t) {
    Json j;
    j["config"] = game_config_to_json(t.config);
    j["p"] = t.p;
    j["q"] = t.q;
    Json one;
    one["graph"] = graph_to_json(t.round_one);
    one["colouring_source"] = std::string(to_string(t.config.colouring_source));
    one["heuristic"] = t.config.colouring_source == ColouringSource::adversarial_greedy;
    one["status"] = std::string(to_string(t.round_one_status));
    one["nodes"] = t.round_one_nodes;
    one["colouring"] = t.colouring ? colouring_to_json(*t.colouring) : Json();
    j["round_one"] = std::move(one);
    Json forced;
    forced["pairs"] = per_colour(t.forced_pairs);
    forced["copies"] = per_colour(t.forced_copies);
    j["forced"] = std::move(forced);
    j["round_two"] = edges_to_json(t.round_two);
    j["verdict"] = std::string(to_string(t.overall()));
    if (t.outcome) {
        Json outcome;
        outcome["verdict"] = std::string(to_string(t.outcome->verdict));
        outcome["nodes"] = t.outcome->nodes;
        if (t.outcome->witness) {
            // Only the round-two edges; the rest is the round-one colouring.
            Json list = Json::array();
            for (const Edge& e : t.round_two)
                list.push_back(Json{{"u", e.u}, {"v", e.v}, {"colour", std::string(to_string(*t.outcome->witness->colour_of(e)))}});
            outcome["witness"] = Json{{"edges", std::move(list)}};
        }
        if (t.outcome->certificate) {
            const Certificate& c = *t.outcome->certificate;
            Json cert;
            cert["kind"] = std::string(to_string(c.kind));
            switch (c.kind) {
            case CertificateKind::forced_pair:
                cert["colour"] = std::string(to_string(c.colour));
                cert["pair"] = Json::array({c.pair.u, c.pair.v});
                break;
            case CertificateKind::forced_copy:
                cert["colour"] = std::string(to_string(c.colour));
                cert["copy"] = edges_to_json(c.copy.edges);
                break;
            case CertificateKind::exhaustive: cert["nodes"] = c.nodes; break;
            }
            outcome["certificate"] = std::move(cert);
        }
        j["outcome"] = std::move(outcome);
    } else {
        j["outcome"] = Json();
    }
    return j;
}

// ------------------------------------------------------------------ sweeps

SweepGrid sweep_grid_from_json(const Json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ParseError("sweep grid must be a JSON object");
    Json base = j;
    SweepGrid grid;
    if (base.contains("trials")) {
        if (!base["trials"].is_number_integer()) throw ParseError("grid field \"trials\" must be an integer");
        grid.trials = base["trials"].get<int>();
        base.erase("trials");
    }
    const auto take = [&](const char* key, auto& list) {
        using T = typename std::decay_t<decltype(list)>::value_type;
        if (!base.contains(key) || !base[key].is_array()) return;
        if (base[key].empty()) throw ParseError(std::string("grid field \"") + key + "\" is empty");
        try {
            for (const Json& v : base[key]) list.push_back(v.get<T>());
        } catch (const Json::exception&) {
            throw ParseError(std::string("grid field \"") + key + "\" has the wrong element type");
        }
        base[key] = base[key][0];
    };
    take("n", grid.n);
    take("c", grid.c);
    take("q_coeff", grid.q_coeff);
    take("palette", grid.palette);
    grid.base = game_config_from_json(base, base_dir);
    return grid;
}

std::uint64_t trial_seed(std::uint64_t master, const GameConfig& point, int trial) {
    std::uint64_t key = combine(0, static_cast<std::uint64_t>(point.n));
    key = combine(key, double_bits(point.c));
    key = combine(key, point.q_coeff ? double_bits(*point.q_coeff) : ~std::uint64_t{0});
    key = combine(key, point.q ? double_bits(*point.q) : ~std::uint64_t{0});
    key = combine(key, point.p ? double_bits(*point.p) : ~std::uint64_t{0});
    key = combine(key, static_cast<std::uint64_t>(point.palette));
    return combine(combine(master, key), static_cast<std::uint64_t>(trial));
}

namespace {

struct TrialOutcome {
    ExtendVerdict verdict = ExtendVerdict::unknown;
    bool coloured = false;
    std::size_t forced_pairs = 0;
    std::size_t forced_copies = 0;
};

std::vector<GameConfig> grid_points(const SweepGrid& grid) {
    const auto or_base = [](const auto& list, auto base) {
        using T = decltype(base);
        return list.empty() ? std::vector<T>{base} : std::vector<T>(list.begin(), list.end());
    };
    std::vector<GameConfig> points;
    for (int n : or_base(grid.n, grid.base.n))
        for (double c : or_base(grid.c, grid.base.c))
            for (std::optional<double> qc : grid.q_coeff.empty() ? std::vector<std::optional<double>>{grid.base.q_coeff}
                                                                  : std::vector<std::optional<double>>(grid.q_coeff.begin(), grid.q_coeff.end()))
                for (int palette : or_base(grid.palette, grid.base.palette)) {
                    GameConfig cfg = grid.base;
                    cfg.n = n;
                    cfg.c = c;
                    if (!grid.q_coeff.empty()) {
                        cfg.q_coeff = qc;
                        cfg.q.reset();
                    }
                    cfg.palette = palette;
                    points.push_back(std::move(cfg));
                }
    return points;
}

} // namespace

std::vector<SweepRow> monte_carlo(const SweepGrid& grid, int trials, int threads) {
    if (trials < 1) throw DomainError("monte_carlo: trials must be at least 1");
    const std::vector<GameConfig> points = grid_points(grid);
    for (const GameConfig& p : points) {
        palette_colours(p.palette);
        round_one_probability(p);
        round_two_probability(p);
    }
    const std::size_t per = static_cast<std::size_t>(trials);
    const std::size_t tasks = points.size() * per;
    std::vector<TrialOutcome> outcomes(tasks);
    std::vector<std::exception_ptr> errors(tasks);

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < tasks; i = next++) {
            try {
                GameConfig cfg = points[i / per];
                cfg.seed = trial_seed(grid.base.seed, cfg, static_cast<int>(i % per));
                const GameTranscript t = play_two_round(cfg);
                TrialOutcome& out = outcomes[i];
                out.verdict = t.overall();
                out.coloured = t.colouring.has_value();
                for (std::size_t c = 0; c < 3; ++c) {
                    out.forced_pairs += t.forced_pairs[c];
                    out.forced_copies += t.forced_copies[c];
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks)));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<SweepRow> rows;
    for (std::size_t p = 0; p < points.size(); ++p) {
        SweepRow row;
        row.n = points[p].n;
        row.c = points[p].c;
        row.q_coeff = points[p].q_coeff;
        row.palette = points[p].palette;
        row.trials = trials;
        std::size_t ext = 0, not_ext = 0, unknown = 0, coloured = 0, pairs = 0, copies = 0;
        for (std::size_t t = 0; t < per; ++t) {
            const TrialOutcome& o = outcomes[p * per + t];
            switch (o.verdict) {
            case ExtendVerdict::extendable: ++ext; break;
            case ExtendVerdict::not_extendable: ++not_ext; break;
            case ExtendVerdict::unknown: ++unknown; break;
            }
            if (o.coloured) {
                ++coloured;
                pairs += o.forced_pairs;
                copies += o.forced_copies;
            }
        }
        const double total = static_cast<double>(per);
        row.frac_extendable = static_cast<double>(ext) / total;
        row.frac_not_extendable = static_cast<double>(not_ext) / total;
        row.frac_unknown = static_cast<double>(unknown) / total;
        if (coloured > 0) {
            row.mean_forced_pairs = static_cast<double>(pairs) / static_cast<double>(coloured);
            row.mean_forced_copies = static_cast<double>(copies) / static_cast<double>(coloured);
        }
        const double f = row.frac_not_extendable;
        row.ci_halfwidth = 1.96 * std::sqrt(f * (1.0 - f) / total);
        rows.push_back(row);
    }
    return rows;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "n,c,q_coeff,palette,trials,frac_extendable,frac_not_extendable,frac_unknown,mean_forced_pairs,"
        "mean_forced_copies,ci_halfwidth\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        char qc[64] = "";
        if (r.q_coeff) std::snprintf(qc, sizeof qc, "%.10g", *r.q_coeff);
        std::snprintf(buf, sizeof buf, "%d,%.10g,%s,%d,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.n, r.c, qc, r.palette,
                      r.trials, r.frac_extendable, r.frac_not_extendable, r.frac_unknown, r.mean_forced_pairs,
                      r.mean_forced_copies, r.ci_halfwidth);
        out += buf;
    }
    return out;
}

// -------------------------------------------------------------- statistics

SubgraphStatistics subgraph_count_statistics(const Graph& f, int n, double prob, int trials, std::uint64_t seed,
                                             double k, int family_size) {
    check_unit_interval(prob, "prob");
    if (trials < 1) throw DomainError("subgraph_count_statistics: trials must be at least 1");
    if (f.edge_count() == 0) throw DomainError("subgraph_count_statistics: F needs an edge");

    const int s = n / 4;
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> family;
    Engine family_engine(combine(seed, 0xFA));
    for (int i = 0; i < family_size && s > 0; ++i) {
        std::vector<Vertex> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        shuffle(order, family_engine);
        family.emplace_back(std::vector<Vertex>(order.begin(), order.begin() + s),
                            std::vector<Vertex>(order.begin() + s, order.begin() + 2 * s));
    }

    SubgraphStatistics stats;
    stats.markov_threshold =
        k * std::pow(static_cast<double>(n), f.vertex_count()) * std::pow(prob, f.edge_count());
    std::size_t violations = 0;
    double sum_copies = 0, sum_packing = 0;
    for (int t = 0; t < trials; ++t) {
        const Graph g = sample_gnp(n, prob, combine(combine(seed, static_cast<std::uint64_t>(t)), 1));
        SubgraphTrial row;
        row.copies = find_copies(f, g).size();
        row.packing = max_edge_disjoint_copies(f, g, PackingMode::greedy).size();
        if (prob > 0 && !family.empty()) {
            std::vector<int> side(static_cast<std::size_t>(n));
            bool first = true;
            const auto note = [&](double r) {
                row.min_ratio = first ? r : std::min(row.min_ratio, r);
                row.max_ratio = first ? r : std::max(row.max_ratio, r);
                first = false;
            };
            for (const auto& [x, y] : family) {
                std::fill(side.begin(), side.end(), 0);
                for (Vertex v : x) side[static_cast<std::size_t>(v)] = 1;
                for (Vertex v : y) side[static_cast<std::size_t>(v)] = 2;
                double inside = 0, across = 0;
                for (const Edge& e : g.edges()) {
                    const int a = side[static_cast<std::size_t>(e.u)], b = side[static_cast<std::size_t>(e.v)];
                    if (a == 1 && b == 1) ++inside;
                    else if ((a == 1 && b == 2) || (a == 2 && b == 1)) ++across;
                }
                if (s >= 2) note(inside / (prob * s * (s - 1) / 2.0));
                note(across / (prob * s * s));
            }
        }
        if (static_cast<double>(row.copies) > stats.markov_threshold) ++violations;
        sum_copies += static_cast<double>(row.copies);
        sum_packing += static_cast<double>(row.packing);
        stats.trials.push_back(row);
    }
    stats.violation_fraction = static_cast<double>(violations) / trials;
    stats.mean_copies = sum_copies / trials;
    stats.mean_packing = sum_packing / trials;
    return stats;
}

Json subgraph_statistics_to_json(const SubgraphStatistics& s) {
    Json j;
    j["markov_threshold"] = s.markov_threshold;
    j["violation_fraction"] = s.violation_fraction;
    j["mean_copies"] = s.mean_copies;
    j["mean_packing"] = s.mean_packing;
    Json rows = Json::array();
    for (const SubgraphTrial& t : s.trials)
        rows.push_back(Json{{"copies", t.copies}, {"packing", t.packing}, {"min_ratio", t.min_ratio}, {"max_ratio", t.max_ratio}});
    j["trials"] = std::move(rows);
    return j;
}

} // namespace rrg

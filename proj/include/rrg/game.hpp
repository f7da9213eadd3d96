#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rrg/avoidance.hpp"
#include "rrg/colour.hpp"
#include "rrg/embedding.hpp"
#include "rrg/forcing.hpp"
#include "rrg/json.hpp"

namespace rrg {

enum class ColouringSource { search, supplied, adversarial_greedy };

std::string_view to_string(ColouringSource s);

struct GameConfig {
    int n = 0;
    Graph h;
    int palette = 2;
    double c = 1.0;                 // p = c * n^(-1/m2(H)) unless p is given
    std::optional<double> p;
    std::optional<double> q;        // direct round-two probability
    std::optional<double> q_coeff;  // q = q_coeff * n^-2 (palette 2) or n^(-1/m(H)) (palette 3)
    ColouringSource colouring_source = ColouringSource::adversarial_greedy;
    std::optional<Json> colouring;  // for the supplied source
    std::int64_t search_budget = 1'000'000;
    std::int64_t extend_budget = 1'000'000;
    RootPolicy root_policy;
    bool fast_path = true;
    std::uint64_t seed = 0;
};

/// Reads the config mirror of GameConfig. "H" and "colouring" may be inline
/// or a path relative to base_dir. Throws ParseError or DomainError.
GameConfig game_config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json game_config_to_json(const GameConfig& config);

/// Evaluated probabilities. Coefficient forms are clamped to [0, 1]; direct
/// values outside [0, 1] throw DomainError.
double round_one_probability(const GameConfig& config);
double round_two_probability(const GameConfig& config);

/// G(n, prob): pairs visited in lexicographic order, one mt19937_64 draw each.
Graph sample_gnp(int n, double prob, std::uint64_t seed);

enum class ExtendVerdict { extendable, not_extendable, unknown };
std::string_view to_string(ExtendVerdict v);

enum class CertificateKind { forced_pair, forced_copy, exhaustive };
std::string_view to_string(CertificateKind k);

struct Certificate {
    CertificateKind kind = CertificateKind::exhaustive;
    Colour colour = Colour::green;  // the forcing colour for forced_pair / forced_copy
    Edge pair;                      // forced_pair
    Copy copy;                      // forced_copy
    std::uint64_t nodes = 0;        // exhaustive: size of the completed search
};

struct ExtendOptions {
    std::int64_t budget = 1'000'000;
    bool fast_path = true;
    RootPolicy root_policy;
};

struct ExtendResult {
    ExtendVerdict verdict = ExtendVerdict::unknown;
    std::optional<Colouring> witness;  // on G + new_edges
    std::optional<Certificate> certificate;
    std::uint64_t nodes = 0;
};

/// Whether phi extends to G + new_edges without a monochromatic h. Throws
/// DomainError when phi is partial, not on g, uses colours outside the palette,
/// already contains a monochromatic h, or new_edges meets E(g).
ExtendResult decide_extendability(const Graph& g, const Colouring& phi, const std::vector<Edge>& new_edges,
                                  const Graph& h, int palette, const ExtendOptions& options = {});

/// Re-checks a verdict from scratch without bases or the copy hypergraph.
/// Exhaustive certificates are re-decided by enumeration when new_edges has at
/// most max_enumerated edges and by an unordered search otherwise.
bool validate_extend_result(const Graph& g, const Colouring& phi, const std::vector<Edge>& new_edges, const Graph& h,
                            int palette, const ExtendResult& result, int max_enumerated = 12);

/// Plain enumeration over every palette^|new_edges| extension.
bool extendable_by_enumeration(const Graph& g, const Colouring& phi, const std::vector<Edge>& new_edges,
                               const Graph& h, int palette);

enum class RoundOneStatus { found, none_exists, unknown, heuristic_failed, supplied };
std::string_view to_string(RoundOneStatus s);

struct GameTranscript {
    GameConfig config;
    double p = 0;
    double q = 0;
    Graph round_one;
    RoundOneStatus round_one_status = RoundOneStatus::unknown;
    std::uint64_t round_one_nodes = 0;
    std::optional<Colouring> colouring;
    std::array<std::size_t, 3> forced_pairs{};
    std::array<std::size_t, 3> forced_copies{};
    std::vector<Edge> round_two;
    std::optional<ExtendResult> outcome;  // absent when round one had no colouring

    /// extendable / not_extendable / unknown, with round-one terminal states folded in.
    ExtendVerdict overall() const;
};

GameTranscript play_two_round(const GameConfig& config);
Json transcript_to_json(const GameTranscript& t);

struct SweepGrid {
    GameConfig base;
    std::vector<int> n;
    std::vector<double> c;
    std::vector<double> q_coeff;
    std::vector<int> palette;
    std::optional<int> trials;
};

/// Grid mirror of GameConfig where n, c, q_coeff and palette may be arrays.
SweepGrid sweep_grid_from_json(const Json& j, const std::filesystem::path& base_dir = {});

struct SweepRow {
    int n = 0;
    double c = 0;
    std::optional<double> q_coeff;
    int palette = 2;
    int trials = 0;
    double frac_extendable = 0;
    double frac_not_extendable = 0;
    double frac_unknown = 0;
    double mean_forced_pairs = 0;
    double mean_forced_copies = 0;
    double ci_halfwidth = 0;
};

/// Seed of trial t at a grid point; the point is keyed by its values.
std::uint64_t trial_seed(std::uint64_t master, const GameConfig& point, int trial);

std::vector<SweepRow> monte_carlo(const SweepGrid& grid, int trials, int threads = 1);
std::string to_csv(const std::vector<SweepRow>& rows);

struct SubgraphTrial {
    std::size_t copies = 0;
    std::size_t packing = 0;
    double min_ratio = 0;  // e(X) / (p * C(|X|,2)) and e(X,Y) / (p |X||Y|) over the family
    double max_ratio = 0;
};

struct SubgraphStatistics {
    std::vector<SubgraphTrial> trials;
    double markov_threshold = 0;  // K n^v p^e
    double violation_fraction = 0;
    double mean_copies = 0;
    double mean_packing = 0;
};

/// Copy counts of f in G(n, prob) over independent trials, plus a fixed random
/// family of disjoint vertex-set pairs of size n/4 whose edge densities are
/// reported relative to prob (ratios are 0 when prob is 0).
SubgraphStatistics subgraph_count_statistics(const Graph& f, int n, double prob, int trials, std::uint64_t seed,
                                             double k, int family_size = 8);
Json subgraph_statistics_to_json(const SubgraphStatistics& s);

} // namespace rrg

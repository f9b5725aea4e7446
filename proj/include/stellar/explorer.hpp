#ifndef STELLAR_EXPLORER_HPP
#define STELLAR_EXPLORER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stellar/core.hpp"
#include "stellar/io.hpp"
#include "stellar/moves.hpp"
#include "stellar/rng.hpp"

namespace stellar {

/// Random walk over flag PL-spheres of dimension sphere_dim: edge
/// subdivisions with probability p_subdivide, admissible edge contractions
/// otherwise, starting from the octahedral sphere. Everything is a pure
/// function of the config, including the seed-derived random streams.
struct ExplorerConfig {
    int sphere_dim = 3;  // >= 2
    long long steps = 0;
    uint64_t seed = 0;
    uint64_t p_subdivide_num = 1;
    uint64_t p_subdivide_den = 2;
    int max_vertices = 64;
    std::string trace_path;  // JSONL trace, empty for none
    /// Equality events normally carry facet snapshots only when anomalous
    /// (greedy stuck off-octahedral or a contracted edge with non-octahedral
    /// link); this switches on snapshots for every event.
    bool snapshot_all_equalities = false;
};

struct GreedyResult {
    Complex final_complex;
    std::vector<bool> links_octahedral;  // one flag per contraction
    bool reached_octahedral = false;
};

struct EqualityEvent {
    long long step = 0;
    std::vector<long long> f;  // face counts of the state, f_0 first
    long long greedy_contractions = 0;
    bool greedy_reached_octahedral = false;
    bool all_links_octahedral = true;
    std::vector<bool> links_octahedral;
    std::optional<std::vector<Face>> snapshot;  // facets
};

/// A γ2 < 0 state: a counterexample certificate, re-checkable offline from
/// the facet dump and reproducible from the move log.
struct Gamma2Violation {
    long long step = 0;
    long long gamma2 = 0;
    std::vector<Face> facets;
    std::vector<Move> move_log;
};

struct BoundViolation {
    long long step = 0;
    int i = 0;
    long long gamma_i = 0;
    long long bound = 0;
    std::vector<Face> facets;
};

/// γ_i equal to the Turán bound without the join-of-cycles structure.
struct StructureMismatch {
    long long step = 0;
    int i = 0;
    std::vector<Face> facets;
};

struct BoundCheckSummary {
    bool applicable = false;  // needs even d = sphere_dim + 1 >= 4
    long long checked = 0;
    long long equality_hits = 0;
    std::vector<BoundViolation> violations;
    std::vector<StructureMismatch> structure_mismatches;
};

struct WalkReport {
    ExplorerConfig config;
    long long steps_taken = 0;
    long long subdivisions = 0;
    long long contractions = 0;
    long long gamma2_min = 0;
    std::vector<Gamma2Violation> violations;
    std::vector<EqualityEvent> equality_events;
    BoundCheckSummary bound_checks;
    std::vector<long long> final_f;
    long long final_gamma1 = 0;
    long long final_gamma2 = 0;
};

/// One move: subdivision with probability p, admissible contraction
/// otherwise; an empty or cap-blocked category falls back to the other.
std::pair<Complex, Move> random_step(const Complex& state, Rng& move_type, Rng& edge_choice,
                                     const ExplorerConfig& cfg);

/// Contract admissible edges (uniform pick) until none remains, recording
/// whether each contracted edge's link is octahedral.
GreedyResult greedy_contract_to_octahedral(const Complex& start, Rng& greedy);

WalkReport run(const ExplorerConfig& cfg);

/// Independent walks with seeds cfg.seed + index; reports in index order.
std::vector<WalkReport> run_walks(const ExplorerConfig& cfg, int walks);

Json walk_report_to_json(const WalkReport& report);

}  // namespace stellar

#endif  // STELLAR_EXPLORER_HPP

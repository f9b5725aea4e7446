#include "stellar/explorer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <thread>

#include "stellar/generators.hpp"
#include "stellar/invariants.hpp"

namespace stellar {

namespace {

long long gamma1_of(long long f0, int d) { return f0 - 2ll * d; }

long long gamma2_of(long long f0, long long f1, int d) {
    return f1 - (2ll * d - 3) * f0 + 2ll * d * (d - 2);
}

// Flagness via maximal cliques; considerably faster than the missing-face
// scan at walk sizes and equivalent for complexes.
bool flag_by_cliques(const Complex& c) { return clique_complex(c.skeleton()) == c; }

std::vector<Face> admissible_edges(const Complex& c) {
    std::vector<Face> out;
    for (const Face& e : c.edge_list()) {
        if (is_admissible(c, e[0], e[1])) out.push_back(e);
    }
    return out;
}

// Checks the standing state invariants and returns the face-count census.
std::vector<long long> verify_state(const Complex& c, int sphere_dim, long long step) {
    auto fail = [step](const std::string& what) {
        throw Error("walk invariant failed at step " + std::to_string(step) + ": " + what);
    };
    if (c.dim() != sphere_dim || !c.is_pure()) fail("state is not pure of the walk dimension");
    if (!flag_by_cliques(c)) fail("state is not flag");

    // pseudomanifold: every ridge lies in exactly two facets
    std::vector<Face> ridges;
    ridges.reserve(c.facets().size() * static_cast<size_t>(sphere_dim + 1));
    for (const Face& g : c.facets()) {
        for (VertexId v : g) ridges.push_back(g.without(v));
    }
    std::sort(ridges.begin(), ridges.end());
    for (size_t i = 0; i < ridges.size();) {
        size_t j = i;
        while (j < ridges.size() && ridges[j] == ridges[i]) j++;
        if (j - i != 2) fail("ridge " + ridges[i].str() + " lies in " + std::to_string(j - i) +
                             " facets");
        i = j;
    }

    std::vector<long long> census = c.skeleton_clique_census();
    long long chi = 0;
    for (size_t s = 1; s < census.size(); ++s) chi += (s % 2 == 1 ? 1 : -1) * census[s];
    long long expected_chi = 1 + (sphere_dim % 2 == 0 ? 1 : -1);
    if (chi != expected_chi) fail("Euler characteristic " + std::to_string(chi));
    return census;
}

}  // namespace

std::pair<Complex, Move> random_step(const Complex& state, Rng& move_type, Rng& edge_choice,
                                     const ExplorerConfig& cfg) {
    std::vector<Face> edges = state.edge_list();
    if (edges.empty()) throw Error("random_step: state has no edges");
    std::vector<Face> contractible = admissible_edges(state);

    bool can_subdivide = state.num_vertices() < cfg.max_vertices;
    bool can_contract = !contractible.empty();
    bool subdivide = move_type.chance(cfg.p_subdivide_num, cfg.p_subdivide_den);
    if (subdivide && !can_subdivide) subdivide = false;
    if (!subdivide && !can_contract) subdivide = true;
    if (subdivide && !can_subdivide) {
        throw Error("random_step: vertex cap reached and no admissible contraction exists");
    }

    VertexId fresh = state.max_label() + 1;
    if (subdivide) {
        const Face& e = edges[edge_choice.below(edges.size())];
        return {edge_subdivide(state, e, fresh), Move::edge_subdiv(e, fresh)};
    }
    const Face& e = contractible[edge_choice.below(contractible.size())];
    return {contract_edge(state, e[0], e[1], fresh), Move::contraction(e, fresh)};
}

GreedyResult greedy_contract_to_octahedral(const Complex& start, Rng& greedy) {
    GreedyResult out;
    Complex c = start;
    const int d = c.dim() + 1;
    for (;;) {
        std::vector<Face> contractible = admissible_edges(c);
        if (contractible.empty()) break;
        const Face& e = contractible[greedy.below(contractible.size())];
        Complex lk = c.link(e);
        out.links_octahedral.push_back(is_octahedral(lk));

        long long g2_before = gamma2_of(c.num_vertices(), c.edge_list().size(), d);
        Complex next = contract_edge(c, e[0], e[1], c.max_label() + 1);
        long long g2_after = gamma2_of(next.num_vertices(), next.edge_list().size(), d);
        long long g1_link = gamma1_of(lk.num_vertices(), d - 2);
        if (g2_before != g2_after + g1_link) {
            throw Error("greedy: gamma2 contraction identity failed at " + e.str());
        }
        c = std::move(next);
    }
    out.reached_octahedral = is_octahedral(c);
    out.final_complex = std::move(c);
    return out;
}

namespace {

struct WalkDriver {
    const ExplorerConfig& cfg;
    int d;  // sphere_dim + 1
    WalkReport report;
    std::vector<Move> move_log;
    std::ofstream trace;
    Rng move_type, edge_choice, greedy_choice;

    explicit WalkDriver(const ExplorerConfig& c)
        : cfg(c),
          d(c.sphere_dim + 1),
          move_type(Rng::stream(c.seed, 0)),
          edge_choice(Rng::stream(c.seed, 1)),
          greedy_choice(Rng::stream(c.seed, 2)) {
        report.config = cfg;
        if (!cfg.trace_path.empty()) {
            trace.open(cfg.trace_path);
            if (!trace) throw Error("cannot open trace file " + cfg.trace_path);
        }
    }

    void evaluate(long long step, const Complex& state, const Move* move) {
        std::vector<long long> census = verify_state(state, cfg.sphere_dim, step);
        long long f0 = census[1];
        long long f1 = census.size() > 2 ? census[2] : 0;
        long long g1 = gamma1_of(f0, d);
        long long g2 = gamma2_of(f0, f1, d);
        if (step == 0) {
            report.gamma2_min = g2;
        } else {
            report.gamma2_min = std::min(report.gamma2_min, g2);
        }

        // the only flag spheres with gamma1 = 0 are octahedral; a miss here
        // would mean a corrupted state, not new mathematics
        if (g1 == 0 && !is_octahedral(state)) {
            throw Error("walk invariant failed at step " + std::to_string(step) +
                        ": gamma1 = 0 on a non-octahedral state");
        }

        const char* event = nullptr;
        if (g2 < 0) {
            event = "violation";
            Gamma2Violation v;
            v.step = step;
            v.gamma2 = g2;
            v.facets = state.facets();
            v.move_log = move_log;
            report.violations.push_back(std::move(v));
        } else if (g2 == 0) {
            event = "equality";
            GreedyResult greedy = greedy_contract_to_octahedral(state, greedy_choice);
            EqualityEvent ev;
            ev.step = step;
            ev.f.assign(census.begin() + 1, census.end());
            ev.greedy_contractions = static_cast<long long>(greedy.links_octahedral.size());
            ev.greedy_reached_octahedral = greedy.reached_octahedral;
            ev.links_octahedral = greedy.links_octahedral;
            ev.all_links_octahedral =
                std::all_of(greedy.links_octahedral.begin(), greedy.links_octahedral.end(),
                            [](bool b) { return b; });
            bool anomalous = !ev.greedy_reached_octahedral || !ev.all_links_octahedral;
            if (anomalous || cfg.snapshot_all_equalities) ev.snapshot = state.facets();
            report.equality_events.push_back(std::move(ev));
        }

        if (report.bound_checks.applicable) {
            FVector f;
            f.entries = census;
            std::vector<long long> gamma = gamma_vector(h_vector(f));
            report.bound_checks.checked++;
            bool any_equality = false;
            for (int i = 2; i <= d / 2; ++i) {
                long long gi = gamma[static_cast<size_t>(i)];
                long long bound = turan_count(d / 2, static_cast<int>(f0) - 2 * d, i);
                if (gi > bound) {
                    report.bound_checks.violations.push_back({step, i, gi, bound, state.facets()});
                } else if (gi == bound) {
                    any_equality = true;
                    report.bound_checks.equality_hits++;
                    auto lengths = join_of_cycles_decomposition(state);
                    bool structure = lengths && static_cast<int>(lengths->size()) == d / 2 &&
                                     lengths->back() - lengths->front() <= 1;
                    if (!structure) {
                        report.bound_checks.structure_mismatches.push_back(
                            {step, i, state.facets()});
                    }
                }
            }
            (void)any_equality;
        }

        if (trace.is_open()) {
            Json line;
            line["step"] = step;
            line["move"] = move ? move_to_json(*move) : Json(nullptr);
            line["f"] = std::vector<long long>(census.begin() + 1, census.end());
            line["gamma1"] = g1;
            line["gamma2"] = g2;
            line["event"] = event ? Json(event) : Json(nullptr);
            trace << line.dump() << '\n';
        }
    }

    // corrected reachability spot-check: an available inverse whose result
    // stays flag is an admissible contraction with the same outcome
    void spot_check_reachability(const Complex& state) {
        MoveCatalog cat = list_moves(state);
        for (auto [v, a, b] : cat.invertible) {
            Complex back = inverse_edge_subdivide(state, v, a, b);
            if (!flag_by_cliques(back)) continue;
            if (!is_admissible(state, v, a)) {
                throw Error("reachability: flag inverse at vertex " + std::to_string(v) +
                            " is not an admissible contraction");
            }
            VertexId w = state.max_label() + 1;
            Complex merged = contract_edge(state, v, a, w);
            std::vector<std::pair<VertexId, VertexId>> back_to_a;
            for (VertexId u : merged.vertices()) back_to_a.emplace_back(u, u == w ? a : u);
            if (relabeled(merged, back_to_a) != back) {
                throw Error("reachability: contraction disagrees with the inverse subdivision");
            }
        }
    }

    WalkReport drive() {
        Complex state = octahedral_sphere(d);
        if (state.num_vertices() > cfg.max_vertices) {
            throw MalformedInputError("max_vertices below the octahedral start size");
        }
        report.bound_checks.applicable = (d % 2 == 0 && d >= 4);
        evaluate(0, state, nullptr);

        long long spot_every = std::max<long long>(1, cfg.steps / 16);
        for (long long k = 1; k <= cfg.steps; ++k) {
            auto [next, move] = random_step(state, move_type, edge_choice, cfg);
            move_log.push_back(move);
            (move.kind == MoveKind::EdgeSubdiv ? report.subdivisions : report.contractions)++;

            if (move.kind == MoveKind::Contract) {
                long long g2_before =
                    gamma2_of(state.num_vertices(), state.edge_list().size(), d);
                long long g2_after = gamma2_of(next.num_vertices(), next.edge_list().size(), d);
                long long g1_link = gamma1_of(
                    static_cast<long long>(
                        state.common_neighbors(move.face[0], move.face[1]).size()),
                    d - 2);
                if (g2_before != g2_after + g1_link) {
                    throw Error("walk: gamma2 contraction identity failed at step " +
                                std::to_string(k));
                }
            }

            state = std::move(next);
            evaluate(k, state, &move);
            if (k % spot_every == 0) spot_check_reachability(state);
        }

        report.steps_taken = cfg.steps;
        auto census = state.skeleton_clique_census();
        report.final_f.assign(census.begin() + 1, census.end());
        report.final_gamma1 = gamma1_of(census[1], d);
        report.final_gamma2 = gamma2_of(census[1], census.size() > 2 ? census[2] : 0, d);
        return std::move(report);
    }
};

}  // namespace

WalkReport run(const ExplorerConfig& cfg) {
    if (cfg.sphere_dim < 2) throw MalformedInputError("explorer: sphere_dim must be >= 2");
    if (cfg.steps < 0) throw MalformedInputError("explorer: steps must be >= 0");
    if (cfg.p_subdivide_num == 0 || cfg.p_subdivide_num >= cfg.p_subdivide_den) {
        throw MalformedInputError("explorer: p_subdivide must lie strictly between 0 and 1");
    }
    WalkDriver driver(cfg);
    return driver.drive();
}

std::vector<WalkReport> run_walks(const ExplorerConfig& cfg, int walks) {
    if (walks < 1) throw MalformedInputError("run_walks: need at least one walk");
    std::vector<WalkReport> out(static_cast<size_t>(walks));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(walks));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(walks));
    for (int i = 0; i < walks; ++i) {
        threads.emplace_back([&, i] {
            try {
                ExplorerConfig wcfg = cfg;
                wcfg.seed = cfg.seed + static_cast<uint64_t>(i);
                if (!cfg.trace_path.empty() && walks > 1) {
                    wcfg.trace_path = cfg.trace_path + "." + std::to_string(i);
                }
                out[static_cast<size_t>(i)] = run(wcfg);
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

Json walk_report_to_json(const WalkReport& r) {
    Json j;
    j["config"] = {{"sphere_dim", r.config.sphere_dim},
                   {"steps", r.config.steps},
                   {"seed", r.config.seed},
                   {"p_subdivide", {r.config.p_subdivide_num, r.config.p_subdivide_den}},
                   {"max_vertices", r.config.max_vertices},
                   {"snapshot_all_equalities", r.config.snapshot_all_equalities}};
    j["steps_taken"] = r.steps_taken;
    // a finite vertex cap restricts the reachable set, so the search is never
    // a full sweep of the sphere space
    j["exploration"] = "bounded";
    j["subdivisions"] = r.subdivisions;
    j["contractions"] = r.contractions;
    j["gamma2_min"] = r.gamma2_min;

    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json jv;
        jv["step"] = v.step;
        jv["gamma2"] = v.gamma2;
        Json facets = Json::array();
        for (const Face& f : v.facets) facets.push_back(face_to_json(f));
        jv["facets"] = std::move(facets);
        Json log = Json::array();
        for (const Move& m : v.move_log) log.push_back(move_to_json(m));
        jv["moves"] = std::move(log);
        violations.push_back(std::move(jv));
    }
    j["violations"] = std::move(violations);

    Json events = Json::array();
    for (const auto& ev : r.equality_events) {
        Json je;
        je["step"] = ev.step;
        je["f"] = ev.f;
        je["greedy_contractions"] = ev.greedy_contractions;
        je["greedy_reached_octahedral"] = ev.greedy_reached_octahedral;
        je["all_links_octahedral"] = ev.all_links_octahedral;
        Json links = Json::array();
        for (bool b : ev.links_octahedral) links.push_back(b);
        je["links_octahedral"] = std::move(links);
        if (ev.snapshot) {
            Json facets = Json::array();
            for (const Face& f : *ev.snapshot) facets.push_back(face_to_json(f));
            je["facets"] = std::move(facets);
        }
        events.push_back(std::move(je));
    }
    j["equality_events"] = std::move(events);

    Json bc;
    bc["applicable"] = r.bound_checks.applicable;
    bc["checked"] = r.bound_checks.checked;
    bc["equality_hits"] = r.bound_checks.equality_hits;
    Json bviol = Json::array();
    for (const auto& v : r.bound_checks.violations) {
        Json jv;
        jv["step"] = v.step;
        jv["i"] = v.i;
        jv["gamma_i"] = v.gamma_i;
        jv["bound"] = v.bound;
        Json facets = Json::array();
        for (const Face& f : v.facets) facets.push_back(face_to_json(f));
        jv["facets"] = std::move(facets);
        bviol.push_back(std::move(jv));
    }
    bc["violations"] = std::move(bviol);
    Json mism = Json::array();
    for (const auto& m : r.bound_checks.structure_mismatches) {
        Json jm;
        jm["step"] = m.step;
        jm["i"] = m.i;
        Json facets = Json::array();
        for (const Face& f : m.facets) facets.push_back(face_to_json(f));
        jm["facets"] = std::move(facets);
        mism.push_back(std::move(jm));
    }
    bc["structure_mismatches"] = std::move(mism);
    j["bound_checks"] = std::move(bc);

    j["final"] = {{"f", r.final_f}, {"gamma1", r.final_gamma1}, {"gamma2", r.final_gamma2}};
    return j;
}

}  // namespace stellar

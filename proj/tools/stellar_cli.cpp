#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "stellar/barycentric.hpp"
#include "stellar/connectivity.hpp"
#include "stellar/explorer.hpp"
#include "stellar/generators.hpp"
#include "stellar/invariants.hpp"
#include "stellar/io.hpp"
#include "stellar/isomorphism.hpp"
#include "stellar/moves.hpp"

using namespace stellar;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::vector<VertexId> parse_int_list(const std::string& csv) {
    std::vector<VertexId> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) {
                out.push_back(std::stoi(cur));
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    return out;
}

Face parse_face_list(const std::string& csv) { return Face::of(parse_int_list(csv)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"moves, subdivisions and gamma-vector exploration for flag simplicial complexes"};
    app.require_subcommand(1);

    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate canonical complexes");
    gen->require_subcommand(1);
    std::string gen_out;

    int gen_d = 3;
    auto* gen_oct = gen->add_subcommand("octahedral", "cross-polytope boundary sphere");
    gen_oct->add_option("--d", gen_d, "dimension of the cross polytope")->required();
    gen_oct->add_option("-o,--out", gen_out, "output facet file");

    std::vector<int> gen_lengths;
    auto* gen_join = gen->add_subcommand("join-cycles", "join of cycles");
    gen_join->add_option("lengths", gen_lengths, "cycle lengths (each >= 4)")->required();
    gen_join->add_option("-o,--out", gen_out, "output facet file");
    bool gen_allow_short = false;
    gen_join->add_flag("--allow-short", gen_allow_short, "permit cycles shorter than 4");

    int gen_n = 3;
    auto* gen_simplex = gen->add_subcommand("simplex-boundary", "boundary of a simplex");
    gen_simplex->add_option("n", gen_n, "number of vertices")->required();
    gen_simplex->add_option("-o,--out", gen_out, "output facet file");

    int gen_cycle_n = 4;
    auto* gen_cycle = gen->add_subcommand("cycle", "cycle complex");
    gen_cycle->add_option("n", gen_cycle_n, "cycle length")->required();
    gen_cycle->add_option("-o,--out", gen_out, "output facet file");

    // ---- bary -----------------------------------------------------------
    auto* bary = app.add_subcommand("bary", "barycentric subdivision via edge subdivisions");
    std::string bary_in, bary_out;
    bool bary_emit_sequence = false;
    std::optional<uint64_t> bary_seed;
    bary->add_option("complex", bary_in, "input facet file")->required();
    bary->add_flag("--emit-sequence", bary_emit_sequence,
                   "emit the edge-subdivision schedule as JSON instead of facets");
    bary->add_option("--seed", bary_seed, "randomize the backtracking order");
    bary->add_option("-o,--out", bary_out, "output file");

    // ---- move -----------------------------------------------------------
    auto* move_cmd = app.add_subcommand("move", "apply one move to a complex");
    std::string move_in, move_out, move_log;
    std::string opt_subdivide, opt_stellar, opt_contract, opt_inverse;
    move_cmd->add_option("complex", move_in, "input facet file")->required();
    auto* g = move_cmd->add_option_group("action", "exactly one move");
    g->add_option("--subdivide", opt_subdivide, "edge a,b");
    g->add_option("--stellar", opt_stellar, "face a,b,...");
    g->add_option("--contract", opt_contract, "edge a,b");
    g->add_option("--inverse", opt_inverse, "v,a,b: remove v, recreate {a,b}");
    g->require_option(1);
    move_cmd->add_option("-o,--out", move_out, "output facet file");
    move_cmd->add_option("--log", move_log, "append the move record (JSON line)");

    // ---- invariants -------------------------------------------------------
    auto* inv = app.add_subcommand("invariants", "f/h/gamma vectors, flagness, missing faces");
    std::string inv_in, inv_out;
    inv->add_option("complex", inv_in, "input facet file")->required();
    inv->add_option("-o,--out", inv_out, "output JSON file");

    // ---- connect-stellar ---------------------------------------------------
    auto* cs = app.add_subcommand(
        "connect-stellar", "edge-subdivision connection between a complex and a stellar subdivision");
    std::string cs_in, cs_face, cs_out;
    std::optional<uint64_t> cs_seed;
    cs->add_option("complex", cs_in, "input facet file")->required();
    cs->add_option("--face", cs_face, "face a,b,... to subdivide stellarly")->required();
    cs->add_option("--seed", cs_seed, "randomize the schedules");
    cs->add_option("-o,--out", cs_out, "output JSON file");

    // ---- flagify ------------------------------------------------------------
    auto* fl = app.add_subcommand("flagify", "make every complex of a move sequence flag");
    std::string fl_in, fl_out;
    fl->add_option("sequence", fl_in, "input sequence JSON")->required();
    fl->add_option("-o,--out", fl_out, "output sequence JSON");

    // ---- explore --------------------------------------------------------------
    auto* ex = app.add_subcommand("explore", "seeded random walk over flag PL-spheres");
    ExplorerConfig cfg;
    std::string ex_out, ex_p = "1/2";
    int ex_walks = 1;
    ex->add_option("--dim", cfg.sphere_dim, "sphere dimension (>= 2)")->required();
    ex->add_option("--steps", cfg.steps, "number of moves")->required();
    ex->add_option("--seed", cfg.seed, "random seed");
    ex->add_option("--max-vertices", cfg.max_vertices, "vertex cap");
    ex->add_option("--p-subdivide", ex_p, "subdivision probability as num/den");
    ex->add_option("--trace", cfg.trace_path, "JSONL trace path");
    ex->add_flag("--snapshot-equalities", cfg.snapshot_all_equalities,
                 "snapshot facets at every gamma2 = 0 event");
    ex->add_option("--walks", ex_walks, "independent walks with seeds seed, seed+1, ...");
    ex->add_option("-o,--out", ex_out, "report JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_oct->parsed()) {
            emit(gen_out, serialize_complex(octahedral_sphere(gen_d)));
        } else if (gen_join->parsed()) {
            emit(gen_out, serialize_complex(join_of_cycles(gen_lengths, gen_allow_short)));
        } else if (gen_simplex->parsed()) {
            emit(gen_out, serialize_complex(simplex_boundary(gen_n)));
        } else if (gen_cycle->parsed()) {
            emit(gen_out, serialize_complex(cycle_complex(gen_cycle_n)));
        } else if (bary->parsed()) {
            Complex c = read_complex_file(bary_in);
            std::optional<Rng> rng;
            if (bary_seed) rng.emplace(*bary_seed);
            BacktrackPlan plan = plan_backtrack(c, rng ? &*rng : nullptr);
            if (bary_emit_sequence) {
                emit(bary_out, plan_to_json(plan).dump(2) + "\n");
            } else {
                emit(bary_out, serialize_complex(apply_plan(plan).result));
            }
        } else if (move_cmd->parsed()) {
            Complex c = read_complex_file(move_in);
            Move m = Move::edge_subdiv(Face{0, 1}, -1);
            if (!opt_subdivide.empty()) {
                m = Move::edge_subdiv(parse_face_list(opt_subdivide), c.max_label() + 1);
            } else if (!opt_stellar.empty()) {
                m = Move::stellar(parse_face_list(opt_stellar), c.max_label() + 1);
            } else if (!opt_contract.empty()) {
                m = Move::contraction(parse_face_list(opt_contract), c.max_label() + 1);
            } else {
                std::vector<VertexId> nums = parse_int_list(opt_inverse);
                if (nums.size() != 3) {
                    throw MalformedInputError("--inverse needs v,a,b");
                }
                m = Move::inverse_edge_subdiv(nums[0], Face{nums[1], nums[2]});
            }
            Complex out = apply_move(c, m);
            emit(move_out, serialize_complex(out));
            if (!move_log.empty()) {
                std::ofstream log(move_log, std::ios::app);
                if (!log) throw Error("cannot open " + move_log);
                log << move_to_json(m).dump() << '\n';
            }
        } else if (inv->parsed()) {
            emit(inv_out, invariants_to_json(read_complex_file(inv_in)).dump(2) + "\n");
        } else if (cs->parsed()) {
            Complex c = read_complex_file(cs_in);
            std::optional<Rng> rng;
            if (cs_seed) rng.emplace(*cs_seed);
            StellarConnection con = connect_stellar(c, parse_face_list(cs_face),
                                                    rng ? &*rng : nullptr);
            Json j;
            j["forward"] = sequence_to_json(con.forward);
            j["backward"] = sequence_to_json(con.backward);
            j["apex"] = con.apex;
            emit(cs_out, j.dump(2) + "\n");
        } else if (fl->parsed()) {
            std::ifstream in(fl_in);
            if (!in) throw MalformedInputError("cannot open " + fl_in);
            Json j = Json::parse(in);
            FlagifyResult res = flagify_sequence(sequence_from_json(j));
            for (const DAlpha& d : res.trace) std::cerr << "d(alpha) " << d.str() << "\n";
            emit(fl_out, sequence_to_json(res.sequence).dump(2) + "\n");
        } else if (ex->parsed()) {
            size_t slash = ex_p.find('/');
            if (slash == std::string::npos) {
                throw MalformedInputError("--p-subdivide expects num/den");
            }
            cfg.p_subdivide_num = std::stoull(ex_p.substr(0, slash));
            cfg.p_subdivide_den = std::stoull(ex_p.substr(slash + 1));

            bool contrary = false;
            Json out;
            if (ex_walks == 1) {
                WalkReport rep = run(cfg);
                contrary = !rep.violations.empty() || !rep.bound_checks.violations.empty() ||
                           !rep.bound_checks.structure_mismatches.empty();
                for (const auto& ev : rep.equality_events) {
                    contrary |= !ev.greedy_reached_octahedral;
                }
                out = walk_report_to_json(rep);
            } else {
                std::vector<WalkReport> reps = run_walks(cfg, ex_walks);
                Json walks = Json::array();
                for (const auto& rep : reps) {
                    contrary |= !rep.violations.empty() || !rep.bound_checks.violations.empty() ||
                                !rep.bound_checks.structure_mismatches.empty();
                    for (const auto& ev : rep.equality_events) {
                        contrary |= !ev.greedy_reached_octahedral;
                    }
                    walks.push_back(walk_report_to_json(rep));
                }
                out["walks"] = std::move(walks);
            }
            emit(ex_out, out.dump(2) + "\n");
            if (contrary) return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

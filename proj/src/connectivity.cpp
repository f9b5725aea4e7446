#include "stellar/connectivity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stellar/barycentric.hpp"

namespace stellar {

// ---------------------------------------------------------------------------
// MoveSequence

void MoveSequence::validate() const {
    if (complexes.empty()) {
        throw MalformedInputError("sequence: needs at least one complex");
    }
    if (moves.size() + 1 != complexes.size()) {
        throw MalformedInputError("sequence: " + std::to_string(moves.size()) + " moves need " +
                                  std::to_string(moves.size() + 1) + " complexes, have " +
                                  std::to_string(complexes.size()));
    }
    for (size_t i = 0; i < moves.size(); ++i) {
        const Move& m = moves[i];
        if (m.kind != MoveKind::EdgeSubdiv && m.kind != MoveKind::InverseEdgeSubdiv) {
            throw MalformedInputError("sequence: move " + std::to_string(i) +
                                      " is not an edge subdivision or its inverse");
        }
        if (apply_move(complexes[i], m) != complexes[i + 1]) {
            throw MalformedInputError("sequence: move " + std::to_string(i) + " (" + m.str() +
                                      ") does not yield the next complex");
        }
    }
}

MoveSequence MoveSequence::reversed() const {
    MoveSequence r;
    r.complexes.assign(complexes.rbegin(), complexes.rend());
    r.moves.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        r.moves.push_back(it->reversed());
    }
    return r;
}

MoveSequence MoveSequence::then(const MoveSequence& other) const {
    if (complexes.empty() || other.complexes.empty() || !(last() == other.first())) {
        throw MalformedInputError("then: sequences do not share an endpoint");
    }
    MoveSequence r = *this;
    r.complexes.insert(r.complexes.end(), other.complexes.begin() + 1, other.complexes.end());
    r.moves.insert(r.moves.end(), other.moves.begin(), other.moves.end());
    return r;
}

void MoveSequence::push(const Move& m) {
    complexes.push_back(apply_move(complexes.back(), m));
    moves.push_back(m);
}

MoveSequence MoveSequence::single(Complex start) {
    MoveSequence s;
    s.complexes.push_back(std::move(start));
    return s;
}

VertexId MoveSequence::max_label() const {
    VertexId m = -1;
    for (const Complex& c : complexes) m = std::max(m, c.max_label());
    return m;
}

// ---------------------------------------------------------------------------
// d-measures

long long d_measure(const Complex& c) {
    long long sum = 0;
    for (const Face& f : c.missing_faces(3)) sum += f.size();
    return sum;
}

DAlpha d_alpha(const MoveSequence& seq) {
    long long max = 0, mult = 0;
    for (const Complex& c : seq.complexes) {
        long long d = d_measure(c);
        if (d > max) {
            max = d;
            mult = 1;
        } else if (d == max && d > 0) {
            mult++;
        }
    }
    if (max == 0) return DAlpha::bottom();
    return {max, mult};
}

std::string DAlpha::str() const {
    if (is_bottom()) return "bottom";
    std::ostringstream os;
    os << '(' << max << ',' << mult << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// connect_stellar

StellarConnection connect_stellar(const Complex& c, const Face& f, Rng* rng) {
    if (!c.has_face(f)) {
        throw NotAFaceError("connect_stellar: " + f.str() + " is not a face of the complex");
    }
    if (f.size() < 2) {
        throw MalformedInputError("connect_stellar: the face needs at least 2 vertices");
    }

    // one fixed label per face of the simplex on F of dimension > 0, so the
    // two schedules land on label-identical terminal complexes
    Complex fbar = full_simplex(f);
    std::map<Face, VertexId> labels;
    VertexId next = c.max_label() + 1;
    for (int k = 1; k <= f.dim(); ++k) {
        for (const Face& g : fbar.faces_of_dim(k)) labels[g] = next++;
    }
    VertexId apex = labels.at(f);

    BacktrackPlan fwd = plan_backtrack(fbar, rng, &labels);
    MoveSequence forward = MoveSequence::single(c);
    for (const PlanStep& s : fwd.steps) forward.push(Move::edge_subdiv(s.edge, s.new_vertex));

    MoveSequence backward = MoveSequence::single(stellar_subdivide(c, f, apex));
    if (f.size() >= 3) {
        BacktrackPlan bwd = plan_backtrack(boundary_of_face(f), rng, &labels);
        for (const PlanStep& s : bwd.steps) backward.push(Move::edge_subdiv(s.edge, s.new_vertex));
    }

    if (forward.last() != backward.last()) {
        throw Error("connect_stellar: terminal complexes differ under the barycenter labels");
    }
    return {std::move(forward), std::move(backward), apex};
}

// ---------------------------------------------------------------------------
// valley replacements

CommutedSegment commute_subdivisions(const Complex& valley, const Face& e1, VertexId v1,
                                     const Face& e, VertexId v) {
    if (e.size() != 2 || e1.size() != 2 || !valley.has_face(e) || !valley.has_face(e1)) {
        throw WrongCaseError("commute: e and e1 must be edges of the valley complex");
    }
    if (e == e1) throw WrongCaseError("commute: the two edges must be distinct");
    Face both = e.united(e1);
    if (both.size() == 3 && valley.has_face(both)) {
        throw WrongCaseError("commute: " + e.str() + " and " + e1.str() +
                             " share the 2-face " + both.str());
    }
    CommutedSegment seg;
    seg.left = edge_subdivide(valley, e1, v1);
    seg.right = edge_subdivide(valley, e, v);
    seg.middle = edge_subdivide(seg.left, e, v);
    seg.first = Move::edge_subdiv(e, v);
    seg.second = Move::inverse_edge_subdiv(v1, e1);
    if (apply_move(seg.middle, seg.second) != seg.right) {
        throw Error("commute: subdivisions at " + e.str() + " and " + e1.str() +
                    " failed to commute");
    }
    return seg;
}

MoveSequence case2_gadget(const Complex& valley, const Face& t, const Face& e1, const Face& e,
                          VertexId p, VertexId w, VertexId x) {
    if (t.size() != 3 || !valley.has_face(t)) {
        throw WrongCaseError("gadget: " + t.str() + " is not a 2-face of the valley complex");
    }
    if (e == e1) throw WrongCaseError("gadget: the two edges of T must be distinct");
    if (e.size() != 2 || e1.size() != 2 || !e.is_subset_of(t) || !e1.is_subset_of(t)) {
        throw WrongCaseError("gadget: e1 and e must be edges of T");
    }
    VertexId a = e1.minus(e)[0];  // outer vertex of e1
    VertexId c = e.minus(e1)[0];  // outer vertex of e

    MoveSequence seq = MoveSequence::single(edge_subdivide(valley, e1, p));
    seq.push(Move::edge_subdiv(e, w));
    seq.push(Move::edge_subdiv(Face{p, c}, x));
    seq.push(Move::inverse_edge_subdiv(x, Face{a, w}));
    seq.push(Move::inverse_edge_subdiv(p, e1));

    // endpoint and reconstruction checks: every intermediate is the valley
    // complex plus edge subdivisions that include e
    Complex right = edge_subdivide(valley, e, w);
    if (seq.last() != right) {
        throw Error("gadget: endpoint differs from subdividing " + e.str());
    }
    if (seq.complexes[3] != edge_subdivide(right, e1, p)) {
        throw Error("gadget: third intermediate is not subdivide(e) + subdivide(e1)");
    }
    return seq;
}

// ---------------------------------------------------------------------------
// flagification

namespace {

Face default_pick_edge(const Complex& valley, const Face& e1, const Face& e2) {
    std::vector<Face> missing = valley.missing_faces(3);  // sorted by (size, lex)
    if (missing.empty()) {
        throw Error("flagify: valley complex has no missing face of size > 2");
    }
    int max_size = 0;
    for (const Face& f : missing) max_size = std::max(max_size, f.size());
    Face chosen;
    for (const Face& f : missing) {
        if (f.size() == max_size) {
            chosen = f;
            break;
        }
    }
    // least edge distinct from e1 and e2; a missing face has >= 3 edges, so
    // this always succeeds
    for (int i = 0; i < chosen.size(); ++i) {
        for (int j = i + 1; j < chosen.size(); ++j) {
            Face edge{chosen[i], chosen[j]};
            if (edge != e1 && edge != e2) return edge;
        }
    }
    return Face{chosen[0], chosen[1]};
}

}  // namespace

FlagifyResult flagify_sequence(const MoveSequence& input, const FlagifyOptions& opts) {
    MoveSequence seq = input;
    seq.validate();
    if (d_measure(seq.first()) != 0 || d_measure(seq.last()) != 0) {
        throw MalformedInputError("flagify: endpoint complexes must be flag");
    }
    std::function<Face(const Complex&, const Face&, const Face&)> pick =
        opts.pick_edge ? opts.pick_edge : default_pick_edge;

    FlagifyResult out;
    out.trace.push_back(d_alpha(seq));
    VertexId next_label = seq.max_label() + 1;

    while (true) {
        DAlpha cur = d_alpha(seq);
        if (cur.is_bottom()) break;

        // least valley index attaining the maximal d
        std::vector<long long> d(seq.complexes.size());
        for (size_t i = 0; i < seq.complexes.size(); ++i) d[i] = d_measure(seq.complexes[i]);
        int valley = -1;
        for (size_t i = 1; i + 1 < seq.complexes.size(); ++i) {
            if (d[i] == cur.max && seq.moves[i - 1].kind == MoveKind::InverseEdgeSubdiv &&
                seq.moves[i].kind == MoveKind::EdgeSubdiv) {
                valley = static_cast<int>(i);
                break;
            }
        }
        if (valley < 0) throw Error("flagify: no valley attains the maximal d");

        const Complex mid = seq.complexes[static_cast<size_t>(valley)];
        const Face e1 = seq.moves[static_cast<size_t>(valley) - 1].recreated_edge;
        const VertexId v1 = seq.moves[static_cast<size_t>(valley) - 1].removed_vertex;
        const Face e2 = seq.moves[static_cast<size_t>(valley)].face;
        const VertexId v2 = seq.moves[static_cast<size_t>(valley)].new_vertex;

        Face e = pick(mid, e1, e2);
        if (e.size() != 2 || !mid.has_face(e)) {
            throw Error("flagify: picked edge " + e.str() + " is not an edge of the valley");
        }
        if (e == e1 && e == e2) {
            // a missing face has >= 3 edges, so a picker can always avoid this
            throw Error("flagify: picked edge coincides with both neighbor subdivisions");
        }

        // Δ' and its subdivision label; degenerate cases reuse the neighbor
        Complex dprime;
        VertexId v;
        if (e == e2) {
            dprime = seq.complexes[static_cast<size_t>(valley) + 1];
            v = v2;
        } else if (e == e1) {
            dprime = seq.complexes[static_cast<size_t>(valley) - 1];
            v = v1;
        } else {
            v = next_label++;
            dprime = edge_subdivide(mid, e, v);
        }

        auto shares_2face = [&](const Face& ea, const Face& eb) {
            Face both = ea.united(eb);
            return both.size() == 3 && mid.has_face(both);
        };

        // left: Δ_{i-1} -> ... -> Δ'
        std::vector<Complex> left_cs;
        std::vector<Move> left_ms;
        if (e != e1) {
            if (shares_2face(e, e1)) {
                MoveSequence g = case2_gadget(mid, e.united(e1), e1, e, v1, v, next_label++);
                left_cs.assign(g.complexes.begin() + 1, g.complexes.end() - 1);
                left_ms = g.moves;
            } else {
                CommutedSegment cs = commute_subdivisions(mid, e1, v1, e, v);
                left_cs = {cs.middle};
                left_ms = {cs.first, cs.second};
            }
        }

        // right: Δ' -> ... -> Δ_{i+1}
        std::vector<Complex> right_cs;
        std::vector<Move> right_ms;
        if (e != e2) {
            if (shares_2face(e, e2)) {
                MoveSequence g =
                    case2_gadget(mid, e.united(e2), e2, e, v2, v, next_label++).reversed();
                right_cs.assign(g.complexes.begin() + 1, g.complexes.end() - 1);
                right_ms = g.moves;
            } else {
                CommutedSegment cs = commute_subdivisions(mid, e2, v2, e, v);
                right_cs = {cs.middle};
                right_ms = {cs.second.reversed(), cs.first.reversed()};
            }
        }

        // splice out the valley: complexes [0..i-1] ++ chain ++ [i+1..]
        std::vector<Complex> nc(seq.complexes.begin(),
                                seq.complexes.begin() + valley);  // up to Δ_{i-1}
        std::vector<Move> nm(seq.moves.begin(), seq.moves.begin() + (valley - 1));
        nc.insert(nc.end(), left_cs.begin(), left_cs.end());
        if (e != e1 && e != e2) nc.push_back(dprime);
        nc.insert(nc.end(), right_cs.begin(), right_cs.end());
        nm.insert(nm.end(), left_ms.begin(), left_ms.end());
        nm.insert(nm.end(), right_ms.begin(), right_ms.end());
        nc.insert(nc.end(), seq.complexes.begin() + valley + 1, seq.complexes.end());
        nm.insert(nm.end(), seq.moves.begin() + valley + 1, seq.moves.end());
        seq.complexes = std::move(nc);
        seq.moves = std::move(nm);
        seq.validate();

        DAlpha next_d = d_alpha(seq);
        if (!(next_d < cur)) {
            throw Error("flagify: d(α) did not strictly decrease (" + cur.str() + " -> " +
                        next_d.str() + ")");
        }
        out.trace.push_back(next_d);
    }

    out.sequence = std::move(seq);
    return out;
}

}  // namespace stellar

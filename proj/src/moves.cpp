#include "stellar/moves.hpp"

#include <algorithm>
#include <sstream>

namespace stellar {

Move Move::stellar(Face f, VertexId v) {
    Move m;
    m.kind = MoveKind::StellarSubdiv;
    m.face = std::move(f);
    m.new_vertex = v;
    return m;
}

Move Move::edge_subdiv(Face e, VertexId v) {
    Move m;
    m.kind = MoveKind::EdgeSubdiv;
    m.face = std::move(e);
    m.new_vertex = v;
    return m;
}

Move Move::inverse_edge_subdiv(VertexId removed, Face edge) {
    Move m;
    m.kind = MoveKind::InverseEdgeSubdiv;
    m.removed_vertex = removed;
    m.recreated_edge = std::move(edge);
    return m;
}

Move Move::contraction(Face e, VertexId v) {
    Move m;
    m.kind = MoveKind::Contract;
    m.face = std::move(e);
    m.new_vertex = v;
    return m;
}

Move Move::reversed() const {
    switch (kind) {
        case MoveKind::EdgeSubdiv:
            return inverse_edge_subdiv(new_vertex, face);
        case MoveKind::InverseEdgeSubdiv:
            return edge_subdiv(recreated_edge, removed_vertex);
        default:
            throw Error("reversed: only edge subdivisions and their inverses reverse");
    }
}

std::string Move::str() const {
    std::ostringstream os;
    switch (kind) {
        case MoveKind::StellarSubdiv:
            os << "stellar " << face.str() << " -> " << new_vertex;
            break;
        case MoveKind::EdgeSubdiv:
            os << "subdivide " << face.str() << " -> " << new_vertex;
            break;
        case MoveKind::InverseEdgeSubdiv:
            os << "remove " << removed_vertex << " recreating " << recreated_edge.str();
            break;
        case MoveKind::Contract:
            os << "contract " << face.str() << " -> " << new_vertex;
            break;
    }
    return os.str();
}

Complex stellar_subdivide(const Complex& c, const Face& f, VertexId v) {
    if (f.empty()) throw NotAFaceError("stellar: cannot subdivide the empty face");
    if (!c.has_face(f)) {
        throw NotAFaceError("stellar: " + f.str() + " is not a face of the complex");
    }
    if (v < 0) throw MalformedInputError("stellar: negative new vertex label");
    if (c.has_vertex(v)) {
        throw LabelCollisionError("stellar: new vertex " + std::to_string(v) +
                                  " is already present");
    }
    std::vector<Face> out;
    out.reserve(c.facets().size() + 4);
    for (const Face& g : c.facets()) {
        if (!f.is_subset_of(g)) {
            out.push_back(g);
        } else {
            // facets of {v} * ∂F * lk(F) meeting this facet: (G \ {x}) ∪ {v}
            for (VertexId x : f) out.push_back(g.without(x).with(v));
        }
    }
    return Complex::from_facets(std::move(out));
}

Complex edge_subdivide(const Complex& c, const Face& e, VertexId v) {
    if (e.size() != 2) {
        throw NotAFaceError("edge subdivision: " + e.str() + " is not an edge");
    }
    return stellar_subdivide(c, e, v);
}

namespace detail {

std::optional<std::vector<Face>> try_inverse_split(const Complex& c, VertexId v, VertexId a,
                                                   VertexId b, std::string* why) {
    auto fail = [&](const std::string& reason) -> std::optional<std::vector<Face>> {
        if (why) *why = reason;
        return std::nullopt;
    };
    if (a == b || v == a || v == b) return fail("vertices v, a, b must be distinct");
    if (!c.has_vertex(v)) return fail("vertex " + std::to_string(v) + " is not in the complex");
    if (!c.has_vertex(a) || !c.has_vertex(b)) {
        return fail("endpoints of the recreated edge must be vertices of the complex");
    }
    if (c.has_edge(a, b)) {
        return fail("{" + std::to_string(a) + "," + std::to_string(b) +
                    "} is already an edge");
    }
    Complex lk = c.link(Face{v});
    std::vector<Face> from_a, from_b;
    for (const Face& g : lk.facets()) {
        bool has_a = g.contains(a), has_b = g.contains(b);
        if (has_a == has_b) {
            return fail("link facet " + g.str() + " contains " +
                        (has_a ? "both of" : "neither of") + " a and b");
        }
        if (has_a) {
            from_a.push_back(g.without(a));
        } else {
            from_b.push_back(g.without(b));
        }
    }
    std::sort(from_a.begin(), from_a.end());
    std::sort(from_b.begin(), from_b.end());
    if (from_a != from_b) {
        return fail("deleting a and deleting b from lk(v) give different complexes");
    }
    return from_a;
}

}  // namespace detail

Complex inverse_edge_subdivide(const Complex& c, VertexId v, VertexId a, VertexId b) {
    std::string why;
    auto split = detail::try_inverse_split(c, v, a, b, &why);
    if (!split) throw NotInvertibleError("inverse edge subdivision: " + why);
    std::vector<Face> out;
    for (const Face& g : c.facets()) {
        if (!g.contains(v)) out.push_back(g);
    }
    Face ab{a, b};
    for (const Face& l : *split) out.push_back(ab.united(l));
    return Complex::from_facets(std::move(out));
}

Complex contract_edge(const Complex& c, VertexId a, VertexId b, VertexId v) {
    Face ab{a, b};
    if (!c.has_face(ab)) {
        throw NotAFaceError("contract: " + ab.str() + " is not an edge of the complex");
    }
    if (c.has_vertex(v)) {
        throw LabelCollisionError("contract: new vertex " + std::to_string(v) +
                                  " is already present");
    }
    std::vector<Face> out;
    out.reserve(c.facets().size());
    for (const Face& g : c.facets()) {
        bool has_a = g.contains(a), has_b = g.contains(b);
        if (!has_a && !has_b) {
            out.push_back(g);
        } else if (has_a && has_b) {
            out.push_back(g.without(a).without(b).with(v));
        } else {
            out.push_back(g.without(has_a ? a : b).with(v));
        }
    }
    return Complex::from_facets(std::move(out));
}

bool satisfies_link_condition(const Complex& c, VertexId a, VertexId b) {
    Face ab{a, b};
    if (!c.has_face(ab)) {
        throw NotAFaceError("link condition: " + ab.str() + " is not an edge");
    }
    Complex lk_ab = c.link(ab);
    Complex lk_a = c.link(Face{a});
    Complex lk_b = c.link(Face{b});
    std::vector<Face> meet;
    meet.reserve(lk_a.facets().size() * lk_b.facets().size());
    for (const Face& f : lk_a.facets()) {
        for (const Face& g : lk_b.facets()) {
            meet.push_back(f.intersect(g));
        }
    }
    return Complex::from_facets(std::move(meet)) == lk_ab;
}

bool is_admissible(const Complex& c, VertexId a, VertexId b) {
    if (!c.has_edge(a, b)) {
        throw NotAFaceError("admissibility: {" + std::to_string(a) + "," +
                            std::to_string(b) + "} is not an edge");
    }
    std::vector<VertexId> na = c.neighbors(a);
    std::vector<VertexId> nb = c.neighbors(b);
    std::vector<VertexId> xs, ys;  // x ~ b only, y ~ a only
    std::set_difference(nb.begin(), nb.end(), na.begin(), na.end(), std::back_inserter(xs));
    std::set_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(ys));
    for (VertexId x : xs) {
        if (x == a) continue;
        for (VertexId y : ys) {
            if (y == b) continue;
            if (c.has_edge(x, y)) return false;  // induced 4-cycle a-b-x-y
        }
    }
    return true;
}

MoveCatalog list_moves(const Complex& c) {
    MoveCatalog cat;
    cat.subdividable_edges = c.edge_list();
    for (const Face& e : cat.subdividable_edges) {
        if (is_admissible(c, e[0], e[1])) cat.admissible_edges.push_back(e);
    }
    for (VertexId v : c.vertices()) {
        std::vector<VertexId> lk_verts = c.neighbors(v);
        for (size_t i = 0; i < lk_verts.size(); ++i) {
            for (size_t j = i + 1; j < lk_verts.size(); ++j) {
                VertexId a = lk_verts[i], b = lk_verts[j];
                if (c.has_edge(a, b)) continue;
                if (detail::try_inverse_split(c, v, a, b, nullptr)) {
                    cat.invertible.emplace_back(v, a, b);
                }
            }
        }
    }
    return cat;
}

Complex apply_move(const Complex& c, const Move& m) {
    switch (m.kind) {
        case MoveKind::StellarSubdiv:
            return stellar_subdivide(c, m.face, m.new_vertex);
        case MoveKind::EdgeSubdiv:
            return edge_subdivide(c, m.face, m.new_vertex);
        case MoveKind::InverseEdgeSubdiv:
            return inverse_edge_subdivide(c, m.removed_vertex, m.recreated_edge[0],
                                          m.recreated_edge[1]);
        case MoveKind::Contract:
            return contract_edge(c, m.face[0], m.face[1], m.new_vertex);
    }
    throw Error("apply_move: unknown move kind");
}

}  // namespace stellar

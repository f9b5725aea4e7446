#ifndef STELLAR_MOVES_HPP
#define STELLAR_MOVES_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "stellar/core.hpp"

namespace stellar {

enum class MoveKind { StellarSubdiv, EdgeSubdiv, InverseEdgeSubdiv, Contract };

/// One atomic transition between complexes, with full parameters.
struct Move {
    MoveKind kind;
    Face face;                      // F / e / {a,b} parameter of the move
    VertexId new_vertex = -1;       // subdivisions and contractions
    VertexId removed_vertex = -1;   // inverse edge subdivision
    Face recreated_edge;            // inverse edge subdivision

    static Move stellar(Face f, VertexId v);
    static Move edge_subdiv(Face e, VertexId v);
    static Move inverse_edge_subdiv(VertexId removed, Face edge);
    static Move contraction(Face e, VertexId v);

    /// Inverse transition. Defined for EdgeSubdiv and InverseEdgeSubdiv only.
    Move reversed() const;

    friend bool operator==(const Move& a, const Move& b) {
        return a.kind == b.kind && a.face == b.face && a.new_vertex == b.new_vertex &&
               a.removed_vertex == b.removed_vertex && a.recreated_edge == b.recreated_edge;
    }

    std::string str() const;
};

/// stellar_Δ(F) = {T ∈ Δ : F ∩ T ≠ F} ∪ ({v} * ∂F * lk_Δ(F)).
Complex stellar_subdivide(const Complex& c, const Face& f, VertexId v);

/// Stellar subdivision at a 2-element face.
Complex edge_subdivide(const Complex& c, const Face& e, VertexId v);

/// Removes vertex v whose link splits as ({a} ⊔ {b}) * L and restores the
/// edge {a,b}: star(v) is replaced by {a,b} * L. Exact inverse of
/// edge_subdivide(·, {a,b}, v).
Complex inverse_edge_subdivide(const Complex& c, VertexId v, VertexId a, VertexId b);

/// Contracts the edge {a,b} to a fresh vertex v:
/// {T : a,b ∉ T} ∪ {T ∪ {v} : T ∩ {a,b} = ∅, T ∪ {a} ∈ Δ or T ∪ {b} ∈ Δ}.
Complex contract_edge(const Complex& c, VertexId a, VertexId b, VertexId v);

/// lk({a,b}) == lk(a) ∩ lk(b), compared as face sets.
bool satisfies_link_condition(const Complex& c, VertexId a, VertexId b);

/// True iff the skeleton edge {a,b} lies in no induced 4-cycle.
bool is_admissible(const Complex& c, VertexId a, VertexId b);

/// (v, a, b) with a < b; removing v recreates {a,b}.
using InvertibleTriple = std::tuple<VertexId, VertexId, VertexId>;

struct MoveCatalog {
    std::vector<Face> subdividable_edges;    // every edge
    std::vector<Face> admissible_edges;      // edges passing is_admissible
    std::vector<InvertibleTriple> invertible;
};

MoveCatalog list_moves(const Complex& c);

/// Applies one move; kind dispatch over the four operations above.
Complex apply_move(const Complex& c, const Move& m);

namespace detail {
/// Facets of L when lk(v) = ({a} ⊔ {b}) * L, else nullopt; `why` (optional)
/// receives the failing condition.
std::optional<std::vector<Face>> try_inverse_split(const Complex& c, VertexId v, VertexId a,
                                                   VertexId b, std::string* why);
}  // namespace detail

}  // namespace stellar

#endif  // STELLAR_MOVES_HPP

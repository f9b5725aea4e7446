#ifndef STELLAR_BARYCENTRIC_HPP
#define STELLAR_BARYCENTRIC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stellar/core.hpp"
#include "stellar/rng.hpp"

namespace stellar {

/// br(Δ) with its face ↔ vertex dictionary. Vertices of br(Δ) are the
/// nonempty faces of Δ; singleton faces keep their vertex label, higher
/// faces get fresh labels in (size, lex) order.
struct BarycentricSubdivision {
    Complex complex;
    std::vector<std::pair<VertexId, Face>> vertex_to_face;  // sorted by vertex

    const Face& face_of(VertexId v) const;
    VertexId vertex_of(const Face& f) const;
};

BarycentricSubdivision barycentric(const Complex& c);

/// One edge subdivision of a backtracking schedule: `edge` is split by
/// `new_vertex`, which takes the barycenter of `original_face`.
struct PlanStep {
    Face edge;
    VertexId new_vertex;
    Face original_face;

    friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

/// The full schedule turning `source` into its barycentric subdivision by
/// edge subdivisions only: one step per face of dimension > 0.
struct BacktrackPlan {
    Complex source;
    std::vector<PlanStep> steps;
};

/// Depth-first walk on the face poset. Descending from a face G (with
/// barycenter vertex u_G; u_G = G's vertex when |G| = 1) into a coface
/// G ∪ {w} subdivides the edge {u_G, w}. Children are taken in ascending
/// label order, or shuffled when an rng is supplied. `face_labels`, when
/// given, fixes the fresh label used for each face.
BacktrackPlan plan_backtrack(const Complex& c, Rng* rng = nullptr,
                             const std::map<Face, VertexId>* face_labels = nullptr);

struct AppliedPlan {
    Complex result;
    /// Every vertex of `result`: source vertices map to their singleton
    /// face, new vertices to the face whose barycenter they take.
    std::vector<std::pair<VertexId, Face>> vertex_to_face;
};

/// Performs the subdivisions in order; InvalidPlanError (with step index) if
/// some step's edge is absent or its label collides.
AppliedPlan apply_plan(const BacktrackPlan& plan);

struct PlanDiagnostics {
    bool valid = true;
    std::string violation;  // names the first violated condition

    explicit operator bool() const { return valid; }
};

/// Checks all plan invariants: one step per face of dimension > 0; every
/// step's edge present when reached; the order condition on incomparable
/// subfaces; and, with source vertices at standard basis points, exact
/// rational containment of each barycenter in the open segment it subdivides.
PlanDiagnostics verify_plan(const BacktrackPlan& plan);

}  // namespace stellar

#endif  // STELLAR_BARYCENTRIC_HPP

#ifndef STELLAR_CONNECTIVITY_HPP
#define STELLAR_CONNECTIVITY_HPP

#include <functional>
#include <string>
#include <vector>

#include "stellar/core.hpp"
#include "stellar/moves.hpp"
#include "stellar/rng.hpp"

namespace stellar {

/// Complexes linked by edge subdivisions and inverse edge subdivisions.
/// complexes[i+1] = apply_move(complexes[i], moves[i]).
struct MoveSequence {
    std::vector<Complex> complexes;
    std::vector<Move> moves;

    int length() const { return static_cast<int>(moves.size()); }
    const Complex& first() const { return complexes.front(); }
    const Complex& last() const { return complexes.back(); }

    /// Throws MalformedInputError when the shape is wrong, a move kind other
    /// than edge subdivision / inverse appears, or a move does not map
    /// complexes[i] to complexes[i+1] exactly.
    void validate() const;

    /// Walk the sequence backwards (each move reversed).
    MoveSequence reversed() const;

    /// Concatenation; requires last() == other.first().
    MoveSequence then(const MoveSequence& other) const;

    /// Apply a move to the last complex and append the result.
    void push(const Move& m);

    static MoveSequence single(Complex start);

    VertexId max_label() const;
};

/// d(Δ) = Σ |F| over missing faces of size > 2; zero exactly on flag complexes.
long long d_measure(const Complex& c);

/// d(α) = (max_i d(Δ_i), #{i : d(Δ_i) = max}), or bottom when the maximum is
/// zero. Ordered lexicographically with bottom minimal.
struct DAlpha {
    long long max = 0;
    long long mult = 0;  // meaningful only when max > 0

    bool is_bottom() const { return max == 0; }
    static DAlpha bottom() { return {}; }

    friend bool operator==(const DAlpha& a, const DAlpha& b) {
        if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
        return a.max == b.max && a.mult == b.mult;
    }
    friend bool operator<(const DAlpha& a, const DAlpha& b) {
        if (a.is_bottom()) return !b.is_bottom();
        if (b.is_bottom()) return false;
        if (a.max != b.max) return a.max < b.max;
        return a.mult < b.mult;
    }

    std::string str() const;
};

DAlpha d_alpha(const MoveSequence& seq);

/// Edge-subdivision connection between Δ and stellar_Δ(F): `forward` runs a
/// backtracking schedule for the simplex on F inside Δ, `backward` runs one
/// for ∂F inside the stellar subdivision. New labels are fixed per face of F,
/// so the two terminal complexes are equal (the barycenter identification is
/// the identity), reached by subdivisions only from both sides.
struct StellarConnection {
    MoveSequence forward;
    MoveSequence backward;
    VertexId apex;  // the stellar vertex, label of the face F itself
};

StellarConnection connect_stellar(const Complex& c, const Face& f, Rng* rng = nullptr);

/// Case 1 of the valley replacement: e and e1 lie in no common 2-face of
/// `valley`, so the subdivisions commute. Given
///   left = subdivide(valley, e1, v1)  and  right = subdivide(valley, e, v),
/// returns the segment left -> middle -> right where middle carries both
/// subdivisions; moves are subdivide-e then inverse-v1.
struct CommutedSegment {
    Complex left, middle, right;
    Move first, second;
};

CommutedSegment commute_subdivisions(const Complex& valley, const Face& e1, VertexId v1,
                                     const Face& e, VertexId v);

/// Case 2: e1 and e are distinct edges of the 2-face T of `valley`.
/// Returns the 5-complex sequence from subdivide(valley, e1, p) to
/// subdivide(valley, e, w): subdivide e at w, subdivide {p, c} at x, remove x
/// recreating {a, w}, remove p recreating e1 (a = e1 \ e, c = e \ e1).
/// Every intermediate is verified to be valley plus edge subdivisions whose
/// edge set includes e.
MoveSequence case2_gadget(const Complex& valley, const Face& t, const Face& e1, const Face& e,
                          VertexId p, VertexId w, VertexId x);

struct FlagifyOptions {
    /// Chooses the edge e inside a missing face of the valley complex.
    /// Default: lexicographically least missing face of maximal size, then
    /// its least edge distinct from e1 and e2 when possible.
    std::function<Face(const Complex& valley, const Face& e1, const Face& e2)> pick_edge;
};

struct FlagifyResult {
    MoveSequence sequence;
    std::vector<DAlpha> trace;  // d(α) before each iteration and after the last
};

/// Valley-replacement loop: repeatedly pick a valley of maximal d, insert the
/// subdivision at an edge inside a missing face, and resolve both sides by
/// Case 1 / Case 2 until every complex is flag. Endpoints (which must be
/// flag) are preserved exactly; d(α) strictly decreases each iteration.
FlagifyResult flagify_sequence(const MoveSequence& seq, const FlagifyOptions& opts = {});

}  // namespace stellar

#endif  // STELLAR_CONNECTIVITY_HPP

#ifndef STELLAR_INVARIANTS_HPP
#define STELLAR_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "stellar/core.hpp"

namespace stellar {

/// Face-count vector: entries[s] = f_{s-1} = number of faces with s vertices,
/// entries[0] = f_{-1} = 1. For a (d-1)-dimensional complex there are d+1
/// entries.
struct FVector {
    std::vector<long long> entries;

    int d() const { return static_cast<int>(entries.size()) - 1; }
    /// f_i with i in [-1, d-1].
    long long f(int i) const { return entries[static_cast<size_t>(i + 1)]; }

    friend bool operator==(const FVector& a, const FVector& b) = default;
};

/// Exact face counts by enumeration.
FVector f_vector(const Complex& c);

/// h_k = Σ_{j=0..k} (-1)^{k-j} C(d-j, k-j) f_{j-1}, k = 0..d.
std::vector<long long> h_vector(const FVector& f);

/// The unique γ with Σ h_i t^i = Σ_{i ≤ d/2} γ_i t^i (1+t)^{d-2i}, by
/// successive elimination. Requires h_i = h_{d-i} (throws NotASphereError).
std::vector<long long> gamma_vector(const std::vector<long long>& h);

struct ClosedFormInvariants {
    long long g2;      // f1 - d f0 + C(d+1,2)
    long long gamma1;  // f0 - 2d
    long long gamma2;  // f1 - (2d-3) f0 + 2d(d-2)
};

/// Requires a pure complex (facets of equal dimension d-1).
ClosedFormInvariants closed_form_invariants(const Complex& c);

/// Number of i-cliques of the Turán graph T(r, n): the elementary symmetric
/// polynomial e_i of the part sizes of the complete r-partite graph with
/// parts as equal as possible. Zero when i > r.
long long turan_count(int r, int n, int i);

struct GammaReport {
    FVector f;
    std::vector<long long> h;
    std::optional<std::vector<long long>> gamma;     // when h is symmetric
    std::optional<ClosedFormInvariants> closed_form; // when the complex is pure
    int sphere_dim;                                  // d - 1
};

GammaReport gamma_report(const Complex& c);

struct BoundEntry {
    int i;
    long long gamma_i;
    long long bound;
    bool equality;
};

struct ConjectureBoundsReport {
    int d = 0;
    long long n = 0;
    std::vector<BoundEntry> entries;        // i = 2 .. floor(d/2)
    bool in_conjecture_scope = false;       // the equality analysis needs d even
    bool is_join_of_near_equal_cycles = false;
    std::vector<int> cycle_lengths;         // sorted; set when Δ is a join of cycles
};

/// γ_i versus the Turán bound f_{i-1}(⌊d/2⌋, n-2d), plus the structural test
/// "join of ⌊d/2⌋ cycles of near-equal length" via join-factor detection on
/// the skeleton.
ConjectureBoundsReport conjecture_bounds(const Complex& c);

/// The cycle lengths of a join-of-cycles decomposition of a flag complex, if
/// one exists (C4 factors are reassembled from pairs of S0 join factors).
std::optional<std::vector<int>> join_of_cycles_decomposition(const Complex& c);

}  // namespace stellar

#endif  // STELLAR_INVARIANTS_HPP

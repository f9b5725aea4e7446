#ifndef STELLAR_GENERATORS_HPP
#define STELLAR_GENERATORS_HPP

#include <vector>

#include "stellar/core.hpp"

namespace stellar {

/// Boundary of the d-dimensional cross polytope: vertices {1..d} and their
/// antipodes {d+1..2d}; facets pick one vertex from each antipodal pair.
Complex octahedral_sphere(int d);

/// Boundary of the (n-1)-simplex on vertices {1..n}.
Complex simplex_boundary(int n);

/// The n-cycle 1-2-...-n-1 as a 1-dimensional complex.
Complex cycle_complex(int n);

/// Iterated join of cycles with disjoint consecutive labels. Lengths below 4
/// break flagness and are rejected unless allow_short is set.
Complex join_of_cycles(const std::vector<int>& lengths, bool allow_short = false);

/// Structural octahedral-sphere recognition: every vertex non-adjacent to
/// exactly one other vertex and the complex is flag.
bool is_octahedral(const Complex& c);

}  // namespace stellar

#endif  // STELLAR_GENERATORS_HPP

#ifndef STELLAR_ISOMORPHISM_HPP
#define STELLAR_ISOMORPHISM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stellar/core.hpp"

namespace stellar {

/// Exact combinatorial isomorphism for desk-scale complexes: a vertex
/// bijection carrying the facet set of `a` onto the facet set of `b`, if one
/// exists. Backtracking over color classes refined from degrees, facet-size
/// histograms and iterated neighborhood colors.
std::optional<std::vector<std::pair<VertexId, VertexId>>> find_isomorphism(const Complex& a,
                                                                           const Complex& b);

inline bool are_isomorphic(const Complex& a, const Complex& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace stellar

#endif  // STELLAR_ISOMORPHISM_HPP

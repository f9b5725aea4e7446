#include "stellar/generators.hpp"

namespace stellar {

Complex octahedral_sphere(int d) {
    if (d < 1) throw MalformedInputError("octahedral_sphere: d must be >= 1");
    std::vector<Face> facets;
    facets.reserve(1u << d);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<VertexId> vs;
        vs.reserve(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) {
            vs.push_back((mask >> i) & 1u ? i + 1 + d : i + 1);
        }
        facets.push_back(Face::of(std::move(vs)));
    }
    return Complex::from_facets(std::move(facets));
}

Complex simplex_boundary(int n) {
    if (n < 2) throw MalformedInputError("simplex_boundary: n must be >= 2");
    std::vector<VertexId> vs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<size_t>(i)] = i + 1;
    return boundary_of_face(Face::from_sorted(std::move(vs)));
}

Complex cycle_complex(int n) {
    if (n < 3) throw MalformedInputError("cycle_complex: n must be >= 3");
    std::vector<Face> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 1; i < n; ++i) edges.push_back(Face{i, i + 1});
    edges.push_back(Face{1, n});
    return Complex::from_facets(std::move(edges));
}

Complex join_of_cycles(const std::vector<int>& lengths, bool allow_short) {
    if (lengths.empty()) throw MalformedInputError("join_of_cycles: no cycle lengths given");
    Complex out;
    int offset = 0;
    bool first = true;
    for (int len : lengths) {
        if (len < 4 && !allow_short) {
            throw MalformedInputError("join_of_cycles: cycle length " + std::to_string(len) +
                                      " breaks flagness (pass allow_short to override)");
        }
        Complex cyc = cycle_complex(len);
        if (offset > 0) {
            std::vector<std::pair<VertexId, VertexId>> shift;
            for (VertexId v : cyc.vertices()) shift.emplace_back(v, v + offset);
            cyc = relabeled(cyc, shift);
        }
        out = first ? cyc : join(out, cyc);
        first = false;
        offset += len;
    }
    return out;
}

bool is_octahedral(const Complex& c) {
    if (c.is_empty() || c.is_void()) return false;
    const int n = c.num_vertices();
    if (n < 2) return false;
    for (VertexId v : c.vertices()) {
        if (c.degree(v) != n - 2) return false;  // exactly one non-neighbor
    }
    return c.is_flag();
}

}  // namespace stellar

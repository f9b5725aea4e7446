#include "stellar/barycentric.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <set>

#include "stellar/moves.hpp"

namespace stellar {

const Face& BarycentricSubdivision::face_of(VertexId v) const {
    auto it = std::lower_bound(vertex_to_face.begin(), vertex_to_face.end(), v,
                               [](const auto& p, VertexId x) { return p.first < x; });
    if (it == vertex_to_face.end() || it->first != v) {
        throw MalformedInputError("face_of: unknown barycentric vertex " + std::to_string(v));
    }
    return it->second;
}

VertexId BarycentricSubdivision::vertex_of(const Face& f) const {
    for (const auto& [v, face] : vertex_to_face) {
        if (face == f) return v;
    }
    throw NotAFaceError("vertex_of: " + f.str() + " is not a face of the source");
}

BarycentricSubdivision barycentric(const Complex& c) {
    if (c.is_empty() || c.is_void()) {
        throw MalformedInputError("barycentric subdivision needs a non-empty complex");
    }
    BarycentricSubdivision out;
    std::map<Face, VertexId> label;
    for (VertexId v : c.vertices()) label[Face{v}] = v;
    VertexId next = c.max_label() + 1;
    for (int k = 1; k <= c.dim(); ++k) {
        for (const Face& f : c.faces_of_dim(k)) label[f] = next++;
    }

    // facets of br = maximal chains = orderings of the vertices of a facet
    std::vector<Face> br_facets;
    for (const Face& g : c.facets()) {
        std::vector<VertexId> perm = g.verts();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<VertexId> chain_vertices;
            std::vector<VertexId> prefix;
            for (VertexId v : perm) {
                prefix.push_back(v);
                std::vector<VertexId> sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain_vertices.push_back(label.at(Face::from_sorted(sorted)));
            }
            br_facets.push_back(Face::of(std::move(chain_vertices)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.complex = Complex::from_facets(std::move(br_facets));
    for (const auto& [f, v] : label) out.vertex_to_face.emplace_back(v, f);
    std::sort(out.vertex_to_face.begin(), out.vertex_to_face.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

BacktrackPlan plan_backtrack(const Complex& c, Rng* rng,
                             const std::map<Face, VertexId>* face_labels) {
    if (c.is_empty() || c.is_void()) {
        throw MalformedInputError("plan_backtrack needs a non-empty complex");
    }
    BacktrackPlan plan;
    plan.source = c;

    std::set<Face> visited;
    std::map<Face, VertexId> barycenter_vertex;
    VertexId next = c.max_label() + 1;

    auto visit = [&](auto&& self, const Face& g) -> void {
        // cofaces g ∪ {w}: w runs over common neighbors of g
        std::vector<VertexId> ws = common_neighbors_of_face(c, g);
        if (rng) {
            rng->shuffle(ws);
        }
        for (VertexId w : ws) {
            Face h = g.with(w);
            if (visited.count(h) || !c.has_face(h)) continue;
            visited.insert(h);
            VertexId u;
            if (face_labels) {
                u = face_labels->at(h);
            } else {
                u = next++;
            }
            plan.steps.push_back({Face{barycenter_vertex.at(g), w}, u, h});
            barycenter_vertex[h] = u;
            self(self, h);
        }
    };

    std::vector<VertexId> roots = c.vertices();
    if (rng) rng->shuffle(roots);
    for (VertexId r : roots) {
        Face root{r};
        barycenter_vertex[root] = r;
        visit(visit, root);
    }
    return plan;
}

AppliedPlan apply_plan(const BacktrackPlan& plan) {
    AppliedPlan out;
    out.result = plan.source;
    for (VertexId v : plan.source.vertices()) {
        out.vertex_to_face.emplace_back(v, Face{v});
    }
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        const PlanStep& s = plan.steps[i];
        try {
            out.result = edge_subdivide(out.result, s.edge, s.new_vertex);
        } catch (const Error& e) {
            throw InvalidPlanError(static_cast<int>(i), e.what());
        }
        out.vertex_to_face.emplace_back(s.new_vertex, s.original_face);
    }
    std::sort(out.vertex_to_face.begin(), out.vertex_to_face.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
}

namespace {

using Rational = boost::rational<long long>;

}  // namespace

PlanDiagnostics verify_plan(const BacktrackPlan& plan) {
    auto fail = [](std::string what) {
        PlanDiagnostics d;
        d.valid = false;
        d.violation = std::move(what);
        return d;
    };
    const Complex& src = plan.source;
    if (src.is_empty() || src.is_void()) return fail("source complex is empty");

    // one step per face of dimension > 0, each exactly once
    std::set<Face> expected;
    for (int k = 1; k <= src.dim(); ++k) {
        for (const Face& f : src.faces_of_dim(k)) expected.insert(f);
    }
    std::set<Face> seen;
    for (const PlanStep& s : plan.steps) {
        if (!expected.count(s.original_face)) {
            return fail("step face " + s.original_face.str() +
                        " is not a face of the source of dimension > 0");
        }
        if (!seen.insert(s.original_face).second) {
            return fail("face " + s.original_face.str() + " barycentered twice");
        }
    }
    if (seen.size() != expected.size()) {
        return fail("plan covers " + std::to_string(seen.size()) + " of " +
                    std::to_string(expected.size()) + " faces of dimension > 0");
    }

    // order condition (ii): incomparable F1, F2 ⊆ F3 never both precede F3
    std::map<Face, size_t> pos;
    for (size_t i = 0; i < plan.steps.size(); ++i) pos[plan.steps[i].original_face] = i;
    for (const Face& f3 : expected) {
        if (f3.size() < 3) continue;
        std::vector<Face> subs;
        const auto& vs = f3.verts();
        for (uint64_t mask = 1; mask + 1 < (1ull << vs.size()); ++mask) {
            if (__builtin_popcountll(mask) < 2) continue;
            std::vector<VertexId> sub;
            for (size_t i = 0; i < vs.size(); ++i) {
                if ((mask >> i) & 1) sub.push_back(vs[i]);
            }
            subs.push_back(Face::from_sorted(std::move(sub)));
        }
        size_t p3 = pos.at(f3);
        for (size_t i = 0; i < subs.size(); ++i) {
            for (size_t j = i + 1; j < subs.size(); ++j) {
                const Face& f1 = subs[i];
                const Face& f2 = subs[j];
                if (f1.is_subset_of(f2) || f2.is_subset_of(f1)) continue;
                if (p3 > pos.at(f1) && p3 > pos.at(f2)) {
                    return fail("order condition: vertex of " + f3.str() +
                                " appears after those of incomparable subfaces " + f1.str() +
                                " and " + f2.str());
                }
            }
        }
    }

    // geometric condition (i): with source vertices at standard basis points,
    // each barycenter must lie strictly inside the edge it subdivides
    const auto& verts = src.vertices();
    const size_t n = verts.size();
    std::map<VertexId, std::vector<Rational>> position;
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = Rational(1);
        position[verts[i]] = std::move(e);
    }
    Complex current = src;
    for (size_t k = 0; k < plan.steps.size(); ++k) {
        const PlanStep& s = plan.steps[k];
        if (s.edge.size() != 2 || !current.has_face(s.edge)) {
            return fail("step " + std::to_string(k) + ": edge " + s.edge.str() +
                        " is not an edge of the current complex");
        }
        if (current.has_vertex(s.new_vertex)) {
            return fail("step " + std::to_string(k) + ": vertex " +
                        std::to_string(s.new_vertex) + " is not fresh");
        }
        std::vector<Rational> bary(n, Rational(0));
        for (VertexId v : s.original_face) {
            const auto& pv = position.at(v);
            for (size_t i = 0; i < n; ++i) bary[i] += pv[i];
        }
        for (size_t i = 0; i < n; ++i) bary[i] /= s.original_face.size();

        const auto& p = position.at(s.edge[0]);
        const auto& q = position.at(s.edge[1]);
        // bary = (1-t) p + t q with 0 < t < 1, checked exactly
        bool have_t = false;
        Rational t(0);
        bool contained = true;
        for (size_t i = 0; i < n; ++i) {
            Rational dir = q[i] - p[i];
            Rational off = bary[i] - p[i];
            if (dir == Rational(0)) {
                if (off != Rational(0)) {
                    contained = false;
                    break;
                }
            } else if (!have_t) {
                t = off / dir;
                have_t = true;
            } else if (off != t * dir) {
                contained = false;
                break;
            }
        }
        if (!contained || !have_t || t <= Rational(0) || t >= Rational(1)) {
            return fail("step " + std::to_string(k) + ": barycenter of " +
                        s.original_face.str() + " does not lie inside edge " + s.edge.str());
        }
        position[s.new_vertex] = std::move(bary);
        current = edge_subdivide(current, s.edge, s.new_vertex);
    }
    return PlanDiagnostics{};
}

}  // namespace stellar

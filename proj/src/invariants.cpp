#include "stellar/invariants.hpp"

#include <algorithm>
#include <map>

namespace stellar {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

FVector f_vector(const Complex& c) {
    FVector f;
    f.entries = c.face_counts();
    if (f.entries.empty()) f.entries = {1};  // empty complex: f_{-1} only? keep the 1
    return f;
}

std::vector<long long> h_vector(const FVector& f) {
    const int d = f.d();
    std::vector<long long> h(static_cast<size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long sum = 0;
        for (int j = 0; j <= k; ++j) {
            long long term = binom(d - j, k - j) * f.f(j - 1);
            sum += ((k - j) % 2 == 0) ? term : -term;
        }
        h[static_cast<size_t>(k)] = sum;
    }
    return h;
}

std::vector<long long> gamma_vector(const std::vector<long long>& h) {
    const int d = static_cast<int>(h.size()) - 1;
    for (int i = 0; i <= d; ++i) {
        if (h[static_cast<size_t>(i)] != h[static_cast<size_t>(d - i)]) {
            throw NotASphereError("gamma_vector: h-vector is not symmetric (h_" +
                                  std::to_string(i) + " != h_" + std::to_string(d - i) + ")");
        }
    }
    std::vector<long long> p = h;
    std::vector<long long> gamma(static_cast<size_t>(d / 2) + 1, 0);
    for (int i = 0; i <= d / 2; ++i) {
        long long gi = p[static_cast<size_t>(i)];
        gamma[static_cast<size_t>(i)] = gi;
        for (int j = 0; j <= d - 2 * i; ++j) {
            p[static_cast<size_t>(i + j)] -= gi * binom(d - 2 * i, j);
        }
    }
    for (long long coeff : p) {
        if (coeff != 0) throw NotASphereError("gamma_vector: elimination left a remainder");
    }
    return gamma;
}

ClosedFormInvariants closed_form_invariants(const Complex& c) {
    if (c.is_empty() || c.is_void() || !c.is_pure()) {
        throw MalformedInputError("closed-form invariants require a pure, non-empty complex");
    }
    const long long d = c.dim() + 1;
    const long long f0 = c.num_vertices();
    const long long f1 = static_cast<long long>(c.edge_list().size());
    ClosedFormInvariants out;
    out.g2 = f1 - d * f0 + d * (d + 1) / 2;
    out.gamma1 = f0 - 2 * d;
    out.gamma2 = f1 - (2 * d - 3) * f0 + 2 * d * (d - 2);
    return out;
}

long long turan_count(int r, int n, int i) {
    if (r < 1) throw MalformedInputError("turan_count: r must be positive");
    if (n < 0) throw MalformedInputError("turan_count: n must be non-negative");
    if (i < 0) return 0;
    if (i == 0) return 1;
    if (i > r) return 0;  // T(r,n) has no (r+1)-clique
    std::vector<long long> sizes(static_cast<size_t>(r), n / r);
    for (int j = 0; j < n % r; ++j) sizes[static_cast<size_t>(j)]++;
    // elementary symmetric polynomial e_i of the part sizes
    std::vector<long long> e(static_cast<size_t>(i) + 1, 0);
    e[0] = 1;
    for (long long s : sizes) {
        for (int k = i; k >= 1; --k) {
            e[static_cast<size_t>(k)] += e[static_cast<size_t>(k - 1)] * s;
        }
    }
    return e[static_cast<size_t>(i)];
}

GammaReport gamma_report(const Complex& c) {
    GammaReport rep;
    rep.f = f_vector(c);
    rep.h = h_vector(rep.f);
    rep.sphere_dim = c.dim();
    try {
        rep.gamma = gamma_vector(rep.h);
    } catch (const NotASphereError&) {
        rep.gamma = std::nullopt;
    }
    if (!c.is_empty() && !c.is_void() && c.is_pure()) {
        rep.closed_form = closed_form_invariants(c);
    }
    return rep;
}

std::optional<std::vector<int>> join_of_cycles_decomposition(const Complex& c) {
    if (c.is_empty() || c.is_void()) return std::nullopt;
    const auto& verts = c.vertices();
    const int n = static_cast<int>(verts.size());

    // Join factors = connected components of the complement of the skeleton.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (comp[w] < 0 && w != u && !c.has_edge(verts[u], verts[w])) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ncomp++;
    }

    int s0_factors = 0;
    std::vector<int> long_cycles;
    for (int k = 0; k < ncomp; ++k) {
        std::vector<VertexId> ws;
        for (int i = 0; i < n; ++i) {
            if (comp[i] == k) ws.push_back(verts[i]);
        }
        Complex factor = c.induced(ws);
        const int m = static_cast<int>(ws.size());
        if (m == 2 && factor.edge_list().empty()) {
            s0_factors++;  // an S0 factor; two of them assemble a C4
            continue;
        }
        // cycle of length >= 5: pure 1-dimensional, connected, all degrees 2
        if (m >= 5 && factor.dim() == 1 &&
            static_cast<int>(factor.edge_list().size()) == m) {
            bool all_deg2 = true;
            for (VertexId v : ws) {
                if (factor.degree(v) != 2) {
                    all_deg2 = false;
                    break;
                }
            }
            if (all_deg2) {
                // degrees 2 everywhere: a disjoint union of cycles; connected
                // means a single m-cycle
                std::vector<VertexId> reach{ws[0]};
                std::vector<char> seen(ws.size(), 0);
                seen[0] = 1;
                int count = 1;
                while (!reach.empty()) {
                    VertexId u = reach.back();
                    reach.pop_back();
                    for (VertexId w : factor.neighbors(u)) {
                        size_t wi = static_cast<size_t>(
                            std::lower_bound(ws.begin(), ws.end(), w) - ws.begin());
                        if (!seen[wi]) {
                            seen[wi] = 1;
                            count++;
                            reach.push_back(w);
                        }
                    }
                }
                if (count == m) {
                    long_cycles.push_back(m);
                    continue;
                }
            }
        }
        return std::nullopt;
    }
    if (s0_factors % 2 != 0) return std::nullopt;
    std::vector<int> lengths(static_cast<size_t>(s0_factors / 2), 4);
    lengths.insert(lengths.end(), long_cycles.begin(), long_cycles.end());
    std::sort(lengths.begin(), lengths.end());
    if (lengths.empty()) return std::nullopt;
    return lengths;
}

ConjectureBoundsReport conjecture_bounds(const Complex& c) {
    ConjectureBoundsReport rep;
    rep.d = c.dim() + 1;
    rep.n = c.num_vertices();
    rep.in_conjecture_scope = (rep.d % 2 == 0) && rep.d >= 4;

    GammaReport gr = gamma_report(c);
    if (!gr.gamma) {
        throw NotASphereError("conjecture_bounds: h-vector is not symmetric");
    }
    const auto& gamma = *gr.gamma;
    const int half = rep.d / 2;
    const int spare = static_cast<int>(rep.n) - 2 * rep.d;
    for (int i = 2; i <= half; ++i) {
        BoundEntry e;
        e.i = i;
        e.gamma_i = gamma[static_cast<size_t>(i)];
        e.bound = turan_count(half, spare, i);
        e.equality = (e.gamma_i == e.bound);
        rep.entries.push_back(e);
    }

    auto lengths = join_of_cycles_decomposition(c);
    if (lengths && static_cast<int>(lengths->size()) == half &&
        lengths->back() - lengths->front() <= 1) {
        rep.is_join_of_near_equal_cycles = true;
        rep.cycle_lengths = *lengths;
    } else if (lengths) {
        rep.cycle_lengths = *lengths;
    }
    return rep;
}

}  // namespace stellar

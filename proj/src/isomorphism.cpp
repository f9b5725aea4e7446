#include "stellar/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stellar {

namespace {

struct Side {
    const Complex* c;
    int n;
    std::vector<VertexId> labels;
    std::vector<std::vector<char>> adj;   // n x n
    std::vector<int> color;

    explicit Side(const Complex& cx) : c(&cx) {
        labels = cx.vertices();
        n = static_cast<int>(labels.size());
        adj.assign(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (VertexId u : cx.neighbors(labels[i])) {
                int j = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), u) -
                                         labels.begin());
                adj[i][j] = 1;
            }
        }
    }
};

// Initial vertex invariant: degree plus the multiset of sizes of facets
// through the vertex.
std::vector<std::vector<int>> initial_signatures(const Side& s) {
    std::vector<std::vector<int>> sigs(s.n);
    for (int i = 0; i < s.n; ++i) {
        sigs[i].push_back(s.c->degree(s.labels[i]));
    }
    for (const Face& f : s.c->facets()) {
        for (VertexId v : f) {
            int i = static_cast<int>(std::lower_bound(s.labels.begin(), s.labels.end(), v) -
                                     s.labels.begin());
            sigs[i].push_back(f.size());
        }
    }
    for (auto& sig : sigs) std::sort(sig.begin() + 1, sig.end());
    return sigs;
}

// One round of joint color refinement; returns false if the class census of
// the two sides diverges (no isomorphism possible).
bool refine(Side& a, Side& b) {
    for (int round = 0; round < std::max(a.n, 1); ++round) {
        std::map<std::vector<int>, int> table;
        auto next_colors = [&table](Side& s) {
            std::vector<int> nc(s.n);
            for (int i = 0; i < s.n; ++i) {
                std::vector<int> sig{s.color[i]};
                for (int j = 0; j < s.n; ++j) {
                    if (s.adj[i][j]) sig.push_back(s.color[j]);
                }
                std::sort(sig.begin() + 1, sig.end());
                auto [it, _] = table.emplace(std::move(sig), static_cast<int>(table.size()));
                nc[i] = it->second;
            }
            return nc;
        };
        std::vector<int> na = next_colors(a);
        std::vector<int> nb = next_colors(b);

        std::map<int, int> census_a, census_b;
        for (int c : na) census_a[c]++;
        for (int c : nb) census_b[c]++;
        if (census_a != census_b) return false;

        int old_classes = 0;
        {
            std::set<int> s(a.color.begin(), a.color.end());
            old_classes = static_cast<int>(s.size());
        }
        a.color = std::move(na);
        b.color = std::move(nb);
        std::set<int> now(a.color.begin(), a.color.end());
        if (static_cast<int>(now.size()) == old_classes) break;  // stable
    }
    return true;
}

struct Matcher {
    Side* a;
    Side* b;
    std::vector<int> map_ab;    // a-index -> b-index or -1
    std::vector<char> used_b;
    std::vector<int> order;     // a-indices, most constrained first

    bool extend(size_t pos) {
        if (pos == order.size()) return facets_match();
        int i = order[pos];
        for (int j = 0; j < b->n; ++j) {
            if (used_b[j] || b->color[j] != a->color[i]) continue;
            bool ok = true;
            for (size_t q = 0; q < pos; ++q) {
                int i2 = order[q];
                if (a->adj[i][i2] != b->adj[j][map_ab[i2]]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_ab[i] = j;
            used_b[j] = 1;
            if (extend(pos + 1)) return true;
            used_b[j] = 0;
            map_ab[i] = -1;
        }
        return false;
    }

    bool facets_match() const {
        std::vector<Face> mapped;
        mapped.reserve(a->c->facets().size());
        for (const Face& f : a->c->facets()) {
            std::vector<VertexId> vs;
            vs.reserve(f.size());
            for (VertexId v : f) {
                int i = static_cast<int>(std::lower_bound(a->labels.begin(), a->labels.end(), v) -
                                         a->labels.begin());
                vs.push_back(b->labels[map_ab[i]]);
            }
            mapped.push_back(Face::of(std::move(vs)));
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == b->c->facets();
    }
};

}  // namespace

std::optional<std::vector<std::pair<VertexId, VertexId>>> find_isomorphism(const Complex& a,
                                                                           const Complex& b) {
    // Degenerate values first.
    if (a.is_empty() || b.is_empty()) {
        if (a.is_empty() && b.is_empty()) return std::vector<std::pair<VertexId, VertexId>>{};
        return std::nullopt;
    }
    if (a.is_void() || b.is_void()) {
        if (a.is_void() && b.is_void()) return std::vector<std::pair<VertexId, VertexId>>{};
        return std::nullopt;
    }
    if (a.num_vertices() != b.num_vertices() ||
        a.facets().size() != b.facets().size() || a.dim() != b.dim()) {
        return std::nullopt;
    }
    if (a.face_counts() != b.face_counts()) return std::nullopt;

    Side sa(a), sb(b);

    // Seed colors jointly from the initial signatures.
    {
        std::map<std::vector<int>, int> table;
        auto sig_a = initial_signatures(sa);
        auto sig_b = initial_signatures(sb);
        sa.color.resize(sa.n);
        sb.color.resize(sb.n);
        for (int i = 0; i < sa.n; ++i) {
            auto [it, _] = table.emplace(sig_a[i], static_cast<int>(table.size()));
            sa.color[i] = it->second;
        }
        for (int i = 0; i < sb.n; ++i) {
            auto it = table.find(sig_b[i]);
            if (it == table.end()) return std::nullopt;
            sb.color[i] = it->second;
        }
        std::map<int, int> ca, cb;
        for (int c : sa.color) ca[c]++;
        for (int c : sb.color) cb[c]++;
        if (ca != cb) return std::nullopt;
    }

    if (!refine(sa, sb)) return std::nullopt;

    Matcher m;
    m.a = &sa;
    m.b = &sb;
    m.map_ab.assign(sa.n, -1);
    m.used_b.assign(sb.n, 0);
    // Order vertices smallest-class-first, preferring neighbors of already
    // placed vertices so that adjacency pruning bites early.
    std::map<int, int> class_size;
    for (int c : sa.color) class_size[c]++;
    {
        std::vector<char> placed(sa.n, 0);
        std::vector<int> placed_nbrs(sa.n, 0);
        m.order.clear();
        for (int step = 0; step < sa.n; ++step) {
            int best = -1;
            for (int i = 0; i < sa.n; ++i) {
                if (placed[i]) continue;
                if (best < 0) {
                    best = i;
                    continue;
                }
                if (placed_nbrs[i] != placed_nbrs[best]) {
                    if (placed_nbrs[i] > placed_nbrs[best]) best = i;
                    continue;
                }
                if (class_size[sa.color[i]] < class_size[sa.color[best]]) best = i;
            }
            placed[best] = 1;
            m.order.push_back(best);
            for (int j = 0; j < sa.n; ++j) {
                if (sa.adj[best][j]) placed_nbrs[j]++;
            }
        }
    }

    if (!m.extend(0)) return std::nullopt;

    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(sa.n);
    for (int i = 0; i < sa.n; ++i) out.emplace_back(sa.labels[i], sb.labels[m.map_ab[i]]);
    return out;
}

}  // namespace stellar

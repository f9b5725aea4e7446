#include "stellar/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace stellar {

// ---------------------------------------------------------------------------
// Face

Face::Face(std::initializer_list<VertexId> vs) {
    *this = of(std::vector<VertexId>(vs));
}

Face Face::of(std::vector<VertexId> vs) {
    std::sort(vs.begin(), vs.end());
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        if (vs[i] == vs[i + 1]) {
            throw MalformedInputError("duplicate vertex " + std::to_string(vs[i]) +
                                      " within a face");
        }
    }
    for (VertexId v : vs) {
        if (v < 0) throw MalformedInputError("negative vertex label " + std::to_string(v));
    }
    Face f;
    f.v_ = std::move(vs);
    return f;
}

Face Face::from_sorted(std::vector<VertexId> vs) {
    Face f;
    f.v_ = std::move(vs);
    return f;
}

bool Face::contains(VertexId v) const {
    return std::binary_search(v_.begin(), v_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Face Face::united(const Face& other) const {
    std::vector<VertexId> out;
    out.reserve(v_.size() + other.v_.size());
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::intersect(const Face& other) const {
    std::vector<VertexId> out;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::minus(const Face& other) const {
    std::vector<VertexId> out;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
}

Face Face::without(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(v_.size());
    for (VertexId u : v_) {
        if (u != v) out.push_back(u);
    }
    return from_sorted(std::move(out));
}

Face Face::with(VertexId v) const {
    std::vector<VertexId> out = v_;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return from_sorted(std::move(out));
}

std::string Face::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ',';
        os << v_[i];
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (auto& [a, b] : edges) {
        if (a == b) throw MalformedInputError("loop edge at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (!std::binary_search(vertices.begin(), vertices.end(), a) ||
            !std::binary_search(vertices.begin(), vertices.end(), b)) {
            throw MalformedInputError("edge endpoint outside the vertex set");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    vertices_ = std::move(vertices);
    edges_ = std::move(edges);
}

// ---------------------------------------------------------------------------
// Complex internals

struct Complex::Data {
    std::vector<Face> facets;            // lexicographically sorted antichain
    std::vector<VertexId> vertices;      // sorted labels
    int dim = Complex::kEmptyDim;
    bool is_void = false;                // facet set {∅}

    // skeleton cache, indexed by position in `vertices`
    int words = 0;
    std::vector<uint64_t> adj;                    // n rows of `words` words
    std::vector<std::vector<int>> vert_facets;    // facet indices per vertex
};

Complex::Complex() {
    static const std::shared_ptr<const Data> empty = std::make_shared<Data>();
    d_ = empty;
}

Complex Complex::from_facets(std::vector<Face> faces) {
    // Absorb duplicates and non-maximal members.
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Face& a, const Face& b) { return a.size() > b.size(); });
    std::vector<Face> maximal;
    for (const Face& f : faces) {
        bool absorbed = false;
        for (const Face& m : maximal) {
            if (f.is_subset_of(m)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());

    auto d = std::make_shared<Data>();
    d->facets = std::move(maximal);
    if (d->facets.empty()) return Complex(std::move(d));

    d->is_void = d->facets.size() == 1 && d->facets[0].empty();
    d->dim = -1;
    for (const Face& f : d->facets) {
        d->dim = std::max(d->dim, f.dim());
        for (VertexId v : f) d->vertices.push_back(v);
    }
    std::sort(d->vertices.begin(), d->vertices.end());
    d->vertices.erase(std::unique(d->vertices.begin(), d->vertices.end()), d->vertices.end());

    const int n = static_cast<int>(d->vertices.size());
    d->words = (n + 63) / 64;
    d->adj.assign(static_cast<size_t>(n) * d->words, 0);
    d->vert_facets.assign(n, {});
    auto index_of = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(d->vertices.begin(), d->vertices.end(), v) -
                                d->vertices.begin());
    };
    for (size_t fi = 0; fi < d->facets.size(); ++fi) {
        const Face& f = d->facets[fi];
        std::vector<int> idx;
        idx.reserve(f.size());
        for (VertexId v : f) idx.push_back(index_of(v));
        for (int i : idx) d->vert_facets[i].push_back(static_cast<int>(fi));
        for (size_t i = 0; i < idx.size(); ++i) {
            for (size_t j = i + 1; j < idx.size(); ++j) {
                int a = idx[i], b = idx[j];
                d->adj[static_cast<size_t>(a) * d->words + b / 64] |= 1ull << (b % 64);
                d->adj[static_cast<size_t>(b) * d->words + a / 64] |= 1ull << (a % 64);
            }
        }
    }
    return Complex(std::move(d));
}

const std::vector<Face>& Complex::facets() const { return d_->facets; }
const std::vector<VertexId>& Complex::vertices() const { return d_->vertices; }
int Complex::num_vertices() const { return static_cast<int>(d_->vertices.size()); }
int Complex::dim() const { return d_->dim; }
bool Complex::is_empty() const { return d_->facets.empty(); }
bool Complex::is_void() const { return d_->is_void; }

int Complex::max_label() const {
    return d_->vertices.empty() ? -1 : d_->vertices.back();
}

bool Complex::is_pure() const {
    for (const Face& f : d_->facets) {
        if (f.dim() != d_->dim) return false;
    }
    return true;
}

int Complex::vertex_index(VertexId v) const {
    auto it = std::lower_bound(d_->vertices.begin(), d_->vertices.end(), v);
    if (it == d_->vertices.end() || *it != v) return -1;
    return static_cast<int>(it - d_->vertices.begin());
}

bool Complex::adj(int i, int j) const {
    return (d_->adj[static_cast<size_t>(i) * d_->words + j / 64] >> (j % 64)) & 1u;
}

bool Complex::has_vertex(VertexId v) const { return vertex_index(v) >= 0; }

bool Complex::has_edge(VertexId a, VertexId b) const {
    int i = vertex_index(a), j = vertex_index(b);
    if (i < 0 || j < 0 || i == j) return false;
    return adj(i, j);
}

bool Complex::has_face(const Face& f) const {
    if (f.empty()) return !is_empty();
    int i0 = vertex_index(f[0]);
    if (i0 < 0) return false;
    for (int fi : d_->vert_facets[i0]) {
        if (f.is_subset_of(d_->facets[fi])) return true;
    }
    return false;
}

std::vector<VertexId> Complex::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    int i = vertex_index(v);
    if (i < 0) return out;
    const uint64_t* row = d_->adj.data() + static_cast<size_t>(i) * d_->words;
    for (int w = 0; w < d_->words; ++w) {
        uint64_t bits = row[w];
        while (bits) {
            int b = __builtin_ctzll(bits);
            bits &= bits - 1;
            out.push_back(d_->vertices[w * 64 + b]);
        }
    }
    return out;
}

std::vector<VertexId> Complex::common_neighbors(VertexId a, VertexId b) const {
    std::vector<VertexId> out;
    int i = vertex_index(a), j = vertex_index(b);
    if (i < 0 || j < 0) return out;
    const uint64_t* ra = d_->adj.data() + static_cast<size_t>(i) * d_->words;
    const uint64_t* rb = d_->adj.data() + static_cast<size_t>(j) * d_->words;
    for (int w = 0; w < d_->words; ++w) {
        uint64_t bits = ra[w] & rb[w];
        while (bits) {
            int bit = __builtin_ctzll(bits);
            bits &= bits - 1;
            out.push_back(d_->vertices[w * 64 + bit]);
        }
    }
    return out;
}

int Complex::degree(VertexId v) const {
    int i = vertex_index(v);
    if (i < 0) return 0;
    const uint64_t* row = d_->adj.data() + static_cast<size_t>(i) * d_->words;
    int deg = 0;
    for (int w = 0; w < d_->words; ++w) deg += __builtin_popcountll(row[w]);
    return deg;
}

namespace {

void subsets_of_size(const Face& f, int k, size_t start, std::vector<VertexId>& cur,
                     std::set<Face>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.insert(Face::from_sorted(cur));
        return;
    }
    const auto& vs = f.verts();
    size_t need = static_cast<size_t>(k) - cur.size();
    for (size_t i = start; i + need <= vs.size(); ++i) {
        cur.push_back(vs[i]);
        subsets_of_size(f, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Face> Complex::faces_of_dim(int k) const {
    if (k < -1 || is_empty()) return {};
    if (k == -1) return {Face{}};
    std::set<Face> out;
    std::vector<VertexId> cur;
    for (const Face& f : d_->facets) {
        if (f.dim() >= k) subsets_of_size(f, k + 1, 0, cur, out);
    }
    return {out.begin(), out.end()};
}

std::vector<Face> Complex::all_faces() const {
    std::vector<Face> out;
    for (int k = 0; k <= dim(); ++k) {
        auto fk = faces_of_dim(k);
        out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
}

std::vector<long long> Complex::face_counts() const {
    if (is_empty()) return {};
    std::vector<long long> counts(static_cast<size_t>(std::max(dim(), -1)) + 2, 0);
    counts[0] = 1;
    for (int k = 0; k <= dim(); ++k) {
        counts[static_cast<size_t>(k) + 1] = static_cast<long long>(faces_of_dim(k).size());
    }
    return counts;
}

long long Complex::euler_characteristic() const {
    auto counts = face_counts();
    long long chi = 0;
    for (size_t s = 1; s < counts.size(); ++s) {
        chi += (s % 2 == 1 ? 1 : -1) * counts[s];
    }
    return chi;
}

std::vector<long long> Complex::skeleton_clique_census() const {
    if (is_empty()) return {};
    const int n = num_vertices();
    const int w = d_->words;
    std::vector<long long> counts{1};
    std::vector<uint64_t> cand(static_cast<size_t>(w));
    auto count_from = [&](auto&& self, const std::vector<uint64_t>& pool, int size) -> void {
        if (static_cast<int>(counts.size()) <= size + 1) counts.push_back(0);
        for (int wi = 0; wi < w; ++wi) {
            uint64_t bits = pool[static_cast<size_t>(wi)];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int v = wi * 64 + b;
                counts[static_cast<size_t>(size) + 1]++;
                // extend by neighbors of v above v
                std::vector<uint64_t> next(static_cast<size_t>(w), 0);
                bool any = false;
                for (int wj = 0; wj < w; ++wj) {
                    uint64_t m = pool[static_cast<size_t>(wj)] &
                                 d_->adj[static_cast<size_t>(v) * w + wj];
                    if (wj < wi) {
                        m = 0;  // only extend upward so each clique is counted once
                    } else if (wj == wi) {
                        m = (b == 63) ? 0 : (m & (~0ull << (b + 1)));
                    }
                    next[static_cast<size_t>(wj)] = m;
                    any |= (m != 0);
                }
                if (any) self(self, next, size + 1);
            }
        }
    };
    for (int i = 0; i < n; ++i) cand[static_cast<size_t>(i) / 64] |= 1ull << (i % 64);
    count_from(count_from, cand, 0);
    return counts;
}

Complex Complex::link(const Face& f) const {
    if (!has_face(f)) {
        throw NotAFaceError("link: " + f.str() + " is not a face of the complex");
    }
    if (f.empty()) return *this;
    std::vector<Face> out;
    int i0 = vertex_index(f[0]);
    for (int fi : d_->vert_facets[i0]) {
        const Face& g = d_->facets[fi];
        if (f.is_subset_of(g)) out.push_back(g.minus(f));
    }
    // {G \ F : F ⊆ G facet} is already an antichain; from_facets just sorts.
    return from_facets(std::move(out));
}

Complex Complex::induced(std::span<const VertexId> w) const {
    if (is_empty()) return Complex();
    std::vector<VertexId> ws(w.begin(), w.end());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    Face wface = Face::from_sorted(std::move(ws));
    std::vector<Face> out;
    out.reserve(d_->facets.size());
    for (const Face& g : d_->facets) out.push_back(g.intersect(wface));
    return from_facets(std::move(out));
}

std::vector<Face> Complex::missing_faces(int min_size) const {
    if (min_size < 2) {
        throw MalformedInputError("missing_faces: min_size must be >= 2");
    }
    std::vector<Face> out;
    if (is_empty() || is_void()) return out;
    const int n = num_vertices();

    if (min_size == 2) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!adj(i, j)) out.push_back(Face{d_->vertices[i], d_->vertices[j]});
            }
        }
    }

    // Missing faces of size k >= 3: extend a (k-1)-vertex face T by a common
    // neighbor v > max(T); S = T ∪ {v} is missing iff S ∉ Δ and every
    // (k-1)-subset of S is a face. Each candidate arises once, from
    // T = S minus its largest vertex.
    for (int k = std::max(3, min_size); k <= dim() + 2; ++k) {
        for (const Face& t : faces_of_dim(k - 2)) {
            for (VertexId v : common_neighbors_of_face(*this, t)) {
                if (v <= t[t.size() - 1]) continue;
                Face s = t.with(v);
                if (has_face(s)) continue;
                bool boundary_in = true;
                for (VertexId u : s) {
                    if (!has_face(s.without(u))) {
                        boundary_in = false;
                        break;
                    }
                }
                if (boundary_in) out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool Complex::is_flag() const {
    return missing_faces(3).empty();
}

Graph Complex::skeleton() const {
    std::vector<std::pair<VertexId, VertexId>> edges;
    const int n = num_vertices();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adj(i, j)) edges.emplace_back(d_->vertices[i], d_->vertices[j]);
        }
    }
    return Graph(d_->vertices, std::move(edges));
}

std::vector<Face> Complex::edge_list() const {
    std::vector<Face> out;
    const int n = num_vertices();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adj(i, j)) out.push_back(Face{d_->vertices[i], d_->vertices[j]});
        }
    }
    return out;
}

bool operator==(const Complex& a, const Complex& b) {
    return a.d_ == b.d_ || a.d_->facets == b.d_->facets;
}

std::string Complex::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < d_->facets.size(); ++i) {
        if (i) os << ' ';
        os << d_->facets[i].str();
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------------------
// Free constructions

std::vector<VertexId> common_neighbors_of_face(const Complex& c, const Face& f) {
    if (f.empty()) return c.vertices();
    std::vector<VertexId> cur = c.neighbors(f[0]);
    for (int i = 1; i < f.size(); ++i) {
        std::vector<VertexId> nb = c.neighbors(f[i]);
        std::vector<VertexId> tmp;
        std::set_intersection(cur.begin(), cur.end(), nb.begin(), nb.end(),
                              std::back_inserter(tmp));
        cur = std::move(tmp);
    }
    return cur;
}

Complex join(const Complex& a, const Complex& b) {
    for (VertexId v : a.vertices()) {
        if (b.has_vertex(v)) {
            throw LabelCollisionError("join: vertex label " + std::to_string(v) +
                                      " appears in both factors");
        }
    }
    std::vector<Face> out;
    out.reserve(a.facets().size() * b.facets().size());
    for (const Face& fa : a.facets()) {
        for (const Face& fb : b.facets()) {
            out.push_back(fa.united(fb));
        }
    }
    return Complex::from_facets(std::move(out));
}

namespace {

// Bron–Kerbosch with pivoting over bitset rows.
struct CliqueFinder {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> adj;
    std::vector<VertexId> labels;
    std::vector<Face> cliques;

    void run() {
        std::vector<uint64_t> p(words, 0), x(words, 0);
        for (int i = 0; i < n; ++i) p[i / 64] |= 1ull << (i % 64);
        std::vector<int> r;
        expand(r, p, x);
    }

    void expand(std::vector<int>& r, std::vector<uint64_t> p, std::vector<uint64_t> x) {
        bool p_empty = true, x_empty = true;
        for (int w = 0; w < words; ++w) {
            if (p[w]) p_empty = false;
            if (x[w]) x_empty = false;
        }
        if (p_empty && x_empty) {
            std::vector<VertexId> vs;
            vs.reserve(r.size());
            for (int i : r) vs.push_back(labels[i]);
            cliques.push_back(Face::of(std::move(vs)));
            return;
        }
        // pivot: vertex of P ∪ X with most neighbors in P
        int pivot = -1, best = -1;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = p[w] | x[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int u = w * 64 + b;
                int cnt = 0;
                for (int ww = 0; ww < words; ++ww) {
                    cnt += __builtin_popcountll(p[ww] & adj[static_cast<size_t>(u) * words + ww]);
                }
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        }
        for (int w = 0; w < words; ++w) {
            uint64_t bits = p[w] & ~adj[static_cast<size_t>(pivot) * words + w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int v = w * 64 + b;
                std::vector<uint64_t> np(words), nx(words);
                for (int ww = 0; ww < words; ++ww) {
                    np[ww] = p[ww] & adj[static_cast<size_t>(v) * words + ww];
                    nx[ww] = x[ww] & adj[static_cast<size_t>(v) * words + ww];
                }
                r.push_back(v);
                expand(r, std::move(np), std::move(nx));
                r.pop_back();
                p[w] &= ~(1ull << b);
                x[w] |= 1ull << b;
            }
        }
    }
};

}  // namespace

Complex clique_complex(const Graph& g) {
    CliqueFinder finder;
    finder.labels = g.vertices();
    finder.n = static_cast<int>(finder.labels.size());
    finder.words = (finder.n + 63) / 64;
    finder.adj.assign(static_cast<size_t>(finder.n) * std::max(finder.words, 1), 0);
    auto index_of = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(finder.labels.begin(), finder.labels.end(), v) -
                                finder.labels.begin());
    };
    for (const auto& [a, b] : g.edges()) {
        int i = index_of(a), j = index_of(b);
        finder.adj[static_cast<size_t>(i) * finder.words + j / 64] |= 1ull << (j % 64);
        finder.adj[static_cast<size_t>(j) * finder.words + i / 64] |= 1ull << (i % 64);
    }
    if (finder.n == 0) return Complex();
    finder.run();
    return Complex::from_facets(std::move(finder.cliques));
}

Complex full_simplex(const Face& f) {
    return Complex::from_facets({f});
}

Complex boundary_of_face(const Face& f) {
    if (f.empty()) return Complex();
    std::vector<Face> out;
    for (VertexId v : f) out.push_back(f.without(v));
    return Complex::from_facets(std::move(out));
}

Complex relabeled(const Complex& c, const std::vector<std::pair<VertexId, VertexId>>& map) {
    std::vector<std::pair<VertexId, VertexId>> m = map;
    std::sort(m.begin(), m.end());
    auto image_of = [&](VertexId v) {
        auto it = std::lower_bound(m.begin(), m.end(), std::make_pair(v, VertexId{0}),
                                   [](const auto& p, const auto& q) { return p.first < q.first; });
        if (it == m.end() || it->first != v) {
            throw MalformedInputError("relabeled: vertex " + std::to_string(v) +
                                      " has no image");
        }
        return it->second;
    };
    std::vector<Face> out;
    out.reserve(c.facets().size());
    for (const Face& f : c.facets()) {
        std::vector<VertexId> vs;
        vs.reserve(f.size());
        for (VertexId v : f) vs.push_back(image_of(v));
        out.push_back(Face::of(std::move(vs)));
    }
    return Complex::from_facets(std::move(out));
}

}  // namespace stellar

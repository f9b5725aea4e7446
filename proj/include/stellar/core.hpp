#ifndef STELLAR_CORE_HPP
#define STELLAR_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stellar/errors.hpp"

namespace stellar {

/// Vertex labels are non-negative integers. Labels within one complex are
/// distinct but need not be contiguous; fresh vertices always take labels
/// above everything seen so far.
using VertexId = int;

/// A face: a strictly sorted set of vertex labels. The empty face is a
/// legal value (it is a face of every non-empty complex).
class Face {
public:
    Face() = default;
    Face(std::initializer_list<VertexId> vs);

    /// Sorts and validates; duplicate vertices raise MalformedInputError.
    static Face of(std::vector<VertexId> vs);
    /// Trusts the input to be strictly sorted.
    static Face from_sorted(std::vector<VertexId> vs);

    const std::vector<VertexId>& verts() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    int dim() const { return static_cast<int>(v_.size()) - 1; }
    bool empty() const { return v_.empty(); }

    bool contains(VertexId v) const;
    bool is_subset_of(const Face& other) const;

    Face united(const Face& other) const;        // set union
    Face intersect(const Face& other) const;
    Face minus(const Face& other) const;         // set difference
    Face without(VertexId v) const;
    Face with(VertexId v) const;                 // insert; v must be absent

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    VertexId operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    friend bool operator==(const Face& a, const Face& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Face& a, const Face& b) { return a.v_ != b.v_; }
    friend bool operator<(const Face& a, const Face& b) { return a.v_ < b.v_; }

    std::string str() const;

private:
    std::vector<VertexId> v_;
};

/// A simple graph given by its vertex set and edge list. Used as the input
/// type of clique complexes and as the 1-skeleton view of a complex.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

private:
    std::vector<VertexId> vertices_;                       // sorted
    std::vector<std::pair<VertexId, VertexId>> edges_;     // a < b, sorted
};

/// An immutable simplicial complex stored by its facet set.
///
/// Distinguished degenerate values: the empty complex (no faces at all,
/// facet list empty) and the complex {∅} whose only face is the empty face
/// (facet list holds one empty face). Everything else implicitly contains ∅.
///
/// Copies are cheap (shared immutable payload); all operations are pure, so
/// values can be shared freely across threads.
class Complex {
public:
    /// dim() of the complex without any face.
    static constexpr int kEmptyDim = std::numeric_limits<int>::min();

    Complex();  // the empty complex

    /// Builds the complex whose facets are the inclusion-maximal members of
    /// `faces`; non-maximal and duplicate entries are absorbed.
    static Complex from_facets(std::vector<Face> faces);

    const std::vector<Face>& facets() const;
    const std::vector<VertexId>& vertices() const;
    int num_vertices() const;
    int dim() const;             // kEmptyDim for the empty complex, -1 for {∅}
    bool is_empty() const;       // no faces at all
    bool is_void() const;        // facet set {∅}
    int max_label() const;       // -1 when there are no vertices
    bool is_pure() const;        // all facets of equal dimension

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId a, VertexId b) const;
    bool has_face(const Face& f) const;

    /// Neighbors of v in the 1-skeleton, sorted.
    std::vector<VertexId> neighbors(VertexId v) const;
    std::vector<VertexId> common_neighbors(VertexId a, VertexId b) const;
    int degree(VertexId v) const;

    /// All k-dimensional faces (so faces with k+1 vertices), sorted.
    std::vector<Face> faces_of_dim(int k) const;
    /// All nonempty faces, sorted by (size, lex).
    std::vector<Face> all_faces() const;
    /// Number of faces per cardinality: counts[s] = #faces with s vertices,
    /// counts[0] = 1 unless the complex is empty.
    std::vector<long long> face_counts() const;
    long long euler_characteristic() const;

    /// Cliques of the 1-skeleton per cardinality (counts[0] = 1). For a flag
    /// complex this equals face_counts(), much faster on large inputs.
    std::vector<long long> skeleton_clique_census() const;

    /// lk(F) = {T : T ∩ F = ∅, T ∪ F ∈ Δ}. F must be a face.
    Complex link(const Face& f) const;
    /// Faces of the complex contained in W.
    Complex induced(std::span<const VertexId> w) const;

    /// All missing faces F (F ∉ Δ, ∂F ⊆ Δ) with |F| ≥ min_size (min_size ≥ 2).
    std::vector<Face> missing_faces(int min_size) const;
    bool is_flag() const;

    Graph skeleton() const;

    /// Edges of the 1-skeleton, sorted.
    std::vector<Face> edge_list() const;

    friend bool operator==(const Complex& a, const Complex& b);
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    std::string str() const;

private:
    struct Data;
    explicit Complex(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    int vertex_index(VertexId v) const;  // -1 if absent
    bool adj(int i, int j) const;        // by vertex index

    std::shared_ptr<const Data> d_;

    friend class ComplexAccess;
};

/// Vertices adjacent to every vertex of f in the 1-skeleton.
std::vector<VertexId> common_neighbors_of_face(const Complex& c, const Face& f);

/// Join A * B: faces are unions of a face of A and a face of B. Vertex sets
/// must be disjoint.
Complex join(const Complex& a, const Complex& b);

/// The complex of cliques of a simple graph.
Complex clique_complex(const Graph& g);

/// Full simplex on the vertices of F (all subsets are faces).
Complex full_simplex(const Face& f);
/// Boundary complex ∂F = {T : T ⊂ F, T ≠ F}.
Complex boundary_of_face(const Face& f);

/// Applies a vertex relabeling to every facet. The map must be injective and
/// cover every vertex of the complex.
Complex relabeled(const Complex& c, const std::vector<std::pair<VertexId, VertexId>>& map);

}  // namespace stellar

#endif  // STELLAR_CORE_HPP

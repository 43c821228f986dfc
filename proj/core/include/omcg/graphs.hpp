#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "omcg/lattice.hpp"
#include "omcg/sign_vector.hpp"

namespace omcg {

enum class GraphKind { Cocircuit, Tope, Induced };

/// Undirected graph whose vertices are sign vectors, kept in canonical order.
class SignedGraph {
public:
    SignedGraph(GraphKind kind, SignSystem vertices,
                std::vector<std::pair<std::size_t, std::size_t>> edges);

    GraphKind kind() const { return kind_; }
    const SignSystem& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Neighbor indices in ascending order.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    bool has_edge(std::size_t a, std::size_t b) const;

    /// Induced subgraph on the given vertex indices (any order; deduplicated).
    SignedGraph induced(const std::vector<std::size_t>& keep) const;

private:
    GraphKind kind_;
    SignSystem vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Per-element allowed nonzero signs of a vector tuple; zero is always allowed.
/// Determined by the set of per-element signs only, so duplicate or reordered
/// tuples give equal signatures.
struct HullSignature {
    ElementSet allow_pos;
    ElementSet allow_neg;

    bool admits(const SignVector& z) const {
        return z.positive_part().subset_of(allow_pos) &&
               z.negative_part().subset_of(allow_neg);
    }

    friend bool operator==(const HullSignature&, const HullSignature&) = default;
};

/// Throws InvalidArgumentError on an empty tuple.
HullSignature hull_signature(std::span<const SignVector> xs);

/// Graph on the atoms: X,Y adjacent iff some Z in the closure (or 1̂) has
/// exactly {X,Y} as the atoms below it. 1̂ contributes only when there are
/// exactly two atoms.
SignedGraph cocircuit_graph(const FaceLattice& lattice);

/// Graph on the coatoms: S,T adjacent iff some proper covector has exactly
/// {S,T} as the topes above it (1̂ is above no tope).
SignedGraph tope_graph(const FaceLattice& lattice);

/// Induced subgraph on the vertices admitted by the signature.
SignedGraph crabbed_hull(const SignedGraph& g, const HullSignature& signature);

/// Work counters for the graph-route cost model: one unit per adjacency
/// relaxation and one per hull-membership test, each a constant number of
/// word operations on sign masks.
struct TraversalCost {
    std::uint64_t edge_relaxations = 0;
    std::uint64_t hull_tests = 0;
    std::uint64_t total() const { return edge_relaxations + hull_tests; }
};

/// True iff X and Y are joined by a path inside the crabbed hull [X,Y].
/// Breadth-first search with on-demand hull membership tests; the hull is
/// never materialized and the search stops as soon as Y is reached.
/// Throws InvalidArgumentError when X or Y is not a vertex of g.
bool crabbed_path_exists(const SignedGraph& g, const SignVector& x, const SignVector& y,
                         TraversalCost* cost = nullptr);

/// Exact vertex connectivity κ(G) via Menger (unit-capacity max-flow with
/// vertex splitting). Conventions: complete graph on m vertices has κ = m-1;
/// disconnected graphs, single vertices and the empty graph have κ = 0.
int vertex_connectivity(const SignedGraph& g);

/// Minimum number of vertices (excluding s,t) whose removal separates two
/// distinct non-adjacent vertices.
int st_vertex_connectivity(const SignedGraph& g, std::size_t s, std::size_t t);

/// Subgraph of the cocircuit graph induced by {X : X∘U = U} for a tope U.
/// Throws InvalidArgumentError when U is not a tope of the lattice.
SignedGraph tope_subgraph(const FaceLattice& lattice, const SignedGraph& cocircuits,
                          const SignVector& tope);

} // namespace omcg

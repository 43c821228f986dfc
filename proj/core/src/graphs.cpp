#include "omcg/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

namespace omcg {

SignedGraph::SignedGraph(GraphKind kind, SignSystem vertices,
                         std::vector<std::pair<std::size_t, std::size_t>> edges)
    : kind_(kind), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (auto& [a, b] : edges_) {
        if (a == b) throw InvalidArgumentError("loop edge in signed graph");
        if (a >= vertices_.size() || b >= vertices_.size()) {
            throw InvalidArgumentError("edge references a missing vertex");
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adjacency_.assign(vertices_.size(), {});
    for (auto [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool SignedGraph::has_edge(std::size_t a, std::size_t b) const {
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

SignedGraph SignedGraph::induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::size_t> new_index(vertices_.size(), std::numeric_limits<std::size_t>::max());
    std::vector<SignVector> verts;
    verts.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        new_index[sorted[i]] = i;
        verts.push_back(vertices_[sorted[i]]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> sub_edges;
    for (auto [a, b] : edges_) {
        if (new_index[a] != std::numeric_limits<std::size_t>::max() &&
            new_index[b] != std::numeric_limits<std::size_t>::max()) {
            sub_edges.emplace_back(new_index[a], new_index[b]);
        }
    }
    // Canonical order is preserved: `sorted` is ascending over an already
    // canonical vertex list.
    return SignedGraph(GraphKind::Induced, SignSystem(vertices_.ground(), std::move(verts)),
                       std::move(sub_edges));
}

HullSignature hull_signature(std::span<const SignVector> xs) {
    if (xs.empty()) throw InvalidArgumentError("crabbed hull of an empty tuple is undefined");
    HullSignature sig;
    for (std::size_t i = 1; i < xs.size(); ++i) detail::require_same_ground(xs[0], xs[i]);
    for (const SignVector& x : xs) {
        sig.allow_pos = sig.allow_pos | x.positive_part();
        sig.allow_neg = sig.allow_neg | x.negative_part();
    }
    return sig;
}

SignedGraph cocircuit_graph(const FaceLattice& lattice) {
    const SignSystem verts = atoms(lattice);
    const auto& cov = lattice.covectors();

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> below;
    for (std::size_t z = 0; z < cov.size(); ++z) {
        below.clear();
        for (std::size_t v = 0; v < verts.size(); ++v) {
            if (leq(verts[v], cov[z])) below.push_back(v);
        }
        if (below.size() == 2) edges.emplace_back(below[0], below[1]);
    }
    // 1̂ lies above every atom, so it yields an edge exactly when there are two.
    if (verts.size() == 2) edges.emplace_back(0, 1);

    return SignedGraph(GraphKind::Cocircuit, verts, std::move(edges));
}

SignedGraph tope_graph(const FaceLattice& lattice) {
    const SignSystem verts(lattice.covectors().ground(), topes(lattice));
    const auto& cov = lattice.covectors();

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> above;
    for (std::size_t z = 0; z < cov.size(); ++z) {
        above.clear();
        for (std::size_t v = 0; v < verts.size(); ++v) {
            if (leq(cov[z], verts[v])) above.push_back(v);
        }
        if (above.size() == 2) edges.emplace_back(above[0], above[1]);
    }
    return SignedGraph(GraphKind::Tope, verts, std::move(edges));
}

SignedGraph crabbed_hull(const SignedGraph& g, const HullSignature& signature) {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (signature.admits(g.vertices()[v])) keep.push_back(v);
    }
    return g.induced(keep);
}

bool crabbed_path_exists(const SignedGraph& g, const SignVector& x, const SignVector& y,
                         TraversalCost* cost) {
    auto xi = g.vertices().index_of(x);
    auto yi = g.vertices().index_of(y);
    if (!xi || !yi) throw InvalidArgumentError("crabbed path endpoints must be graph vertices");
    if (*xi == *yi) return true;

    const SignVector tuple[2] = {x, y};
    const HullSignature sig = hull_signature(tuple);

    std::vector<char> visited(g.vertex_count(), 0);
    std::deque<std::size_t> queue;
    visited[*xi] = 1;
    queue.push_back(*xi);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : g.neighbors(u)) {
            if (cost) ++cost->edge_relaxations;
            if (visited[v]) continue;
            if (cost) ++cost->hull_tests;
            if (!sig.admits(g.vertices()[v])) continue;
            if (v == *yi) return true;
            visited[v] = 1;
            queue.push_back(v);
        }
    }
    return false;
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph; the flow value equals
// the number of internally disjoint s-t paths (Menger). Arc 2k and 2k+1 are
// a forward/residual pair.
class VertexFlow {
public:
    explicit VertexFlow(const SignedGraph& g) : n_(g.vertex_count()) {
        adj_.assign(2 * n_, {});
        const int big = static_cast<int>(n_) + 1;
        for (std::size_t v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (auto [a, b] : g.edges()) {
            add_arc(out(a), in(b), big);
            add_arc(out(b), in(a), big);
        }
        base_cap_.reserve(arcs_.size());
        for (const Arc& a : arcs_) base_cap_.push_back(a.cap);
    }

    int max_flow(std::size_t s, std::size_t t) {
        for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = base_cap_[i];
        // endpoints are not capacity-limited
        arcs_[2 * s].cap = static_cast<int>(n_) + 1;
        arcs_[2 * t].cap = static_cast<int>(n_) + 1;
        const int source = out(s), sink = in(t);
        int flow = 0;
        while (augment(source, sink)) ++flow;
        return flow;
    }

private:
    struct Arc {
        int to;
        int cap;
    };

    int in(std::size_t v) const { return static_cast<int>(2 * v); }
    int out(std::size_t v) const { return static_cast<int>(2 * v + 1); }

    void add_arc(int from, int to, int capacity) {
        adj_[from].push_back(arcs_.size());
        arcs_.push_back({to, capacity});
        adj_[to].push_back(arcs_.size());
        arcs_.push_back({from, 0});
    }

    bool augment(int source, int sink) {
        constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> parent_arc(2 * n_, kNone);
        std::vector<char> seen(2 * n_, 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty() && !seen[sink]) {
            const int u = q.front();
            q.pop();
            for (std::size_t ai : adj_[u]) {
                const Arc& a = arcs_[ai];
                if (a.cap <= 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                parent_arc[a.to] = ai;
                if (a.to == sink) break;
                q.push(a.to);
            }
        }
        if (!seen[sink]) return false;
        for (int v = sink; v != source;) {
            const std::size_t ai = parent_arc[v];
            arcs_[ai].cap -= 1;
            arcs_[ai ^ 1].cap += 1;
            v = arcs_[ai ^ 1].to; // the paired arc points back at the origin
        }
        return true;
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<Arc> arcs_;
    std::vector<int> base_cap_;
};

} // namespace

int st_vertex_connectivity(const SignedGraph& g, std::size_t s, std::size_t t) {
    if (s == t) throw InvalidArgumentError("s and t must differ");
    if (g.has_edge(s, t)) {
        throw InvalidArgumentError("s-t vertex connectivity requires non-adjacent endpoints");
    }
    VertexFlow flow(g);
    return flow.max_flow(s, t);
}

int vertex_connectivity(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return static_cast<int>(n) - 1;

    // Minimum-degree start vertex.
    std::size_t s = 0;
    for (std::size_t v = 1; v < n; ++v) {
        if (g.degree(v) < g.degree(s)) s = v;
    }
    int best = static_cast<int>(g.degree(s));

    VertexFlow flow(g);
    // Any minimum cut avoiding s separates s from one of its non-neighbors;
    // a cut containing s separates two of its neighbors, each pair of which
    // is covered below via the neighbors' non-neighbors.
    for (std::size_t t = 0; t < n; ++t) {
        if (t == s || g.has_edge(s, t)) continue;
        best = std::min(best, flow.max_flow(s, t));
        if (best == 0) return 0;
    }
    for (std::size_t u : g.neighbors(s)) {
        for (std::size_t w = 0; w < n; ++w) {
            if (w == u || w == s || g.has_edge(u, w)) continue;
            best = std::min(best, flow.max_flow(u, w));
            if (best == 0) return 0;
        }
    }
    return best;
}

SignedGraph tope_subgraph(const FaceLattice& lattice, const SignedGraph& cocircuits,
                          const SignVector& tope) {
    auto idx = lattice.index_of(tope);
    if (!idx || !lattice.is_coatom(*idx)) {
        throw InvalidArgumentError("tope subgraph requires a tope of the lattice");
    }
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < cocircuits.vertex_count(); ++v) {
        if (compose(cocircuits.vertices()[v], tope) == tope) keep.push_back(v);
    }
    return cocircuits.induced(keep);
}

} // namespace omcg

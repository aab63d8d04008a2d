#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace twc {

// Thrown on malformed input or violated call contracts.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : error {
    using error::error;
};
// Thrown when a state the proofs rule out is reached anyway.
struct internal_error : error {
    using error::error;
};

// Simple undirected labeled graph. Vertices are 0..n-1. The edge list order
// is part of the object's identity: edge i keeps index i for the rest of its
// life, and several constructions (leaf augmentation, row deletion) rely on
// appended edges staying after the original ones.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;          // each stored as (min,max)
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge index)

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

// Validates (no loops, no duplicates, endpoints in range) and builds adjacency.
// Edge order is preserved as given, up to normalizing each pair to (min,max).
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

enum class GraphFormat { graph6, edgelist };

// Edge list: "n m" then m lines "u v". graph6: standard ASCII encoding.
// Both produce the canonical edge order (pairs sorted lexicographically).
Graph parse_graph(const std::string& text, GraphFormat format);

// Directed edge list, same layout but each line is tail then head.
// Used by the orientation front end; pair order inside a line is meaningful.
std::pair<Graph, struct Orientation> parse_digraph(const std::string& text);

std::string to_edgelist(const Graph& g);
std::string to_graph6(const Graph& g);

struct Orientation {
    std::vector<std::pair<int, int>> arcs;  // position-wise (tail, head) for each edge

    int outdegree(int v) const {
        int d = 0;
        for (auto& [t, h] : arcs) {
            (void)h;
            if (t == v) ++d;
        }
        return d;
    }
};

// Checks that arcs match the graph's edge list position by position.
void check_orients(const Graph& g, const Orientation& d);

// Every edge tail -> head with tail < head.
Orientation canonical_orientation(const Graph& g);

// Kahn's algorithm with a smallest-index heap; nullopt if a directed cycle exists.
std::optional<std::vector<int>> topological_order(const Graph& g, const Orientation& d);

struct VertexOrdering {
    std::vector<int> order;        // order[i] = vertex at position i
    std::vector<int> back_degree;  // neighbors of order[i] among order[0..i-1]
};

// Recomputes back degrees; throws internal_error if stored values disagree.
void check_ordering(const Graph& g, const VertexOrdering& o);

// Min-degree peeling (smallest index breaks ties), reversed. Returns the
// degeneracy d = max residual degree seen while peeling.
std::pair<int, VertexOrdering> degeneracy_ordering(const Graph& g);

// Degeneracy ordering repaired so that d^-(v_1)=0 and 1 <= d^-(v_i) <= d for
// i >= 2: a later position with back degree 0 is moved to just after its
// earliest-positioned neighbor until no violation remains.
VertexOrdering connected_positive_ordering(const Graph& g, int d);

struct Bipartition {
    std::vector<int> side;  // 0/1 per vertex
};
struct OddClosedWalk {
    std::vector<int> vertices;  // v_0..v_{2q}, distinct; closes back to v_0
    std::vector<int> edges;     // edge ids, edges[i] joins vertices[i], vertices[i+1 mod]
};

// Exactly one branch; requires G connected.
std::variant<Bipartition, OddClosedWalk> bipartition_or_odd_cycle(const Graph& g);

struct ParityPath {
    std::vector<int> vertices;  // simple path x..y
    std::vector<int> edges;
    bool odd_length = false;
};

ParityPath parity_path(const Graph& g, int x, int y);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

struct DensityWitness {
    std::vector<int> vertices;  // induced subgraph with |E| > k|V|
};

// Path-reversal search for an orientation with all out-degrees <= k.
std::variant<Orientation, DensityWitness> bounded_outdegree_orientation(const Graph& g, int k);

// G plus counts[v] new degree-1 neighbors per vertex, leaf edges appended
// after the original edge list. leaf_anchor[i] = anchor of vertex n+i.
struct LeafAugmented {
    Graph g;
    std::vector<int> leaf_anchor;
};
LeafAugmented add_leaves(const Graph& g, const std::vector<int>& counts);

// Smallest non-adjacent pair (lexicographic) with degree sum < k.
std::optional<std::pair<int, int>> find_light_pair(const Graph& g, int k);

}  // namespace twc

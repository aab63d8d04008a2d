#include "twchoose/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <sstream>

namespace twc {

bool Graph::has_edge(int u, int v) const {
    for (auto& [w, e] : adj[u]) {
        (void)e;
        if (w == v) return true;
    }
    return false;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw error("vertex count must be non-negative");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw error("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw error("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edges[i];
        g.adj[u].push_back({v, i});
        g.adj[v].push_back({u, i});
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

namespace {

std::vector<std::pair<int, int>> sorted_pairs(std::vector<std::pair<int, int>> e) {
    for (auto& [u, v] : e)
        if (u > v) std::swap(u, v);
    std::sort(e.begin(), e.end());
    return e;
}

struct LineReader {
    std::istringstream in;
    int lineno = 0;
    explicit LineReader(const std::string& s) : in(s) {}
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            auto pos = out.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;  // blank
            if (out[pos] == '#') continue;           // comment
            return true;
        }
        return false;
    }
};

std::vector<std::pair<int, int>> parse_edge_lines(const std::string& text, int& n_out) {
    LineReader rd(text);
    std::string line;
    if (!rd.next(line)) throw parse_error("empty input");
    std::istringstream hd(line);
    int n, m;
    if (!(hd >> n >> m) || n < 0 || m < 0)
        throw parse_error("line " + std::to_string(rd.lineno) + ": expected header \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!rd.next(line))
            throw parse_error("unexpected end of input: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v))
            throw parse_error("line " + std::to_string(rd.lineno) + ": expected \"u v\"");
        std::string rest;
        if (ls >> rest) throw parse_error("line " + std::to_string(rd.lineno) + ": trailing data \"" + rest + "\"");
        edges.push_back({u, v});
    }
    if (rd.next(line)) throw parse_error("line " + std::to_string(rd.lineno) + ": data after last edge");
    n_out = n;
    return edges;
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw parse_error("empty graph6 input");
    if (s[0] == ':' || s[0] == ';') throw parse_error("sparse6 input not supported");
    size_t pos = 0;
    if (s.compare(0, 10, ">>graph6<<") == 0) pos = 10;
    if (pos >= s.size()) throw parse_error("empty graph6 body");
    if (s[pos] == '~') throw parse_error("graph6 inputs beyond 62 vertices not supported");
    int n = s[pos] - 63;
    if (n < 0 || n > 62) throw parse_error("graph6 size byte out of range at offset " + std::to_string(pos));
    ++pos;
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    long chars_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(s.size() - pos) != chars_needed)
        throw parse_error("graph6 body length mismatch: need " + std::to_string(chars_needed) + " chars, have " +
                          std::to_string(s.size() - pos));
    std::vector<int> bits;
    bits.reserve(chars_needed * 6);
    for (size_t i = pos; i < s.size(); ++i) {
        int b = s[i] - 63;
        if (b < 0 || b > 63) throw parse_error("graph6 byte out of range at offset " + std::to_string(i));
        for (int k = 5; k >= 0; --k) bits.push_back((b >> k) & 1);
    }
    for (long i = bits_needed; i < static_cast<long>(bits.size()); ++i)
        if (bits[i]) throw parse_error("graph6 nonzero padding bits");
    std::vector<std::pair<int, int>> edges;
    long idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (bits[idx]) edges.push_back({i, j});
    return make_graph(n, sorted_pairs(std::move(edges)));
}

}  // namespace

namespace {

// Everything wrong with parsed text is the caller's input, including the
// semantic checks make_graph runs.
Graph graph_from_parsed(int n, std::vector<std::pair<int, int>> edges) {
    try {
        return make_graph(n, std::move(edges));
    } catch (const parse_error&) {
        throw;
    } catch (const error& e) {
        throw parse_error(e.what());
    }
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    if (format == GraphFormat::graph6) return parse_graph6(text);
    int n;
    auto edges = parse_edge_lines(text, n);
    return graph_from_parsed(n, sorted_pairs(std::move(edges)));
}

std::pair<Graph, Orientation> parse_digraph(const std::string& text) {
    int n;
    auto arcs = parse_edge_lines(text, n);
    // canonical edge order, with each arc following its edge
    std::sort(arcs.begin(), arcs.end(), [](auto a, auto b) {
        if (a.first > a.second) std::swap(a.first, a.second);
        if (b.first > b.second) std::swap(b.first, b.second);
        return a < b;
    });
    std::vector<std::pair<int, int>> pairs = arcs;
    Graph g = graph_from_parsed(n, std::move(pairs));
    Orientation d;
    d.arcs = std::move(arcs);
    check_orients(g, d);
    return {std::move(g), std::move(d)};
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw error("graph6 output beyond 62 vertices not supported");
    std::string s(1, static_cast<char>(63 + g.n));
    std::vector<int> bits(static_cast<size_t>(g.n) * (g.n - 1) / 2, 0);
    long idx = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (g.has_edge(i, j)) bits[idx] = 1;
    for (size_t i = 0; i < bits.size(); i += 6) {
        int b = 0;
        for (size_t k = 0; k < 6; ++k) b = (b << 1) | (i + k < bits.size() ? bits[i + k] : 0);
        s.push_back(static_cast<char>(63 + b));
    }
    return s;
}

void check_orients(const Graph& g, const Orientation& d) {
    if (static_cast<int>(d.arcs.size()) != g.m()) throw error("orientation size mismatch");
    for (int i = 0; i < g.m(); ++i) {
        auto [t, h] = d.arcs[i];
        auto [u, v] = g.edges[i];
        if (!((t == u && h == v) || (t == v && h == u)))
            throw error("orientation disagrees with edge " + std::to_string(i));
    }
}

Orientation canonical_orientation(const Graph& g) {
    Orientation d;
    d.arcs = g.edges;  // stored pairs are already (min,max)
    return d;
}

std::optional<std::vector<int>> topological_order(const Graph& g, const Orientation& d) {
    std::vector<int> indeg(g.n, 0);
    std::vector<std::vector<int>> out(g.n);
    for (auto& [t, h] : d.arcs) {
        out[t].push_back(h);
        ++indeg[h];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> q;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) q.push(v);
    std::vector<int> order;
    order.reserve(g.n);
    while (!q.empty()) {
        int v = q.top();
        q.pop();
        order.push_back(v);
        for (int h : out[v])
            if (--indeg[h] == 0) q.push(h);
    }
    if (static_cast<int>(order.size()) != g.n) return std::nullopt;
    return order;
}

namespace {

std::vector<int> back_degrees(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<int> back(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (auto& [w, e] : g.adj[order[i]]) {
            (void)e;
            if (pos[w] < i) ++back[i];
        }
    return back;
}

}  // namespace

void check_ordering(const Graph& g, const VertexOrdering& o) {
    if (static_cast<int>(o.order.size()) != g.n) throw internal_error("ordering is not a permutation");
    std::vector<char> seen(g.n, 0);
    for (int v : o.order) {
        if (v < 0 || v >= g.n || seen[v]) throw internal_error("ordering is not a permutation");
        seen[v] = 1;
    }
    if (back_degrees(g, o.order) != o.back_degree) throw internal_error("stored back degrees are stale");
}

std::pair<int, VertexOrdering> degeneracy_ordering(const Graph& g) {
    if (g.n == 0) throw error("degeneracy ordering of the empty graph");
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<char> alive(g.n, 1);
    std::vector<int> peel;
    peel.reserve(g.n);
    int d = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (alive[v] && (best == -1 || deg[v] < deg[best])) best = v;
        d = std::max(d, deg[best]);
        alive[best] = 0;
        peel.push_back(best);
        for (auto& [w, e] : g.adj[best]) {
            (void)e;
            if (alive[w]) --deg[w];
        }
    }
    VertexOrdering o;
    o.order.assign(peel.rbegin(), peel.rend());
    o.back_degree = back_degrees(g, o.order);
    return {d, o};
}

VertexOrdering connected_positive_ordering(const Graph& g, int d) {
    if (!is_connected(g)) throw error("connected ordering requested on a disconnected graph");
    auto [dg, o] = degeneracy_ordering(g);
    if (dg > d) throw error("graph is not " + std::to_string(d) + "-degenerate (degeneracy " + std::to_string(dg) + ")");
    auto order = o.order;
    // Repair pass: a position i>=1 with no earlier neighbor moves to just
    // after its earliest-positioned neighbor. Violators only ever move right,
    // so this terminates.
    for (bool changed = true; changed;) {
        changed = false;
        auto back = back_degrees(g, order);
        for (int i = 1; i < g.n; ++i) {
            if (back[i] != 0) continue;
            int v = order[i];
            std::vector<int> pos(g.n);
            for (int t = 0; t < g.n; ++t) pos[order[t]] = t;
            int j = g.n;
            for (auto& [w, e] : g.adj[v]) {
                (void)e;
                j = std::min(j, pos[w]);
            }
            if (j >= g.n) throw error("isolated vertex in a connected ordering");
            order.erase(order.begin() + i);
            order.insert(order.begin() + j, v);  // lands right after the neighbor
            changed = true;
            break;
        }
    }
    VertexOrdering r;
    r.order = order;
    r.back_degree = back_degrees(g, order);
    if (g.n > 0 && r.back_degree[0] != 0) throw internal_error("repaired ordering has back edges at the root");
    for (int i = 1; i < g.n; ++i)
        if (r.back_degree[i] < 1 || r.back_degree[i] > d)
            throw internal_error("repaired ordering violates 1 <= d^- <= d at position " + std::to_string(i));
    return r;
}

namespace {

// BFS 2-coloring; on a same-color edge, the tree paths to the conflict edge's
// endpoints meet at their LCA and close an odd cycle.
struct BfsTree {
    std::vector<int> color, parent, parent_edge, depth;
};

BfsTree bfs_tree(const Graph& g, int root) {
    BfsTree t;
    t.color.assign(g.n, -1);
    t.parent.assign(g.n, -1);
    t.parent_edge.assign(g.n, -1);
    t.depth.assign(g.n, 0);
    std::deque<int> q{root};
    t.color[root] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto& [w, e] : g.adj[u]) {
            if (t.color[w] != -1) continue;
            t.color[w] = 1 - t.color[u];
            t.parent[w] = u;
            t.parent_edge[w] = e;
            t.depth[w] = t.depth[u] + 1;
            q.push_back(w);
        }
    }
    return t;
}

}  // namespace

std::variant<Bipartition, OddClosedWalk> bipartition_or_odd_cycle(const Graph& g) {
    if (!is_connected(g)) throw error("bipartition test requires a connected graph");
    auto t = bfs_tree(g, 0);
    int cu = -1, cv = -1, ce = -1;
    for (int e = 0; e < g.m() && ce == -1; ++e) {
        auto [u, v] = g.edges[e];
        if (t.color[u] == t.color[v]) {
            cu = u;
            cv = v;
            ce = e;
        }
    }
    if (ce == -1) {
        Bipartition b;
        b.side = t.color;
        return b;
    }
    // climb to the LCA, collecting both sides
    std::vector<int> lv{cu}, le, rv{cv}, re;
    int a = cu, b = cv;
    while (t.depth[a] > t.depth[b]) {
        le.push_back(t.parent_edge[a]);
        a = t.parent[a];
        lv.push_back(a);
    }
    while (t.depth[b] > t.depth[a]) {
        re.push_back(t.parent_edge[b]);
        b = t.parent[b];
        rv.push_back(b);
    }
    while (a != b) {
        le.push_back(t.parent_edge[a]);
        a = t.parent[a];
        lv.push_back(a);
        re.push_back(t.parent_edge[b]);
        b = t.parent[b];
        rv.push_back(b);
    }
    OddClosedWalk w;
    // lca .. cu, conflict edge, cv .. lca
    for (auto it = lv.rbegin(); it != lv.rend(); ++it) w.vertices.push_back(*it);
    for (auto it = le.rbegin(); it != le.rend(); ++it) w.edges.push_back(*it);
    w.edges.push_back(ce);
    for (size_t i = 0; i + 1 < rv.size(); ++i) {
        w.vertices.push_back(rv[i]);
        w.edges.push_back(re[i]);
    }
    if (w.edges.size() % 2 == 0) throw internal_error("even cycle from a 2-coloring conflict");
    return w;
}

ParityPath parity_path(const Graph& g, int x, int y) {
    if (x == y) throw error("parity path endpoints must differ");
    auto t = bfs_tree(g, x);
    if (t.color[y] == -1) throw error("no path between the requested endpoints");
    ParityPath p;
    for (int v = y; v != x; v = t.parent[v]) {
        p.vertices.push_back(v);
        p.edges.push_back(t.parent_edge[v]);
    }
    p.vertices.push_back(x);
    std::reverse(p.vertices.begin(), p.vertices.end());
    std::reverse(p.edges.begin(), p.edges.end());
    p.odd_length = p.edges.size() % 2 == 1;
    return p;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto t = bfs_tree(g, 0);
    for (int v = 0; v < g.n; ++v)
        if (t.color[v] == -1) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto& [w, e] : g.adj[u]) {
                (void)e;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::variant<Orientation, DensityWitness> bounded_outdegree_orientation(const Graph& g, int k) {
    if (k < 1) throw error("out-degree bound must be at least 1");
    Orientation d = canonical_orientation(g);
    std::vector<int> outdeg(g.n, 0);
    for (auto& [t, h] : d.arcs) {
        (void)h;
        ++outdeg[t];
    }
    for (;;) {
        int v = -1;
        for (int u = 0; u < g.n; ++u)
            if (outdeg[u] > k) {
                v = u;
                break;
            }
        if (v == -1) return d;
        // follow arcs tail->head looking for spare capacity; flip the path
        std::vector<int> parent_arc(g.n, -1);
        std::vector<char> seen(g.n, 0);
        seen[v] = 1;
        std::deque<int> q{v};
        int sink = -1;
        while (!q.empty() && sink == -1) {
            int u = q.front();
            q.pop_front();
            for (auto& [w, e] : g.adj[u]) {
                if (seen[w] || d.arcs[e].first != u) continue;
                seen[w] = 1;
                parent_arc[w] = e;
                if (outdeg[w] < k) {
                    sink = w;
                    break;
                }
                q.push_back(w);
            }
        }
        if (sink == -1) {
            DensityWitness wit;
            for (int u = 0; u < g.n; ++u)
                if (seen[u]) wit.vertices.push_back(u);
            return wit;
        }
        for (int u = sink; u != v;) {
            int e = parent_arc[u];
            std::swap(d.arcs[e].first, d.arcs[e].second);
            u = d.arcs[e].second;  // old tail
        }
        --outdeg[v];
        ++outdeg[sink];
    }
}

LeafAugmented add_leaves(const Graph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.n) throw error("leaf count vector size mismatch");
    LeafAugmented out;
    auto edges = g.edges;
    int next = g.n;
    for (int v = 0; v < g.n; ++v) {
        if (counts[v] < 0) throw error("negative leaf count");
        for (int c = 0; c < counts[v]; ++c) {
            edges.push_back({v, next});
            out.leaf_anchor.push_back(v);
            ++next;
        }
    }
    out.g = make_graph(next, std::move(edges));
    return out;
}

std::optional<std::pair<int, int>> find_light_pair(const Graph& g, int k) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < k) return std::make_pair(u, v);
    return std::nullopt;
}

}  // namespace twc

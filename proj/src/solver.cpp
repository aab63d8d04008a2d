#include "twchoose/solver.hpp"

#include <algorithm>

namespace twc {
namespace {

void check_shape(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.vertices.size()) != g.n ||
        static_cast<int>(lists.edges.size()) != g.m())
        throw error("list assignment shape does not match the graph");
    for (const auto& l : lists.vertices)
        if (l.empty()) throw error("empty vertex list");
    for (const auto& l : lists.edges)
        if (l.empty()) throw error("empty edge list");
}

struct Var {
    bool is_vertex;
    int idx;
};

// Vertex-first DFS order: each vertex is followed immediately by its edges
// into already-visited territory, so every edge constraint becomes checkable
// as early as possible.
std::vector<Var> variable_order(const Graph& g) {
    std::vector<Var> order;
    std::vector<char> vseen(static_cast<size_t>(g.n), 0);
    std::vector<char> eseen(static_cast<size_t>(g.m()), 0);
    auto visit = [&](auto&& self, int v) -> void {
        vseen[static_cast<size_t>(v)] = 1;
        order.push_back({true, v});
        for (auto [w, e] : g.adj[static_cast<size_t>(v)])
            if (vseen[static_cast<size_t>(w)] && !eseen[static_cast<size_t>(e)]) {
                eseen[static_cast<size_t>(e)] = 1;
                order.push_back({false, e});
            }
        for (auto [w, e] : g.adj[static_cast<size_t>(v)])
            if (!vseen[static_cast<size_t>(w)]) self(self, w);
    };
    for (int v = 0; v < g.n; ++v)
        if (!vseen[static_cast<size_t>(v)]) visit(visit, v);
    return order;
}

}  // namespace

ListAssignment make_lists(const Graph& g, std::vector<std::vector<rational>> vertex_lists,
                          std::vector<std::vector<rational>> edge_lists) {
    ListAssignment lists{std::move(vertex_lists), std::move(edge_lists)};
    for (auto* side : {&lists.vertices, &lists.edges})
        for (auto& l : *side) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    check_shape(g, lists);
    return lists;
}

rational vertex_sum(const Graph& g, const Weighting& w, int v) {
    rational s = w.vertices[static_cast<size_t>(v)];
    for (auto [u, e] : g.adj[static_cast<size_t>(v)]) s += w.edges[static_cast<size_t>(e)];
    return s;
}

std::vector<int> improper_edges(const Graph& g, const Weighting& w) {
    if (static_cast<int>(w.vertices.size()) != g.n || static_cast<int>(w.edges.size()) != g.m())
        throw error("weighting shape does not match the graph");
    std::vector<rational> sums(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) sums[static_cast<size_t>(v)] = vertex_sum(g, w, v);
    std::vector<int> bad;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<size_t>(e)];
        if (sums[static_cast<size_t>(u)] == sums[static_cast<size_t>(v)]) bad.push_back(e);
    }
    return bad;
}

std::optional<Weighting> find_weighting(const Graph& g, const ListAssignment& lists,
                                        const IndexFunction& eta, bool certified) {
    check_shape(g, lists);
    if (!eta.valid_for(g)) throw error("find_weighting: index function does not fit the graph");

    const std::vector<Var> order = variable_order(g);

    // countdown[e] = unassigned variables the constraint of edge e still
    // waits on: both endpoints plus every edge touching either endpoint,
    // e itself counted once.
    std::vector<int> countdown(static_cast<size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<size_t>(e)];
        countdown[static_cast<size_t>(e)] = 2 + g.degree(u) + g.degree(v) - 1;
    }
    std::vector<std::vector<int>> vdeps(static_cast<size_t>(g.n));
    std::vector<std::vector<int>> edeps(static_cast<size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<size_t>(e)];
        vdeps[static_cast<size_t>(u)].push_back(e);
        vdeps[static_cast<size_t>(v)].push_back(e);
        for (auto [w, f] : g.adj[static_cast<size_t>(u)]) edeps[static_cast<size_t>(f)].push_back(e);
        for (auto [w, f] : g.adj[static_cast<size_t>(v)])
            if (f != e) edeps[static_cast<size_t>(f)].push_back(e);
    }

    Weighting w;
    w.vertices.resize(static_cast<size_t>(g.n));
    w.edges.resize(static_cast<size_t>(g.m()));
    std::vector<rational> sums(static_cast<size_t>(g.n), rational(0));

    // Applies or undoes one assignment; returns false on a violated
    // constraint (the countdown updates still happen so undo stays exact).
    auto apply = [&](const Var& var, const rational& val, int dir) {
        const std::vector<int>& deps =
            var.is_vertex ? vdeps[static_cast<size_t>(var.idx)] : edeps[static_cast<size_t>(var.idx)];
        if (var.is_vertex) {
            sums[static_cast<size_t>(var.idx)] += dir > 0 ? val : -val;
        } else {
            auto [u, v] = g.edges[static_cast<size_t>(var.idx)];
            sums[static_cast<size_t>(u)] += dir > 0 ? val : -val;
            sums[static_cast<size_t>(v)] += dir > 0 ? val : -val;
        }
        bool ok = true;
        for (int e : deps) {
            countdown[static_cast<size_t>(e)] -= dir;
            if (dir > 0 && countdown[static_cast<size_t>(e)] == 0) {
                auto [u, v] = g.edges[static_cast<size_t>(e)];
                if (sums[static_cast<size_t>(u)] == sums[static_cast<size_t>(v)]) ok = false;
            }
        }
        return ok;
    };

    auto search = [&](auto&& self, size_t depth) -> bool {
        if (depth == order.size()) return true;
        const Var& var = order[depth];
        const std::vector<rational>& list =
            var.is_vertex ? lists.vertices[static_cast<size_t>(var.idx)]
                          : lists.edges[static_cast<size_t>(var.idx)];
        for (const rational& val : list) {
            bool ok = apply(var, val, +1);
            if (ok) {
                if (var.is_vertex)
                    w.vertices[static_cast<size_t>(var.idx)] = val;
                else
                    w.edges[static_cast<size_t>(var.idx)] = val;
                if (self(self, depth + 1)) return true;
            }
            apply(var, val, -1);
        }
        return false;
    };

    if (search(search, 0)) return w;

    if (certified) {
        bool big_enough = true;
        for (int v = 0; v < g.n && big_enough; ++v)
            big_enough = static_cast<int>(lists.vertices[static_cast<size_t>(v)].size()) >
                         eta.vertices[static_cast<size_t>(v)];
        for (int e = 0; e < g.m() && big_enough; ++e)
            big_enough = static_cast<int>(lists.edges[static_cast<size_t>(e)].size()) >
                         eta.edges[static_cast<size_t>(e)];
        if (big_enough)
            throw internal_error(
                "find_weighting: exhausted search despite a certificate and large enough lists");
    }
    return std::nullopt;
}

}  // namespace twc

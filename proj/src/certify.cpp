#include "twchoose/certify.hpp"

#include <algorithm>
#include <queue>

namespace twc {
namespace {

// ---- small formatting helpers for trace details ----

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string expr_to_string(const Graph& g, const ColumnExpr& ex) {
    std::string s;
    for (auto& [z, c] : ex) {
        if (!s.empty()) s += ' ';
        s += c < 0 ? '-' : '+';
        if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c);
        s += sym_name(g, z);
    }
    return s.empty() ? std::string("0") : s;
}

struct Tracer {
    std::vector<TraceStep> steps;

    void add(const std::string& kind, std::string detail) {
        steps.push_back({static_cast<int>(steps.size()), kind, std::move(detail)});
    }
};

// ---- eta as a dense IndexFunction over the working graph ----

void spend(IndexFunction& eta, const Graph& g, Sym z, const char* who) {
    int& c = eta.of(g, z);
    if (c <= 0) throw internal_error(std::string(who) + ": no copy of " + sym_name(g, z) + " left");
    --c;
}

std::vector<ColumnExpr> plain_exprs(const Graph& g, const IndexFunction& eta) {
    std::vector<ColumnExpr> out;
    for (int v = 0; v < g.n; ++v)
        for (int t = 0; t < eta.vertices[static_cast<size_t>(v)]; ++t)
            out.push_back({{Sym::vertex(v), 1}});
    for (int e = 0; e < g.m(); ++e)
        for (int t = 0; t < eta.edges[static_cast<size_t>(e)]; ++t)
            out.push_back({{Sym::edge(g, e), 1}});
    return out;
}

// per mod p of the plain-eta matrix restricted to the given rows.
uint32_t pm_eta(const DiffMatrix& A, const Graph& g, const IndexFunction& eta,
                const std::vector<int>& rows, uint32_t p) {
    GenMatrix M{&A, rows, plain_exprs(g, eta)};
    return permanent_mod(evaluate(M), p);
}

uint32_t pm_exprs(const DiffMatrix& A, const std::vector<int>& rows,
                  const std::vector<ColumnExpr>& exprs, uint32_t p) {
    GenMatrix M{&A, rows, exprs};
    return permanent_mod(evaluate(M), p);
}

std::vector<int> all_rows(const Graph& g) {
    std::vector<int> rows(static_cast<size_t>(g.m()));
    for (int i = 0; i < g.m(); ++i) rows[static_cast<size_t>(i)] = i;
    return rows;
}

// Edges at v sorted by edge id; adjacency is sorted by neighbor, which only
// coincides with edge order when the edge list itself is sorted.
std::vector<std::pair<int, int>> edges_at(const Graph& g, int v) {
    std::vector<std::pair<int, int>> out;  // (edge id, other endpoint)
    for (auto [w, e] : g.adj[static_cast<size_t>(v)]) out.emplace_back(e, w);
    std::sort(out.begin(), out.end());
    return out;
}

uint32_t mod_u32(const bigint& x, uint32_t p) {
    bigint r = x % p;
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

uint32_t factorial_mod(int x, uint32_t p) {
    uint64_t f = 1;
    for (int i = 2; i <= x; ++i) f = f * static_cast<uint64_t>(i) % p;
    return static_cast<uint32_t>(f);
}

uint32_t powmod_u32(uint32_t b, uint64_t e, uint32_t p) {
    uint64_t acc = 1 % p, cur = b % p;
    while (e) {
        if (e & 1) acc = acc * cur % p;
        cur = cur * cur % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

Certificate make_cert(const Graph& g, std::string method, uint32_t p, uint32_t residue,
                      IndexFunction eta, Tracer tr) {
    return Certificate{fingerprint(g), std::move(method), p, residue, std::move(eta),
                       std::move(tr.steps)};
}

}  // namespace

Fingerprint fingerprint(const Graph& g) {
    std::vector<std::pair<int, int>> edges = g.edges;
    std::sort(edges.begin(), edges.end());
    uint64_t h = 14695981039346656037ull;
    auto feed32 = [&h](uint32_t x) {
        for (int i = 0; i < 4; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    feed32(static_cast<uint32_t>(g.n));
    feed32(static_cast<uint32_t>(edges.size()));
    for (auto [u, v] : edges) {
        feed32(static_cast<uint32_t>(u));
        feed32(static_cast<uint32_t>(v));
    }
    return {g.n, static_cast<int>(edges.size()), h};
}

// ---- column expressions from odd structures ----

ColumnExpr double_vertex_as_edges(const Graph& g, const DiffMatrix& A, int v,
                                  const OddClosedWalk& cycle) {
    const size_t len = cycle.vertices.size();
    auto on_cycle = std::find(cycle.vertices.begin(), cycle.vertices.end(), v);

    ColumnExpr expr;
    if (on_cycle != cycle.vertices.end()) {
        // Alternating +-1 around the odd cycle starting at v's outgoing edge;
        // interior vertices cancel, v survives twice (first and last edge).
        size_t start = static_cast<size_t>(on_cycle - cycle.vertices.begin());
        for (size_t j = 0; j < len; ++j) {
            int e = cycle.edges[(start + j) % len];
            expr = expr_add(expr, {{Sym::edge(g, e), 1}}, j % 2 == 0 ? 1 : -1);
        }
    } else {
        // BFS from v to the nearest cycle vertex, then telescope +-2 along
        // the path into the cycle expression at the landing vertex.
        std::vector<char> inc(static_cast<size_t>(g.n), 0);
        for (int c : cycle.vertices) inc[static_cast<size_t>(c)] = 1;
        std::vector<int> parent(static_cast<size_t>(g.n), -2);
        parent[static_cast<size_t>(v)] = -1;
        std::queue<int> q;
        q.push(v);
        int tgt = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (inc[static_cast<size_t>(u)]) {
                tgt = u;
                break;
            }
            for (auto [w, e] : g.adj[static_cast<size_t>(u)])
                if (parent[static_cast<size_t>(w)] == -2) {
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                }
        }
        if (tgt < 0) throw internal_error("vertex cannot reach the odd cycle");
        std::vector<int> path{tgt};
        while (parent[static_cast<size_t>(path.back())] != -1)
            path.push_back(parent[static_cast<size_t>(path.back())]);
        std::reverse(path.begin(), path.end());  // v .. tgt
        const int t = static_cast<int>(path.size()) - 1;
        for (int j = 0; j < t; ++j) {
            int e = -1;
            for (auto [w, f] : g.adj[static_cast<size_t>(path[static_cast<size_t>(j)])])
                if (w == path[static_cast<size_t>(j + 1)]) e = f;
            expr = expr_add(expr, {{Sym::edge(g, e), 1}}, j % 2 == 0 ? 2 : -2);
        }
        ColumnExpr sub = double_vertex_as_edges(g, A, tgt, cycle);
        expr = expr_add(expr, sub, t % 2 == 0 ? 1 : -1);
    }

    std::vector<long long> got = evaluate_column(A, expr);
    for (int r = 0; r < g.m(); ++r)
        if (got[static_cast<size_t>(r)] != 2 * A.at(r, v))
            throw internal_error("doubled-vertex expression mismatch at vertex " + std::to_string(v));
    return expr;
}

PairExpr pair_as_edges(const Graph& g, const DiffMatrix& A, int x, int y) {
    ParityPath path = parity_path(g, x, y);
    ColumnExpr expr;
    for (size_t j = 0; j < path.edges.size(); ++j)
        expr = expr_add(expr, {{Sym::edge(g, path.edges[j]), 1}}, j % 2 == 0 ? 1 : -1);
    const bool sum_form = path.odd_length;
    std::vector<long long> got = evaluate_column(A, expr);
    for (int r = 0; r < g.m(); ++r) {
        long long want = A.at(r, x) + (sum_form ? A.at(r, y) : -A.at(r, y));
        if (got[static_cast<size_t>(r)] != want)
            throw internal_error("pair expression mismatch for vertices " + std::to_string(x) +
                                 "," + std::to_string(y));
    }
    return {std::move(expr), sum_form};
}

// ---- edge-only certificates mod an odd prime k > d ----

CertifyOutcome certify_1k(const Graph& g, uint32_t k, int d) {
    if (d < 1) throw error("certify_1k: degeneracy bound must be positive");
    if (!is_prime_u32(k)) throw error("certify_1k: k must be prime");
    if (k <= static_cast<uint32_t>(d)) throw error("certify_1k: k must exceed the degeneracy bound");
    if (g.n == 0) return {NotCertified{"empty graph", {}}};
    if (!is_connected(g)) return {NotCertified{"not connected", {}}};
    auto [dd, whole_order] = degeneracy_ordering(g);
    if (dd > d)
        return {NotCertified{"degeneracy " + std::to_string(dd) + " exceeds " + std::to_string(d), {}}};

    DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
    Tracer tr;
    auto branch = bipartition_or_odd_cycle(g);

    std::vector<ColumnExpr> exprs;
    std::string method;
    if (auto* cyc = std::get_if<OddClosedWalk>(&branch)) {
        method = "L2.3-nonbip";
        tr.add("odd-cycle", join_ints(cyc->vertices));
        tr.add("ordering", join_ints(whole_order.order));
        for (size_t i = 0; i < whole_order.order.size(); ++i) {
            int v = whole_order.order[i];
            if (whole_order.back_degree[i] == 0) continue;
            ColumnExpr ex = double_vertex_as_edges(g, A, v, *cyc);
            tr.add("column", "2v" + std::to_string(v) + " = " + expr_to_string(g, ex) + " x" +
                                 std::to_string(whole_order.back_degree[i]));
            for (int t = 0; t < whole_order.back_degree[i]; ++t) exprs.push_back(ex);
        }
    } else {
        method = "L2.3-bip";
        auto lp = find_light_pair(g, static_cast<int>(k));
        if (!lp) return {NotCertified{"bipartite with no light pair below " + std::to_string(k), {}}};
        auto [u, v] = *lp;
        tr.add("light-pair", std::to_string(u) + " " + std::to_string(v));

        // Ordering of G - {u,v}; expressions live in G itself.
        std::vector<int> rest, remap(static_cast<size_t>(g.n), -1);
        for (int x = 0; x < g.n; ++x)
            if (x != u && x != v) {
                remap[static_cast<size_t>(x)] = static_cast<int>(rest.size());
                rest.push_back(x);
            }
        std::vector<std::pair<int, int>> sub_edges;
        for (auto [a, b] : g.edges)
            if (a != u && a != v && b != u && b != v)
                sub_edges.emplace_back(remap[static_cast<size_t>(a)], remap[static_cast<size_t>(b)]);
        std::vector<int> order;
        std::vector<int> back;
        if (!rest.empty()) {
            Graph sub = make_graph(static_cast<int>(rest.size()), std::move(sub_edges));
            auto [sdd, sord] = degeneracy_ordering(sub);
            if (sdd > d) throw internal_error("subgraph degeneracy exceeds the bound");
            for (int x : sord.order) order.push_back(rest[static_cast<size_t>(x)]);
            back = sord.back_degree;
        }
        tr.add("ordering", join_ints(order));
        for (size_t i = 0; i < order.size(); ++i) {
            if (back[i] == 0) continue;
            PairExpr pe = pair_as_edges(g, A, order[i], v);
            tr.add("column", "v" + std::to_string(order[i]) + (pe.sum_form ? "+" : "-") + "v" +
                                 std::to_string(v) + " = " + expr_to_string(g, pe.expr) + " x" +
                                 std::to_string(back[i]));
            for (int t = 0; t < back[i]; ++t) exprs.push_back(pe.expr);
        }
        const int dprime = g.degree(u) + g.degree(v);
        if (dprime) {
            PairExpr pe = pair_as_edges(g, A, u, v);
            tr.add("column", "v" + std::to_string(u) + (pe.sum_form ? "+" : "-") + "v" +
                                 std::to_string(v) + " = " + expr_to_string(g, pe.expr) + " x" +
                                 std::to_string(dprime));
            for (int t = 0; t < dprime; ++t) exprs.push_back(pe.expr);
        }
    }
    if (static_cast<int>(exprs.size()) != g.m())
        throw internal_error("generated matrix is not square");

    GenMatrix M{&A, all_rows(g), exprs};
    uint32_t rg = permanent_mod(evaluate(M), k);
    if (rg == 0)
        throw internal_error("generated matrix permanent vanished mod k against the product law");
    tr.add("gen-residue", std::to_string(rg) + " mod " + std::to_string(k));

    std::vector<ResolvePick> picks;
    IndexFunction eta = resolve_nonzero_selection(g, M, k, &picks);
    for (auto& pk : picks)
        tr.add("resolve", "col " + std::to_string(pk.col) + " -> " +
                              expr_to_string(g, {{pk.z, pk.coef}}));
    for (int v = 0; v < g.n; ++v)
        if (eta.vertices[static_cast<size_t>(v)] != 0)
            throw internal_error("edge-only resolution kept a vertex column");
    for (int e = 0; e < g.m(); ++e)
        if (eta.edges[static_cast<size_t>(e)] >= static_cast<int>(k))
            throw internal_error("edge multiplicity reached k");

    uint32_t residue = permanent_mod(assemble(A, eta), k);
    if (residue == 0) throw internal_error("assembled permanent vanished mod k after resolution");
    tr.add("residue", std::to_string(residue) + " mod " + std::to_string(k));
    return {make_cert(g, method, k, residue, std::move(eta), std::move(tr))};
}

// ---- leaf padding mod d+1 ----

std::variant<Almost12, NotCertified> certify_almost_12(const Graph& g, int d) {
    if (d < 1) throw error("certify_almost_12: d must be positive");
    const uint32_t p = static_cast<uint32_t>(d) + 1;
    if (!is_prime_u32(p)) throw error("certify_almost_12: d+1 must be prime");
    if (g.n == 0) throw error("certify_almost_12: empty graph");
    auto [dd, ord] = degeneracy_ordering(g);
    if (dd > d)
        return {NotCertified{"degeneracy " + std::to_string(dd) + " exceeds " + std::to_string(d), {}}};

    std::vector<int> counts(static_cast<size_t>(g.n), 0);
    std::vector<int> pos(static_cast<size_t>(g.n), 0);
    for (size_t i = 0; i < ord.order.size(); ++i) {
        counts[static_cast<size_t>(ord.order[i])] = d - ord.back_degree[i];
        pos[static_cast<size_t>(ord.order[i])] = static_cast<int>(i);
    }
    LeafAugmented la = add_leaves(g, counts);
    const Graph& g2 = la.g;
    DiffMatrix A = build_diff_matrix(g2, canonical_orientation(g2));

    IndexFunction eta = zero_index_function(g2);
    for (int v = 0; v < g.n; ++v) eta.vertices[static_cast<size_t>(v)] = counts[static_cast<size_t>(v)];
    for (int e = 0; e < g.m(); ++e) eta.edges[static_cast<size_t>(e)] = 1;

    Tracer tr;
    tr.add("ordering", join_ints(ord.order));
    tr.add("graph", to_edgelist(g2));

    // Every original edge row is consumed at its later endpoint, every pendant
    // row at its anchor; peeling the ordering backwards leaves one d-by-d
    // block of equal columns per vertex, hence per = sign * (d!)^n.
    int sign = 1;
    for (int e = 0; e < g2.m(); ++e) {
        auto [a, b] = g2.edges[static_cast<size_t>(e)];
        int at;
        if (e < g.m())
            at = pos[static_cast<size_t>(a)] > pos[static_cast<size_t>(b)] ? a : b;
        else
            at = a < g.n ? a : b;
        sign *= A.at(e, at);
    }
    uint32_t closed = powmod_u32(factorial_mod(d, p), static_cast<uint64_t>(g.n), p);
    if (sign < 0) closed = p - closed;
    tr.add("closed-form", std::string(sign < 0 ? "-" : "+") + "(" + std::to_string(d) + "!)^" +
                              std::to_string(g.n) + " = " + std::to_string(closed) + " mod " +
                              std::to_string(p));

    const int dim = g2.m();
    const bool direct = dim <= permanent_dim_cap();
    const bool step_checks = dim <= 20;
    uint32_t r0 = closed;
    if (direct) {
        r0 = permanent_mod(assemble(A, eta), p);
        if (r0 != closed) throw internal_error("padded permanent disagrees with the closed form");
    }
    if (r0 == 0) throw internal_error("padded permanent vanished mod d+1");

    // Replay: step i swaps each back-edge column of v_i for a copy of
    // col(v_i). Each step preserves the permanent mod p because the swapped-in
    // excess always rides on a vertex that already owns d copies.
    std::vector<ColumnExpr> exprs = plain_exprs(g2, eta);
    const int vertex_cols = d * g.n - g.m();
    std::vector<int> count_v = counts;
    const std::vector<int> rows = all_rows(g2);
    uint32_t prev = r0;
    for (size_t i = 0; i < ord.order.size(); ++i) {
        int v = ord.order[i];
        std::vector<int> swapped;
        for (auto [e, w] : edges_at(g, v)) {
            if (pos[static_cast<size_t>(w)] >= static_cast<int>(i)) continue;
            if (count_v[static_cast<size_t>(w)] != d)
                throw internal_error("replay: earlier vertex below d copies");
            exprs[static_cast<size_t>(vertex_cols + e)] = {{Sym::vertex(v), 1}};
            ++count_v[static_cast<size_t>(v)];
            swapped.push_back(e);
        }
        if (count_v[static_cast<size_t>(v)] != d)
            throw internal_error("replay: vertex did not reach d copies");
        if (step_checks) {
            uint32_t ri = pm_exprs(A, rows, exprs, p);
            if (ri != prev) throw internal_error("replay step changed the residue");
            prev = ri;
            tr.add("replay", "v" + std::to_string(v) + ": edges " + join_ints(swapped) +
                                 " -> v" + std::to_string(v) + "; residue " + std::to_string(ri));
        } else {
            tr.add("replay", "v" + std::to_string(v) + ": edges " + join_ints(swapped) +
                                 " -> v" + std::to_string(v) + "; structural");
        }
    }
    tr.add("residue", std::to_string(r0) + " mod " + std::to_string(p));

    Almost12 out{g2, la.leaf_anchor, ord, make_cert(g2, "T3.3", p, r0, std::move(eta), std::move(tr))};
    return {std::move(out)};
}

// ---- pruning padded leaves back out ----

namespace {

int leaf_edge_of(const Graph& g, int leaf) {
    if (g.degree(leaf) != 1) throw error("prune_leaves: vertex " + std::to_string(leaf) + " is not a leaf");
    return g.adj[static_cast<size_t>(leaf)][0].second;
}

bigint exact_per(const DiffMatrix& A, const IndexFunction& eta) {
    return permanent_exact(assemble(A, eta));
}

IndexFunction all_edges_eta(const Graph& g) {
    IndexFunction eta = zero_index_function(g);
    for (auto& x : eta.edges) x = 1;
    return eta;
}

}  // namespace

PruneResult prune_leaves(const Graph& gprime, const IndexFunction& eta,
                         const std::vector<int>& leaves) {
    std::vector<int> X = leaves;
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    if (X.size() > 16) throw error("prune_leaves: more than 16 leaves");
    if (!eta.valid_for(gprime)) throw error("prune_leaves: index function does not fit the graph");

    std::vector<char> in_x(static_cast<size_t>(gprime.n), 0);
    std::vector<char> is_leaf_edge(static_cast<size_t>(gprime.m()), 0);
    for (int x : X) {
        if (x < 0 || x >= gprime.n) throw error("prune_leaves: leaf out of range");
        in_x[static_cast<size_t>(x)] = 1;
        is_leaf_edge[static_cast<size_t>(leaf_edge_of(gprime, x))] = 1;
    }
    for (int v = 0; v < gprime.n; ++v) {
        int want = 0;
        if (in_x[static_cast<size_t>(v)]) {
            want = 0;
        } else {
            for (auto [w, e] : gprime.adj[static_cast<size_t>(v)])
                if (in_x[static_cast<size_t>(w)]) ++want;
        }
        if (eta.vertices[static_cast<size_t>(v)] != want)
            throw error("prune_leaves: eta mismatch at vertex " + std::to_string(v));
    }
    for (int e = 0; e < gprime.m(); ++e)
        if (eta.edges[static_cast<size_t>(e)] != (is_leaf_edge[static_cast<size_t>(e)] ? 0 : 1))
            throw error("prune_leaves: eta mismatch at edge " + std::to_string(e));

    Tracer tr;
    Graph cur = gprime;
    IndexFunction cur_eta = eta;
    std::vector<int> cur_x = X;
    std::vector<int> orig(static_cast<size_t>(gprime.n));
    for (int v = 0; v < gprime.n; ++v) orig[static_cast<size_t>(v)] = v;
    std::vector<int> removed;

    DiffMatrix A = build_diff_matrix(cur, canonical_orientation(cur));
    if (exact_per(A, cur_eta) == 0)
        throw error("prune_leaves: permanent is zero, nothing to preserve");

    bigint perB;
    IndexFunction etaB;
    for (;;) {
        etaB = all_edges_eta(cur);
        perB = exact_per(A, etaB);
        tr.add("prune", "per(all-edges) = " + perB.str());
        if (perB != 0) break;

        const int t = static_cast<int>(cur_x.size());
        if (t == 0) throw internal_error("prune_leaves: zero permanent with no leaves left");
        bool found = false;
        for (uint32_t c = 1; c < (1u << t) && !found; ++c) {
            IndexFunction eta2 = cur_eta;
            std::vector<int> z;
            for (int i = 0; i < t; ++i)
                if (c >> (t - 1 - i) & 1) {
                    int x = cur_x[static_cast<size_t>(i)];
                    z.push_back(x);
                    eta2.vertices[static_cast<size_t>(x)] = 1;
                    int av = cur.adj[static_cast<size_t>(x)][0].first;
                    if (--eta2.vertices[static_cast<size_t>(av)] < 0)
                        throw internal_error("prune_leaves: anchor count went negative");
                }
            bigint p2 = exact_per(A, eta2);
            if (p2 == 0) continue;
            found = true;

            std::vector<int> z_orig;
            for (int x : z) z_orig.push_back(orig[static_cast<size_t>(x)]);
            tr.add("prune", "mask " + std::to_string(c) + " moves weight onto leaves " +
                                join_ints(z_orig) + "; per = " + p2.str());
            for (int x : z_orig) removed.push_back(x);

            // Delete the chosen leaves; each sits alone in its pendant row,
            // so the permanent survives up to sign.
            std::vector<char> gone(static_cast<size_t>(cur.n), 0);
            for (int x : z) gone[static_cast<size_t>(x)] = 1;
            std::vector<int> keep, remap(static_cast<size_t>(cur.n), -1);
            for (int v = 0; v < cur.n; ++v)
                if (!gone[static_cast<size_t>(v)]) {
                    remap[static_cast<size_t>(v)] = static_cast<int>(keep.size());
                    keep.push_back(v);
                }
            std::vector<std::pair<int, int>> new_edges;
            IndexFunction eta3;
            for (int v : keep) {
                eta3.vertices.push_back(eta2.vertices[static_cast<size_t>(v)]);
            }
            for (int e = 0; e < cur.m(); ++e) {
                auto [a, b] = cur.edges[static_cast<size_t>(e)];
                if (gone[static_cast<size_t>(a)] || gone[static_cast<size_t>(b)]) continue;
                new_edges.emplace_back(remap[static_cast<size_t>(a)], remap[static_cast<size_t>(b)]);
                eta3.edges.push_back(eta2.edges[static_cast<size_t>(e)]);
            }
            std::vector<int> next_x;
            for (int x : cur_x)
                if (!gone[static_cast<size_t>(x)]) next_x.push_back(remap[static_cast<size_t>(x)]);
            std::vector<int> next_orig;
            for (int v : keep) next_orig.push_back(orig[static_cast<size_t>(v)]);

            cur = make_graph(static_cast<int>(keep.size()), std::move(new_edges));
            cur_eta = std::move(eta3);
            cur_x = std::move(next_x);
            orig = std::move(next_orig);
            A = build_diff_matrix(cur, canonical_orientation(cur));
        }
        if (!found) throw internal_error("prune_leaves: leaf family exhausted without a nonzero member");
    }

    uint32_t p = 2;
    while (mod_u32(perB, p) == 0) {
        ++p;
        while (!is_prime_u32(p)) ++p;
        if (p > 10000) throw internal_error("prune_leaves: permanent divisible by every table prime");
    }
    uint32_t residue = mod_u32(perB, p);
    tr.add("removed", join_ints(removed));
    tr.add("graph", to_edgelist(cur));
    tr.add("residue", std::to_string(residue) + " mod " + std::to_string(p));

    std::sort(removed.begin(), removed.end());
    return PruneResult{std::move(removed), cur,
                       make_cert(cur, "L3.4-prune", p, residue, std::move(etaB), std::move(tr))};
}

std::variant<Supergraph12, NotCertified> certify_12_supergraph(const Graph& g, int d) {
    // The all-edges matrix of G itself may already be nonsingular (even-edge
    // trees always are); then no padding is needed and nothing is removed.
    if (g.n >= 1 && g.m() <= permanent_dim_cap()) {
        auto [dd, o] = degeneracy_ordering(g);
        if (dd > d)
            return {NotCertified{"degeneracy " + std::to_string(dd) + " exceeds " + std::to_string(d), {}}};
        DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
        if (permanent_exact(assemble(A, all_edges_eta(g))) != 0) {
            PruneResult pr = prune_leaves(g, all_edges_eta(g), {});
            return {Supergraph12{g, {}, pr.g, std::move(pr.cert)}};
        }
    }

    auto alm = certify_almost_12(g, d);
    if (auto* nc = std::get_if<NotCertified>(&alm)) return {std::move(*nc)};
    Almost12& a = std::get<Almost12>(alm);

    std::vector<int> leaves;
    for (int v = g.n; v < a.gprime.n; ++v) leaves.push_back(v);
    PruneResult pr = prune_leaves(a.gprime, a.cert.eta, leaves);

    // The reduced graph must still contain G: only padded leaves were removed,
    // and they carry the largest labels, so the original vertices and the
    // original edge prefix are untouched.
    if (pr.g.n < g.n || pr.g.m() < g.m()) throw internal_error("pruned graph lost part of the input");
    for (int e = 0; e < g.m(); ++e)
        if (pr.g.edges[static_cast<size_t>(e)] != g.edges[static_cast<size_t>(e)])
            throw internal_error("pruned graph reordered the input edges");

    return {Supergraph12{std::move(a.gprime), std::move(pr.removed), std::move(pr.g),
                         std::move(pr.cert)}};
}

// ---- pendant-row discharge walk ----

namespace {

// Rewrites a closed odd-ended walk segment w_s..w_p (closing back to w_s):
// swap one copy of w_{s+1} for the entering edge e_s, then express each later
// cycle vertex through its predecessor, and w_s through the closing edge.
std::vector<ColumnExpr> cycle_rewrite(const Graph& g2, const DiffMatrix& A, IndexFunction eta,
                                      const std::vector<int>& cwalk, const std::vector<int>& cpicked,
                                      uint32_t p, const std::vector<int>& rows, Tracer& tr) {
    const int ws1 = cwalk[1];
    const int es = cpicked[0];
    spend(eta, g2, Sym::vertex(ws1), "cycle swap");
    ++eta.edges[static_cast<size_t>(es)];
    if (pm_eta(A, g2, eta, rows, p) == 0)
        throw internal_error("cycle swap lost the nonzero permanent");
    tr.add("swap", "v" + std::to_string(ws1) + " -> e" + std::to_string(es));

    std::vector<ColumnExpr> exprs = plain_exprs(g2, eta);
    auto remove_one = [&exprs, &g2](int v) {
        for (size_t i = 0; i < exprs.size(); ++i)
            if (exprs[i].size() == 1 && exprs[i][0].first == Sym::vertex(v) &&
                exprs[i][0].second == 1) {
                exprs.erase(exprs.begin() + static_cast<long>(i));
                return;
            }
        throw internal_error("cycle rewrite: missing plain column for v" + std::to_string(v));
    };
    std::vector<ColumnExpr> outs;
    const size_t plen = cwalk.size();
    for (size_t t = 2; t < plen; ++t) {
        remove_one(cwalk[t]);
        outs.push_back(expr_add({{Sym::vertex(cwalk[t - 1]), -1}},
                                {{Sym::edge(g2, cpicked[t - 1]), 1}}));
        tr.add("rewrite", "v" + std::to_string(cwalk[t]) + " <- e" + std::to_string(cpicked[t - 1]) +
                              " - v" + std::to_string(cwalk[t - 1]));
    }
    remove_one(cwalk[0]);
    outs.push_back(expr_add({{Sym::vertex(cwalk.back()), -1}},
                            {{Sym::edge(g2, cpicked.back()), 1}}));
    tr.add("rewrite", "v" + std::to_string(cwalk[0]) + " <- e" + std::to_string(cpicked.back()) +
                          " - v" + std::to_string(cwalk.back()));
    for (auto& ex : outs) exprs.push_back(std::move(ex));
    return exprs;
}

}  // namespace

CertifyOutcome certify_d2(const Graph& g, int d) {
    if (d < 2) throw error("certify_d2: d must be at least 2");
    const uint32_t p = static_cast<uint32_t>(d) + 1;
    if (!is_prime_u32(p)) throw error("certify_d2: d+1 must be prime");
    if (g.n == 0) throw error("certify_d2: empty graph");
    if (!is_connected(g)) throw error("certify_d2: graph must be connected");
    {
        auto [dd, o] = degeneracy_ordering(g);
        if (dd > d)
            return {NotCertified{"degeneracy " + std::to_string(dd) + " exceeds " + std::to_string(d), {}}};
    }

    VertexOrdering ord = connected_positive_ordering(g, d);
    std::vector<int> counts(static_cast<size_t>(g.n), 0);
    for (size_t i = 0; i < ord.order.size(); ++i)
        counts[static_cast<size_t>(ord.order[i])] = d - ord.back_degree[i];
    LeafAugmented la = add_leaves(g, counts);
    const Graph& g2 = la.g;
    DiffMatrix A = build_diff_matrix(g2, canonical_orientation(g2));

    Tracer tr;
    tr.add("ordering", join_ints(ord.order));

    IndexFunction etai = zero_index_function(g2);
    for (int v = 0; v < g.n; ++v) etai.vertices[static_cast<size_t>(v)] = counts[static_cast<size_t>(v)];
    for (int e = 0; e < g.m(); ++e) etai.edges[static_cast<size_t>(e)] = 1;

    std::vector<std::vector<int>> added_at(static_cast<size_t>(g.n));
    for (int e = g.m(); e < g2.m(); ++e) {
        auto [a, b] = g2.edges[static_cast<size_t>(e)];
        added_at[static_cast<size_t>(a < g.n ? a : b)].push_back(e);
    }

    std::vector<int> rows = all_rows(g2);
    std::vector<char> used(static_cast<size_t>(g2.m()), 0);
    auto drop_row = [&rows](int e) { rows.erase(std::find(rows.begin(), rows.end(), e)); };

    enum class Mode { Vertex0, Vertex, Edge, Closure };
    Mode mode{};
    ColumnExpr term;
    std::vector<int> walk{ord.order[0]};
    std::vector<int> picked;
    int s_idx = -1;

    // Consume one pendant row per step. Expanding the permanent along that
    // row shows some incident symbol keeps it nonzero mod p; taking the
    // vertex or closing a structure ends the walk.
    for (int guard = 0;; ++guard) {
        if (guard > g.n + 1) throw internal_error("walk exceeded the vertex count");
        const int w = walk.back();
        int ep = -1;
        for (int e : added_at[static_cast<size_t>(w)])
            if (!used[static_cast<size_t>(e)]) {
                ep = e;
                break;
            }
        if (ep < 0) throw internal_error("walk found no pendant row at v" + std::to_string(w));
        used[static_cast<size_t>(ep)] = 1;
        drop_row(ep);

        bool took_vertex = false;
        int took_edge = -1;
        if (etai.vertices[static_cast<size_t>(w)] >= 1) {
            IndexFunction t = etai;
            --t.vertices[static_cast<size_t>(w)];
            if (pm_eta(A, g2, t, rows, p) != 0) took_vertex = true;
        }
        if (!took_vertex) {
            for (auto [e, x] : edges_at(g2, w)) {
                if (e >= g.m() || etai.edges[static_cast<size_t>(e)] < 1) continue;
                IndexFunction t = etai;
                t.edges[static_cast<size_t>(e)] = 0;
                if (pm_eta(A, g2, t, rows, p) != 0) {
                    took_edge = e;
                    break;
                }
            }
        }
        if (!took_vertex && took_edge < 0) throw internal_error("walk stuck at v" + std::to_string(w));

        if (took_vertex) {
            --etai.vertices[static_cast<size_t>(w)];
            const int i = static_cast<int>(walk.size()) - 1;
            tr.add("walk", "row e" + std::to_string(ep) + " takes v" + std::to_string(w));
            if (i == 0) {
                mode = Mode::Vertex0;
            } else {
                mode = Mode::Vertex;
                term.clear();
                for (size_t j = 0; j < picked.size(); ++j)
                    term = expr_add(term, {{Sym::edge(g2, picked[j]), 1}}, j % 2 == 0 ? 1 : -1);
                term = expr_add(term, {{Sym::vertex(w), 1}}, i % 2 == 0 ? 1 : -1);
            }
            break;
        }

        etai.edges[static_cast<size_t>(took_edge)] = 0;
        auto [a, b] = g2.edges[static_cast<size_t>(took_edge)];
        const int wn = a == w ? b : a;
        if (wn == walk.back() || (walk.size() >= 2 && wn == walk[walk.size() - 2]))
            throw internal_error("walk doubled back");
        tr.add("walk", "row e" + std::to_string(ep) + " takes e" + std::to_string(took_edge) +
                           " toward v" + std::to_string(wn));

        auto prev_hit = std::find(walk.begin(), walk.end() - 1, wn);
        if (prev_hit != walk.end() - 1) {
            picked.push_back(took_edge);
            mode = Mode::Closure;
            s_idx = static_cast<int>(prev_hit - walk.begin());
            tr.add("walk", "closure at v" + std::to_string(wn) + " (position " +
                               std::to_string(s_idx + 1) + ")");
            break;
        }
        if (etai.vertices[static_cast<size_t>(wn)] <= d - 2) {
            const int i = static_cast<int>(walk.size()) - 1;
            picked.push_back(took_edge);
            mode = Mode::Edge;
            term.clear();
            for (size_t j = 0; j < picked.size(); ++j)
                term = expr_add(term, {{Sym::edge(g2, picked[j]), 1}}, j % 2 == 0 ? 1 : -1);
            term = expr_add(term, {{Sym::vertex(wn), 1}}, (i + 1) % 2 == 0 ? 1 : -1);
            break;
        }
        walk.push_back(wn);
        picked.push_back(took_edge);
    }

    const int w1 = ord.order[0];
    std::vector<ColumnExpr> exprs;
    switch (mode) {
        case Mode::Vertex0:
            exprs = plain_exprs(g2, etai);
            break;
        case Mode::Vertex:
        case Mode::Edge: {
            IndexFunction e2 = etai;
            spend(e2, g2, Sym::vertex(w1), "terminal rewrite");
            exprs = plain_exprs(g2, e2);
            exprs.push_back(term);
            tr.add("terminal", "v" + std::to_string(w1) + " <- " + expr_to_string(g2, term));
            break;
        }
        case Mode::Closure: {
            const int s = s_idx + 1;
            std::vector<int> cwalk(walk.begin() + s_idx, walk.end());
            std::vector<int> cpicked(picked.begin() + s_idx, picked.end());
            if (s >= 2) {
                IndexFunction e2 = etai;
                spend(e2, g2, Sym::vertex(w1), "closure path rewrite");
                ColumnExpr pathx;
                for (int j = 0; j < s - 1; ++j)
                    pathx = expr_add(pathx, {{Sym::edge(g2, picked[static_cast<size_t>(j)]), 1}},
                                     j % 2 == 0 ? 1 : -1);
                pathx = expr_add(pathx, {{Sym::vertex(walk[static_cast<size_t>(s_idx)]), 1}},
                                 (s - 1) % 2 == 0 ? 1 : -1);
                tr.add("terminal", "v" + std::to_string(w1) + " <- " + expr_to_string(g2, pathx));

                std::vector<ColumnExpr> base = plain_exprs(g2, e2);
                Sym got{};
                int got_c = 0;
                bool found = false;
                for (auto& [z, c] : pathx) {  // sorted: the closing vertex comes first
                    base.push_back({{z, c}});
                    if (pm_exprs(A, rows, base, p) != 0) {
                        got = z;
                        got_c = c;
                        found = true;
                        base.pop_back();
                        break;
                    }
                    base.pop_back();
                }
                if (!found) throw internal_error("closure path had no nonzero branch");
                tr.add("resolve", "path column -> " + expr_to_string(g2, {{got, got_c}}));
                if (!got.is_vertex(g2)) {
                    ++e2.of(g2, got);
                    exprs = plain_exprs(g2, e2);
                } else {
                    if (got.id != walk[static_cast<size_t>(s_idx)])
                        throw internal_error("closure path resolved to a foreign vertex");
                    ++e2.of(g2, got);
                    exprs = cycle_rewrite(g2, A, e2, cwalk, cpicked, p, rows, tr);
                }
            } else {
                exprs = cycle_rewrite(g2, A, etai, cwalk, cpicked, p, rows, tr);
            }
            break;
        }
    }

    std::vector<ResolvePick> picks;
    IndexFunction eta_h = resolve_nonzero_selection(g2, GenMatrix{&A, rows, exprs}, p, &picks);
    for (auto& pk : picks)
        tr.add("resolve", "col " + std::to_string(pk.col) + " -> " +
                              expr_to_string(g2, {{pk.z, pk.coef}}));

    // Discharge the remaining pendant rows the same way the walk did.
    std::vector<int> remaining;
    for (int r : rows)
        if (r >= g.m()) remaining.push_back(r);
    for (int e : remaining) {
        auto [a, b] = g2.edges[static_cast<size_t>(e)];
        const int av = a < g.n ? a : b;
        std::vector<int> rows2 = rows;
        rows2.erase(std::find(rows2.begin(), rows2.end(), e));
        Sym pick{};
        bool found = false;
        if (eta_h.vertices[static_cast<size_t>(av)] >= 1) {
            IndexFunction t = eta_h;
            --t.vertices[static_cast<size_t>(av)];
            if (pm_eta(A, g2, t, rows2, p) != 0) {
                pick = Sym::vertex(av);
                found = true;
            }
        }
        if (!found) {
            for (auto [ej, x] : edges_at(g2, av)) {
                if (eta_h.edges[static_cast<size_t>(ej)] < 1) continue;
                IndexFunction t = eta_h;
                --t.edges[static_cast<size_t>(ej)];
                if (pm_eta(A, g2, t, rows2, p) != 0) {
                    pick = Sym::edge(g2, ej);
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw internal_error("pendant discharge stuck at row e" + std::to_string(e));
        spend(eta_h, g2, pick, "pendant discharge");
        rows = std::move(rows2);
        tr.add("peel", "row e" + std::to_string(e) + " takes " + sym_name(g2, pick));
    }

    if (static_cast<int>(rows.size()) != g.m()) throw internal_error("leftover rows after discharge");
    for (int i = 0; i < g.m(); ++i)
        if (rows[static_cast<size_t>(i)] != i) throw internal_error("discharge touched an original row");

    IndexFunction eta = zero_index_function(g);
    long long tot = 0;
    for (int v = 0; v < g2.n; ++v) {
        int c = eta_h.vertices[static_cast<size_t>(v)];
        if (v >= g.n && c != 0) throw internal_error("weight stranded on a padded leaf");
        if (v < g.n) eta.vertices[static_cast<size_t>(v)] = c;
        tot += c;
    }
    for (int e = 0; e < g2.m(); ++e) {
        int c = eta_h.edges[static_cast<size_t>(e)];
        if (e >= g.m() && c != 0) throw internal_error("weight stranded on a padded edge");
        if (e < g.m()) eta.edges[static_cast<size_t>(e)] = c;
        tot += c;
    }
    if (tot != g.m()) throw internal_error("final index function has wrong total");
    for (int v = 0; v < g.n; ++v)
        if (eta.vertices[static_cast<size_t>(v)] > d - 1)
            throw internal_error("vertex weight exceeded d-1");
    for (int e = 0; e < g.m(); ++e)
        if (eta.edges[static_cast<size_t>(e)] > 1) throw internal_error("edge weight exceeded 1");

    DiffMatrix Ag = build_diff_matrix(g, canonical_orientation(g));
    uint32_t residue = permanent_mod(assemble(Ag, eta), p);
    if (residue == 0) throw internal_error("final permanent vanished mod d+1");
    tr.add("residue", std::to_string(residue) + " mod " + std::to_string(p));
    return {make_cert(g, "T4.1", p, residue, std::move(eta), std::move(tr))};
}

// ---- orientations ----

Certificate certify_orientation(const Graph& g, const Orientation& dir) {
    check_orients(g, dir);
    DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
    std::vector<int> dplus(static_cast<size_t>(g.n), 0);
    for (auto [t, h] : dir.arcs) {
        (void)h;
        ++dplus[static_cast<size_t>(t)];
    }
    Tracer tr;
    {
        std::string arcs;
        for (size_t i = 0; i < dir.arcs.size(); ++i) {
            if (i) arcs += ' ';
            arcs += std::to_string(dir.arcs[i].first) + ">" + std::to_string(dir.arcs[i].second);
        }
        tr.add("orientation", arcs);
    }
    int maxd = 0;
    for (int x : dplus) maxd = std::max(maxd, x);

    if (auto topo = topological_order(g, dir)) {
        // Peeling sources first consumes each edge row at its tail, leaving
        // one block of equal columns per vertex: per = sign * prod outdeg!.
        IndexFunction eta = zero_index_function(g);
        for (int v = 0; v < g.n; ++v) eta.vertices[static_cast<size_t>(v)] = dplus[static_cast<size_t>(v)];
        const uint32_t p = choose_prime(std::max(1, maxd));
        int sign = 1;
        uint64_t mag = 1;
        for (int e = 0; e < g.m(); ++e) sign *= A.at(e, dir.arcs[static_cast<size_t>(e)].first);
        for (int v = 0; v < g.n; ++v)
            mag = mag * factorial_mod(dplus[static_cast<size_t>(v)], p) % p;
        uint32_t closed = static_cast<uint32_t>(mag);
        if (sign < 0) closed = p - closed;
        tr.add("closed-form", std::string(sign < 0 ? "-" : "+") + "prod outdeg! = " +
                                  std::to_string(closed) + " mod " + std::to_string(p));
        uint32_t residue = closed;
        if (g.m() <= permanent_dim_cap()) {
            residue = permanent_mod(assemble(A, eta), p);
            if (residue != closed)
                throw internal_error("acyclic permanent disagrees with the closed form");
        }
        if (residue == 0) throw internal_error("acyclic orientation permanent vanished");
        tr.add("residue", std::to_string(residue) + " mod " + std::to_string(p));
        return make_cert(g, "L5.1", p, residue, std::move(eta), std::move(tr));
    }

    // Cyclic: compare against the acyclic reference orienting every edge from
    // its later position in a degeneracy ordering to the earlier one; its
    // out-degrees are the back degrees. col(tail) = col(e) - col(head) lets
    // each disagreeing arc trade the reference tail for the actual one.
    auto [dd, ord] = degeneracy_ordering(g);
    std::vector<int> pos(static_cast<size_t>(g.n), 0);
    for (size_t i = 0; i < ord.order.size(); ++i) pos[static_cast<size_t>(ord.order[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> ref(static_cast<size_t>(g.m()));
    std::vector<int> refd(static_cast<size_t>(g.n), 0);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[static_cast<size_t>(e)];
        ref[static_cast<size_t>(e)] = pos[static_cast<size_t>(u)] > pos[static_cast<size_t>(v)]
                                          ? std::make_pair(u, v)
                                          : std::make_pair(v, u);
        ++refd[static_cast<size_t>(ref[static_cast<size_t>(e)].first)];
    }
    const uint32_t p = choose_prime(std::max(1, *std::max_element(refd.begin(), refd.end())));
    if (g.m() > permanent_dim_cap())
        throw error("certify_orientation: dimension " + std::to_string(g.m()) +
                    " exceeds the permanent cap");

    std::vector<ColumnExpr> exprs;
    for (int v = 0; v < g.n; ++v)
        for (int t = 0; t < refd[static_cast<size_t>(v)]; ++t)
            exprs.push_back({{Sym::vertex(v), 1}});
    for (int e = 0; e < g.m(); ++e) {
        auto [t, h] = dir.arcs[static_cast<size_t>(e)];
        auto [rt, rh] = ref[static_cast<size_t>(e)];
        if (t == rt && h == rh) continue;
        if (t != rh || h != rt) throw internal_error("arc disagrees with both directions of its edge");
        bool done = false;
        for (auto& ex : exprs)
            if (ex.size() == 1 && ex[0].first == Sym::vertex(rt) && ex[0].second == 1) {
                ex = expr_add({{Sym::vertex(rh), -1}}, {{Sym::edge(g, e), 1}});
                done = true;
                break;
            }
        if (!done) throw internal_error("no reference copy left to rewrite");
        tr.add("flip", "v" + std::to_string(rt) + " <- e" + std::to_string(e) + " - v" +
                           std::to_string(rh));
    }

    std::vector<ResolvePick> picks;
    IndexFunction eta = resolve_nonzero_selection(g, GenMatrix{&A, all_rows(g), exprs}, p, &picks);
    for (auto& pk : picks)
        tr.add("resolve", "col " + std::to_string(pk.col) + " -> " +
                              expr_to_string(g, {{pk.z, pk.coef}}));
    for (int v = 0; v < g.n; ++v)
        if (eta.vertices[static_cast<size_t>(v)] > dplus[static_cast<size_t>(v)])
            throw internal_error("vertex weight exceeded its out-degree");
    for (int e = 0; e < g.m(); ++e)
        if (eta.edges[static_cast<size_t>(e)] > 1) throw internal_error("edge weight exceeded 1");
    uint32_t residue = permanent_mod(assemble(A, eta), p);
    if (residue == 0) throw internal_error("oriented permanent vanished after resolution");
    tr.add("residue", std::to_string(residue) + " mod " + std::to_string(p));
    return make_cert(g, "L5.1", p, residue, std::move(eta), std::move(tr));
}

CertifyOutcome certify_k2_mad(const Graph& g, int k) {
    if (k < 1) throw error("certify_k2_mad: k must be positive");
    auto res = bounded_outdegree_orientation(g, k);
    if (auto* wit = std::get_if<DensityWitness>(&res))
        return {NotCertified{"a subgraph has more than " + std::to_string(k) + " edges per vertex",
                             std::move(wit->vertices)}};
    Certificate c = certify_orientation(g, std::get<Orientation>(res));
    c.method = "C5.2";
    return {std::move(c)};
}

// ---- replay ----

VerifyResult verify_certificate(const Graph& g, const Certificate& c) {
    if (!(fingerprint(g) == c.graph)) return {false, "fingerprint-mismatch"};
    const bool edge_only = c.method == "L2.3-nonbip" || c.method == "L2.3-bip";
    const bool prune = c.method == "L3.4-prune";
    const bool padded = c.method == "T3.3";
    const bool walk = c.method == "T4.1";
    const bool oriented = c.method == "L5.1" || c.method == "C5.2";
    if (!edge_only && !prune && !padded && !walk && !oriented) return {false, "unknown-method"};
    if (!is_prime_u32(c.p)) return {false, "composite-modulus"};
    if (c.residue == 0 || c.residue >= c.p) return {false, "residue-out-of-range"};
    if (static_cast<int>(c.eta.vertices.size()) != g.n ||
        static_cast<int>(c.eta.edges.size()) != g.m())
        return {false, "invalid-eta"};
    for (int x : c.eta.vertices)
        if (x < 0) return {false, "invalid-eta"};
    for (int x : c.eta.edges)
        if (x < 0) return {false, "invalid-eta"};
    if (c.eta.total() != g.m()) return {false, "invalid-eta"};

    const int pi = static_cast<int>(c.p);
    for (int v = 0; v < g.n; ++v) {
        const int x = c.eta.vertices[static_cast<size_t>(v)];
        if ((edge_only || prune) && x != 0) return {false, "eta-bounds"};
        if (padded && x > pi - 1) return {false, "eta-bounds"};
        if (walk && x > pi - 2) return {false, "eta-bounds"};
    }
    for (int e = 0; e < g.m(); ++e) {
        const int x = c.eta.edges[static_cast<size_t>(e)];
        if (edge_only && x > pi - 1) return {false, "eta-bounds"};
        if (prune && x != 1) return {false, "eta-bounds"};
        if ((padded || walk || oriented) && x > 1) return {false, "eta-bounds"};
    }

    if (g.m() > permanent_dim_cap()) return {false, "dim-over-cap"};
    DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
    uint32_t r = permanent_mod(assemble(A, c.eta), c.p);
    if (r != c.residue) return {false, "residue-mismatch"};
    return {true, ""};
}

}  // namespace twc

// Acceptance sweep: one line per criterion, nonzero exit if any fails.
// Run with --bin <path-to-twchoose> so the CLI criteria can shell out.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "twchoose/certify.hpp"
#include "twchoose/json_io.hpp"
#include "twchoose/oracle.hpp"
#include "twchoose/permanent.hpp"
#include "twchoose/solver.hpp"

using namespace twc;

namespace {

std::string g_bin;
bool g_all_ok = true;
std::string g_note;

// First failed expectation wins; later ones keep the criterion red.
struct Req {
    bool ok = true;
    void operator()(bool c, const std::string& what) {
        if (!c && ok) {
            ok = false;
            g_note = what;
        }
    }
};

void criterion(int num, const std::string& label, const std::function<bool()>& body) {
    g_note.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        if (g_note.empty()) g_note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << label;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " (" << secs << "s)";
    if (!ok && !g_note.empty()) line << " [" << g_note << "]";
    std::cout << line.str() << std::endl;
    if (!ok) g_all_ok = false;
}

bigint fact(int k) {
    bigint r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

uint32_t mod_of(const bigint& x, uint32_t p) {
    bigint r = x % p;
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

std::vector<int> rows_of(const Graph& g) {
    std::vector<int> rows(static_cast<size_t>(g.m()));
    for (int e = 0; e < g.m(); ++e) rows[static_cast<size_t>(e)] = e;
    return rows;
}

// All eta with total |E| and the given pointwise cap.
void each_eta(const Graph& g, int cap, const std::function<void(const IndexFunction&)>& f) {
    IndexFunction eta = zero_index_function(g);
    int cols = g.n + g.m();
    std::function<void(int, int)> rec = [&](int col, int left) {
        if (col == cols) {
            if (left == 0) f(eta);
            return;
        }
        int hi = std::min(cap, left);
        for (int v = 0; v <= hi; ++v) {
            eta.of(g, Sym{col}) = v;
            rec(col + 1, left - v);
        }
        eta.of(g, Sym{col}) = 0;
    };
    rec(0, g.m());
}

// Uniform list sizes independent of any eta (eta-shaped sampling lives in
// random_lists; the sweep criteria fix |L(v)| and |L(e)| directly).
ListAssignment uniform_lists(const Graph& g, int vsize, int esize, int bound,
                             std::mt19937_64& rng) {
    auto draw = [&](int k) {
        std::set<long long> s;
        while (static_cast<int>(s.size()) < k)
            s.insert(static_cast<long long>(rng() % (2 * bound + 1)) - bound);
        std::vector<rational> out;
        for (long long x : s) out.emplace_back(bigint(x));
        return out;
    };
    std::vector<std::vector<rational>> vl(static_cast<size_t>(g.n));
    std::vector<std::vector<rational>> el(static_cast<size_t>(g.m()));
    for (auto& l : vl) l = draw(vsize);
    for (auto& l : el) l = draw(esize);
    return make_lists(g, std::move(vl), std::move(el));
}

bool member(const std::vector<rational>& lst, const rational& x) {
    return std::find(lst.begin(), lst.end(), x) != lst.end();
}

bool solves_properly(const Graph& g, const ListAssignment& lists, const IndexFunction& eta,
                     Req& req) {
    auto w = find_weighting(g, lists, eta, true);
    req(w.has_value(), "list assignment not solved");
    if (!w) return false;
    req(improper_edges(g, *w).empty(), "weighting not proper");
    for (int v = 0; v < g.n; ++v)
        req(member(lists.vertices[static_cast<size_t>(v)], w->vertices[static_cast<size_t>(v)]),
            "vertex weight off-list");
    for (int e = 0; e < g.m(); ++e)
        req(member(lists.edges[static_cast<size_t>(e)], w->edges[static_cast<size_t>(e)]),
            "edge weight off-list");
    return true;
}

Graph prufer_tree(int n, const std::vector<int>& seq) {
    if (n == 1) return make_graph(1, {});
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) ++deg[static_cast<size_t>(s)];
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) {
                leaf = v;
                break;
            }
        used[static_cast<size_t>(leaf)] = 1;
        edges.emplace_back(leaf, s);
        --deg[static_cast<size_t>(s)];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)] && deg[static_cast<size_t>(v)] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return make_graph(n, edges);
}

std::string shell(const std::string& cmd, int* status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *status = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int rc = pclose(p);
    *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

// ---- criteria ----

bool c1_column_law() {
    Req req;
    for (int t = 0; t < 500; ++t) {
        GeneratedGraph gg = gen_d_degenerate(2 + t % 9, 1 + t % 3, 1000 + t, 0);
        const Graph& g = gg.g;
        DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edges[static_cast<size_t>(e)];
            for (int r = 0; r < g.m(); ++r)
                req(A.at(r, g.n + e) == A.at(r, u) + A.at(r, v), "column identity violated");
        }
    }
    return req.ok;
}

bool c2_kernels() {
    Req req;
    std::mt19937_64 rng(202);
    for (int t = 0; t < 10000; ++t) {
        IntMatrix M;
        M.dim = t % 9;
        M.a.resize(static_cast<size_t>(M.dim) * M.dim);
        for (auto& x : M.a) x = static_cast<long long>(rng() % 3) - 1;
        bigint naive = permanent_naive(M);
        req(naive == permanent_exact(M), "exact kernel disagrees with the permutation sum");
        for (uint32_t p : {2u, 3u, 5u, 7u})
            req(permanent_mod(M, p) == mod_of(naive, p), "modular kernel disagrees mod p");
    }
    return req.ok;
}

bool c3_coefficient_bridge() {
    Req req;
    long long checked = 0;
    for (int n = 1; n <= 6; ++n) {
        auto graphs = enumerate_labeled_graphs(
            n, [](const Graph& h) { return h.m() <= 5 && is_connected(h); });
        for (const Graph& g : graphs) {
            DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
            MultiIndexPoly poly = symbolic_polynomial(g, canonical_orientation(g));
            each_eta(g, 3, [&](const IndexFunction& eta) {
                std::vector<uint8_t> key;
                for (int x : eta.vertices) key.push_back(static_cast<uint8_t>(x));
                for (int x : eta.edges) key.push_back(static_cast<uint8_t>(x));
                auto it = poly.find(key);
                bigint rhs = it == poly.end() ? 0 : it->second;
                for (int x : eta.vertices) rhs *= fact(x);
                for (int x : eta.edges) rhs *= fact(x);
                req(permanent_exact(assemble(A, eta)) == rhs,
                    "permanent differs from coefficient times factorials");
                ++checked;
            });
        }
    }
    req(checked > 100000, "eta sweep unexpectedly small");
    return req.ok;
}

bool c4_generated_magnitudes() {
    Req req;

    // Non-bipartite: back-degree copies of the doubled-vertex expression.
    int done = 0;
    for (uint64_t seed = 1; done < 200 && seed < 40000; ++seed) {
        GeneratedGraph gg = gen_d_degenerate(4 + static_cast<int>(seed % 5), 2, 40000 + seed, 1);
        const Graph& g = gg.g;
        if (is_bipartite(g)) continue;
        DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
        auto branch = bipartition_or_odd_cycle(g);
        const auto& cyc = std::get<OddClosedWalk>(branch);
        auto [dd, ord] = degeneracy_ordering(g);
        std::vector<ColumnExpr> exprs;
        bigint want = 1;
        for (size_t i = 0; i < ord.order.size(); ++i) {
            want *= fact(ord.back_degree[i]);
            if (ord.back_degree[i] == 0) continue;
            ColumnExpr ex = double_vertex_as_edges(g, A, ord.order[i], cyc);
            for (int t = 0; t < ord.back_degree[i]; ++t) exprs.push_back(ex);
        }
        req(static_cast<int>(exprs.size()) == g.m(), "generated matrix not square");
        want <<= g.m();  // 2^|E|
        bigint per = permanent_exact(evaluate(GenMatrix{&A, rows_of(g), exprs}));
        req(per == want || per == -want, "doubled-vertex magnitude law failed");
        ++done;
    }
    req(done == 200, "non-bipartite sampler starved");

    // Bipartite: pair expressions against a non-adjacent pair (u, v).
    std::mt19937_64 rng(404);
    done = 0;
    while (done < 200) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<int> side(static_cast<size_t>(n));
        int ones = 0;
        for (auto& s : side) ones += (s = static_cast<int>(rng() & 1));
        if (ones == 0 || ones == n) continue;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)] && (rng() & 1))
                    edges.emplace_back(u, v);
        Graph g = make_graph(n, std::move(edges));
        if (!is_connected(g) || g.m() > 14) continue;
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int b = a + 1; b < n && u < 0; ++b)
                if (!g.has_edge(a, b)) {
                    u = a;
                    v = b;
                }
        if (u < 0) continue;

        DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
        std::vector<int> rest, remap(static_cast<size_t>(n), -1);
        for (int x = 0; x < n; ++x)
            if (x != u && x != v) {
                remap[static_cast<size_t>(x)] = static_cast<int>(rest.size());
                rest.push_back(x);
            }
        std::vector<std::pair<int, int>> sub_edges;
        for (auto [a, b] : g.edges)
            if (a != u && a != v && b != u && b != v)
                sub_edges.emplace_back(remap[static_cast<size_t>(a)], remap[static_cast<size_t>(b)]);
        Graph sub = make_graph(static_cast<int>(rest.size()), std::move(sub_edges));
        auto [sdd, sord] = degeneracy_ordering(sub);
        std::vector<ColumnExpr> exprs;
        bigint want = 1;
        for (size_t i = 0; i < sord.order.size(); ++i) {
            want *= fact(sord.back_degree[i]);
            if (sord.back_degree[i] == 0) continue;
            PairExpr pe = pair_as_edges(g, A, rest[static_cast<size_t>(sord.order[i])], v);
            for (int t = 0; t < sord.back_degree[i]; ++t) exprs.push_back(pe.expr);
        }
        const int dprime = g.degree(u) + g.degree(v);
        want *= fact(dprime);
        PairExpr uv = pair_as_edges(g, A, u, v);
        for (int t = 0; t < dprime; ++t) exprs.push_back(uv.expr);
        req(static_cast<int>(exprs.size()) == g.m(), "generated matrix not square");
        bigint per = permanent_exact(evaluate(GenMatrix{&A, rows_of(g), exprs}));
        req(per == want || per == -want, "pair magnitude law failed");
        ++done;
    }
    return req.ok;
}

bool c5_edge_only_sweep() {
    Req req;
    std::mt19937_64 rng(505);
    int certs = 0;
    for (int n = 3; n <= 6; ++n) {
        auto graphs = enumerate_labeled_graphs(n, [](const Graph& h) {
            return is_connected(h) && !is_bipartite(h) && degeneracy_ordering(h).first <= 2;
        });
        for (const Graph& g : graphs) {
            auto out = certify_1k(g, 3, 2);
            req(std::holds_alternative<Certificate>(out), "edge-only certification refused");
            if (!std::holds_alternative<Certificate>(out)) return false;
            const Certificate& c = std::get<Certificate>(out);
            req(c.p == 3 && c.residue >= 1 && c.residue <= 2, "residue out of range mod 3");
            for (int x : c.eta.vertices) req(x == 0, "vertex weight in edge-only certificate");
            for (int x : c.eta.edges) req(x <= 2, "edge weight above 2");
            req(verify_certificate(g, c).ok, "certificate failed verification");
            for (int t = 0; t < 50; ++t) {
                ListAssignment lists = uniform_lists(g, 1, 3, 60, rng);
                if (!solves_properly(g, lists, c.eta, req)) return false;
            }
            ++certs;
            if (!req.ok) return false;
        }
    }
    req(certs > 500, "sweep unexpectedly small");
    return req.ok;
}

bool c6_replay() {
    Req req;
    int done = 0;
    struct Slot {
        int d, nmax, want;
    };
    for (Slot s : {Slot{1, 8, 70}, Slot{2, 8, 70}, Slot{4, 5, 60}}) {
        int got = 0;
        for (uint64_t seed = 1; got < s.want; ++seed) {
            int n = 2 + static_cast<int>(seed % static_cast<uint64_t>(s.nmax - 1));
            GeneratedGraph gg = gen_d_degenerate(n, s.d, 60000 + seed * 3 + s.d, 0);
            auto out = certify_almost_12(gg.g, s.d);
            req(std::holds_alternative<Almost12>(out), "leaf augmentation refused");
            if (!std::holds_alternative<Almost12>(out)) return false;
            const Almost12& a = std::get<Almost12>(out);
            req(a.cert.p == static_cast<uint32_t>(s.d + 1), "wrong modulus");
            req(a.cert.residue >= 1 && a.cert.residue < a.cert.p, "residue out of range");
            req(verify_certificate(a.gprime, a.cert).ok, "padded certificate failed verification");
            int replays = 0;
            for (const TraceStep& st : a.cert.trace)
                if (st.kind == "replay") {
                    req(st.detail.find("; residue") != std::string::npos,
                        "replay step skipped the numeric residue check");
                    ++replays;
                }
            req(replays == gg.g.n, "one replay step per vertex expected");
            ++got;
            ++done;
            if (!req.ok) return false;
        }
    }
    req(done == 200, "sample count off");
    return req.ok;
}

bool c7_supergraph() {
    Req req;

    for (int d : {1, 2}) {
        int got = 0;
        for (uint64_t seed = 1; got < 100; ++seed) {
            int n = 2 + static_cast<int>(seed % static_cast<uint64_t>(d == 2 ? 6 : 7));
            GeneratedGraph gg = gen_d_degenerate(n, d, 70000 + seed * 7 + d, 1);
            auto out = certify_12_supergraph(gg.g, d);
            req(std::holds_alternative<Supergraph12>(out), "supergraph certification refused");
            if (!std::holds_alternative<Supergraph12>(out)) return false;
            const Supergraph12& s = std::get<Supergraph12>(out);
            req(s.certified.n >= gg.g.n && s.certified.m() >= gg.g.m(),
                "certified graph lost vertices or edges");
            bool prefix = true;
            for (int e = 0; e < gg.g.m(); ++e)
                prefix &= s.certified.edges[static_cast<size_t>(e)] ==
                          gg.g.edges[static_cast<size_t>(e)];
            req(prefix, "input edges not a prefix of the certified graph");
            for (int x : s.cert.eta.vertices) req(x == 0, "vertex weight in (1,2) certificate");
            for (int x : s.cert.eta.edges) req(x == 1, "edge weight must be exactly 1");
            req(verify_certificate(s.certified, s.cert).ok, "certificate failed verification");
            for (int t = 0; t < 20; ++t) {
                ListAssignment lists =
                    random_lists(s.certified, s.cert.eta, 60, seed * 100 + t);
                if (!solves_properly(s.certified, lists, s.cert.eta, req)) return false;
            }
            ++got;
            if (!req.ok) return false;
        }
    }

    // Trees with an even number of edges stay fixed points or land inside a
    // larger even-edge certified tree.
    long long trees = 0;
    for (int n : {1, 3, 5, 7}) {
        std::vector<int> seq(static_cast<size_t>(std::max(0, n - 2)), 0);
        for (;;) {
            Graph t = prufer_tree(n, seq);
            auto out = certify_12_supergraph(t, 1);
            req(std::holds_alternative<Supergraph12>(out), "tree certification refused");
            if (!std::holds_alternative<Supergraph12>(out)) return false;
            const Supergraph12& s = std::get<Supergraph12>(out);
            bool same = s.certified.n == t.n && s.certified.edges == t.edges;
            bool contains = s.certified.m() % 2 == 0;
            for (int e = 0; e < t.m() && contains; ++e)
                contains &= s.certified.edges[static_cast<size_t>(e)] ==
                            t.edges[static_cast<size_t>(e)];
            req(same || contains, "even tree escaped the even-edge family");
            ++trees;
            if (!req.ok) return false;

            size_t i = 0;
            while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
            if (i == seq.size()) break;
            ++seq[i];
        }
    }
    req(trees == 1 + 3 + 125 + 16807, "tree enumeration incomplete");
    return req.ok;
}

bool c8_two_two_sweep() {
    Req req;
    std::mt19937_64 rng(808);
    long long certs = 0;
    auto handle = [&](const Graph& g) {
        auto out = certify_d2(g, 2);
        req(std::holds_alternative<Certificate>(out), "walk certification refused");
        if (!std::holds_alternative<Certificate>(out)) return false;
        const Certificate& c = std::get<Certificate>(out);
        req(c.p == 3 && c.residue >= 1 && c.residue <= 2, "residue out of range mod 3");
        for (int x : c.eta.vertices) req(x <= 1, "vertex weight above 1");
        for (int x : c.eta.edges) req(x <= 1, "edge weight above 1");
        req(verify_certificate(g, c).ok, "certificate failed verification");
        for (int t = 0; t < 50; ++t) {
            ListAssignment lists = uniform_lists(g, 2, 2, 60, rng);
            if (!solves_properly(g, lists, c.eta, req)) return false;
        }
        ++certs;
        return req.ok;
    };
    for (int n = 1; n <= 5; ++n) {
        auto graphs = enumerate_labeled_graphs(n, [](const Graph& h) {
            return is_connected(h) && degeneracy_ordering(h).first <= 2;
        });
        for (const Graph& g : graphs)
            if (!handle(g)) return false;
    }
    const long long target = certs + 200;
    for (uint64_t seed = 1; certs < target; ++seed) {
        GeneratedGraph gg = gen_d_degenerate(2 + static_cast<int>(seed % 8), 2,
                                             80000 + seed * 11, 1);
        if (!handle(gg.g)) return false;
    }
    return req.ok;
}

bool c9_orientations() {
    Req req;
    std::mt19937_64 rng(909);
    int done = 0, acyclic_checked = 0;
    while (done < 200) {
        const bool dag_mode = done % 2 == 0;
        const int k = dag_mode ? 1 + done / 2 % 2 : 1 + done % 3;
        const int n = 3 + static_cast<int>(rng() % (dag_mode ? 5 : 7));

        std::vector<std::pair<int, int>> edges, arcs;
        auto seen = [&](int a, int b) {
            for (auto [x, y] : edges)
                if ((x == std::min(a, b)) && (y == std::max(a, b))) return true;
            return false;
        };
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < n; ++i) {
            int v = dag_mode ? perm[static_cast<size_t>(i)] : i;
            for (int t = 0; t < k; ++t) {
                int w;
                if (dag_mode) {
                    if (i + 1 >= n) break;
                    w = perm[static_cast<size_t>(i + 1 + rng() % static_cast<uint64_t>(n - i - 1))];
                } else {
                    w = static_cast<int>(rng() % n);
                    if (w == v) continue;
                }
                if (seen(v, w)) continue;
                edges.emplace_back(std::min(v, w), std::max(v, w));
                arcs.emplace_back(v, w);
            }
        }
        if (edges.empty() || static_cast<int>(edges.size()) > permanent_dim_cap()) continue;
        Graph g = make_graph(n, edges);
        Orientation dir{arcs};
        std::vector<int> dplus(static_cast<size_t>(n), 0);
        for (auto [t, h] : arcs) {
            (void)h;
            ++dplus[static_cast<size_t>(t)];
        }
        for (int v = 0; v < n; ++v) req(dplus[static_cast<size_t>(v)] <= k, "sampler broke the bound");

        Certificate c = certify_orientation(g, dir);
        for (int v = 0; v < n; ++v)
            req(c.eta.vertices[static_cast<size_t>(v)] <= dplus[static_cast<size_t>(v)],
                "vertex weight above its out-degree");
        for (int x : c.eta.edges) req(x <= 1, "edge weight above 1");
        req(c.residue >= 1 && c.residue < c.p, "residue out of range");
        req(verify_certificate(g, c).ok, "certificate failed verification");

        if (topological_order(g, dir) && g.m() <= 16) {
            DiffMatrix A = build_diff_matrix(g, canonical_orientation(g));
            bigint per = permanent_exact(assemble(A, c.eta));
            bigint want = 1;
            for (int v = 0; v < n; ++v) want *= fact(dplus[static_cast<size_t>(v)]);
            req(per == want || per == -want, "acyclic factorial law failed");
            req(per != 0, "acyclic permanent vanished");
            ++acyclic_checked;
        }
        ++done;
        if (!req.ok) return false;
    }
    req(acyclic_checked >= 50, "too few acyclic instances got the exact check");
    return req.ok;
}

bool c10_negative_controls() {
    Req req;
    Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    IndexFunction eta = zero_index_function(k3);
    for (auto& x : eta.edges) x = 1;
    DiffMatrix A = build_diff_matrix(k3, canonical_orientation(k3));
    req(permanent_exact(assemble(A, eta)) == 0, "triangle all-edges permanent must vanish");
    bool threw = false;
    try {
        prune_leaves(k3, eta, {});
    } catch (const error&) {
        threw = true;
    }
    req(threw, "pruning accepted the singular triangle");

    Graph k2 = make_graph(2, {{0, 1}});
    ListAssignment lists = make_lists(k2, {{rational(bigint(5))}, {rational(bigint(5))}},
                                      {{rational(bigint(0))}});
    IndexFunction e2 = zero_index_function(k2);
    e2.edges = {1};
    req(!find_weighting(k2, lists, e2).has_value(),
        "equal singleton endpoints reported solvable");
    return req.ok;
}

bool c11_cli_determinism() {
    Req req;
    req(!g_bin.empty(), "--bin not provided");
    if (g_bin.empty()) return false;

    int s1 = 0, s2 = 0;
    std::string sweep = g_bin +
                        " batch --enum 5 --connected --nonbipartite --max-degen 2"
                        " --method 1k -k 3 -d 2 2>/dev/null";
    std::string a = shell(sweep, &s1);
    std::string b = shell(sweep, &s2);
    req(s1 == 0 && s2 == 0, "batch sweep exited nonzero");
    req(!a.empty() && a == b, "batch reruns differ");
    std::istringstream rows(a);
    std::string line;
    std::getline(rows, line);
    req(line == "id,n,m,method,certified,residue,wall_ms", "CSV header changed");
    int data_rows = 0;
    while (std::getline(rows, line)) {
        ++data_rows;
        size_t p = 0;
        for (int f = 0; f < 4; ++f) p = line.find(',', p) + 1;
        req(line.compare(p, 2, "1,") == 0, "a sweep row is not certified");
    }
    req(data_rows > 0, "empty sweep");

    std::string d2sweep = g_bin +
                          " batch --enum 4 --connected --max-degen 2 --method d2 -d 2"
                          " 2>/dev/null";
    std::string da = shell(d2sweep, &s1);
    std::string db = shell(d2sweep, &s2);
    req(s1 == 0 && s2 == 0 && !da.empty() && da == db, "d2 sweep reruns differ");
    std::istringstream drows(da);
    std::getline(drows, line);
    int d2rows = 0;
    while (std::getline(drows, line)) {
        ++d2rows;
        size_t p = 0;
        for (int f = 0; f < 4; ++f) p = line.find(',', p) + 1;
        req(line.compare(p, 2, "1,") == 0, "a d2 sweep row is not certified");
    }
    req(d2rows > 0, "empty d2 sweep");

    std::string gen = g_bin +
                      " batch --gen 25 --gen-n 6 --gen-d 2 --min-back 1 --seed 12"
                      " --method prune12 -d 2 --jobs 3 2>/dev/null";
    std::string ga = shell(gen, &s1);
    std::string gb = shell(gen, &s2);
    req(s1 == 0 && s2 == 0 && !ga.empty() && ga == gb, "generated sweep reruns differ");

    std::string cert = "printf '3 3\\n0 1\\n0 2\\n1 2\\n' | " + g_bin +
                       " certify --method 1k -k 3 -d 2 - 2>/dev/null";
    std::string ca = shell(cert, &s1);
    std::string cb = shell(cert, &s2);
    req(s1 == 0 && s2 == 0 && !ca.empty() && ca == cb, "certificate reruns differ");
    req(ca.find("\"method\": \"L2.3-nonbip\"") != std::string::npos, "certificate JSON malformed");
    return req.ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--bin") g_bin = argv[i + 1];

    criterion(1, "difference matrix column identity", c1_column_law);
    criterion(2, "permanent kernels against the permutation-sum oracle", c2_kernels);
    criterion(3, "permanent equals coefficient times factorials", c3_coefficient_bridge);
    criterion(4, "generated matrix magnitude laws", c4_generated_magnitudes);
    criterion(5, "edge-only certificates with (1,3) solves", c5_edge_only_sweep);
    criterion(6, "leaf padding with stepwise replay", c6_replay);
    criterion(7, "(1,2) supergraph certificates and even trees", c7_supergraph);
    criterion(8, "(2,2) walk certificates with solves", c8_two_two_sweep);
    criterion(9, "orientation certificates and the factorial law", c9_orientations);
    criterion(10, "negative controls", c10_negative_controls);
    criterion(11, "CLI determinism", c11_cli_determinism);

    std::cout << (g_all_ok ? "acceptance: all criteria passed"
                           : "acceptance: at least one criterion failed")
              << std::endl;
    return g_all_ok ? 0 : 1;
}

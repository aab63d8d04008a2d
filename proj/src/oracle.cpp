#include "twchoose/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace twc {
namespace {

// Deterministic bounded draw. std::uniform_int_distribution is allowed to
// differ between standard library implementations; raw engine output is not.
long long rnd_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace

MultiIndexPoly symbolic_polynomial(const Graph& g, const Orientation& d) {
    if (g.m() > 8)
        throw error("symbolic_polynomial: " + std::to_string(g.m()) + " edges exceeds the cap of 8");
    check_orients(g, d);
    const int nsyms = g.n + g.m();

    MultiIndexPoly poly;
    poly[std::vector<uint8_t>(static_cast<size_t>(nsyms), 0)] = 1;

    for (int e = 0; e < g.m(); ++e) {
        auto [tail, head] = d.arcs[static_cast<size_t>(e)];
        // Row polynomial: (sum at head) - (sum at tail), the weight of edge e
        // itself cancelling.
        std::vector<std::pair<int, int>> terms;  // (symbol id, coefficient)
        terms.emplace_back(head, 1);
        terms.emplace_back(tail, -1);
        for (auto [w, f] : g.adj[static_cast<size_t>(head)])
            if (f != e) terms.emplace_back(g.n + f, 1);
        for (auto [w, f] : g.adj[static_cast<size_t>(tail)])
            if (f != e) terms.emplace_back(g.n + f, -1);

        MultiIndexPoly next;
        for (const auto& [expo, coef] : poly) {
            for (auto [sym, c] : terms) {
                std::vector<uint8_t> e2 = expo;
                ++e2[static_cast<size_t>(sym)];
                next[std::move(e2)] += coef * c;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        poly = std::move(next);
    }
    return poly;
}

long long symbolic_coefficient(const Graph& g, const IndexFunction& eta) {
    MultiIndexPoly poly = symbolic_polynomial(g, canonical_orientation(g));
    std::vector<uint8_t> expo;
    expo.reserve(static_cast<size_t>(g.n + g.m()));
    for (int x : eta.vertices) expo.push_back(static_cast<uint8_t>(x));
    for (int x : eta.edges) expo.push_back(static_cast<uint8_t>(x));
    auto it = poly.find(expo);
    return it == poly.end() ? 0 : it->second;
}

bigint permanent_naive(const IntMatrix& M) {
    if (M.dim > 8)
        throw error("permanent_naive: dimension " + std::to_string(M.dim) + " exceeds the cap of 8");
    if (M.dim == 0) return 1;
    std::vector<int> perm(static_cast<size_t>(M.dim));
    for (int i = 0; i < M.dim; ++i) perm[static_cast<size_t>(i)] = i;
    bigint sum = 0;
    do {
        bigint term = 1;
        for (int i = 0; i < M.dim; ++i) term *= M.at(i, perm[static_cast<size_t>(i)]);
        sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

std::vector<Graph> enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& pred) {
    if (n < 1 || n > 7)
        throw error("enumerate_labeled_graphs: n must be in [1,7], got " + std::to_string(n));
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) edges.push_back(pairs[b]);
        Graph g = make_graph(n, std::move(edges));
        if (pred(g)) out.push_back(std::move(g));
    }
    return out;
}

GeneratedGraph gen_d_degenerate(int n, int d, uint64_t seed, int min_back) {
    if (n < 1) throw error("gen_d_degenerate: n must be positive");
    if (d < 0 || min_back < 0) throw error("gen_d_degenerate: negative degree bound");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> back(static_cast<size_t>(n), 0);
    std::vector<int> pool;
    for (int i = 1; i < n; ++i) {
        int hi = std::min(i, d);
        int lo = std::min(min_back, hi);
        int b = static_cast<int>(rnd_int(rng, lo, hi));
        back[static_cast<size_t>(i)] = b;
        pool.resize(static_cast<size_t>(i));
        for (int j = 0; j < i; ++j) pool[static_cast<size_t>(j)] = j;
        // Partial Fisher-Yates: the first b slots become the back-neighbors.
        for (int t = 0; t < b; ++t) {
            int r = static_cast<int>(rnd_int(rng, t, i - 1));
            std::swap(pool[static_cast<size_t>(t)], pool[static_cast<size_t>(r)]);
            edges.emplace_back(pool[static_cast<size_t>(t)], i);
        }
    }
    std::sort(edges.begin(), edges.end());
    GeneratedGraph out{make_graph(n, std::move(edges)), VertexOrdering{}};
    out.ordering.order.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.ordering.order[static_cast<size_t>(i)] = i;
    out.ordering.back_degree = std::move(back);
    return out;
}

ListAssignment random_lists(const Graph& g, const IndexFunction& eta, int universe_bound, uint64_t seed) {
    if (!eta.valid_for(g)) throw error("random_lists: index function does not fit the graph");
    if (universe_bound < 0) throw error("random_lists: negative universe bound");
    std::mt19937_64 rng(seed);
    auto draw = [&](int size) {
        if (2 * universe_bound + 1 < size)
            throw error("random_lists: universe [-" + std::to_string(universe_bound) + "," +
                        std::to_string(universe_bound) + "] is smaller than a list of size " +
                        std::to_string(size));
        std::set<long long> vals;
        while (static_cast<int>(vals.size()) < size)
            vals.insert(rnd_int(rng, -universe_bound, universe_bound));
        std::vector<rational> list;
        for (long long v : vals) list.emplace_back(bigint(v));
        return list;
    };
    std::vector<std::vector<rational>> vl, el;
    for (int v = 0; v < g.n; ++v) vl.push_back(draw(eta.vertices[static_cast<size_t>(v)] + 1));
    for (int e = 0; e < g.m(); ++e) el.push_back(draw(eta.edges[static_cast<size_t>(e)] + 1));
    return make_lists(g, std::move(vl), std::move(el));
}

}  // namespace twc

#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "twchoose/matrix.hpp"
#include "twchoose/solver.hpp"

namespace twc {

// Brute-force references for the tests. Everything here favors being
// obviously correct over being fast; the caps keep that honest.

// Sparse polynomial in variables x_z, z a column symbol; exponent vectors are
// dense over the n+m symbols. Coefficients of the row-product polynomial are
// sums of at most 3^|E| unit terms, so int64 cannot overflow at the cap.
using MultiIndexPoly = std::map<std::vector<uint8_t>, long long>;

// Full expansion of prod_e (head sums - tail sums); cap |E| <= 8.
MultiIndexPoly symbolic_polynomial(const Graph& g, const Orientation& d);

// Coefficient of prod x_z^{eta(z)}; 0 when the monomial is absent.
long long symbolic_coefficient(const Graph& g, const IndexFunction& eta);

// Permutation-sum permanent, cap dim <= 8.
bigint permanent_naive(const IntMatrix& M);

// All 2^C(n,2) labeled graphs on n <= 7 vertices passing the predicate, in
// edge-mask order.
std::vector<Graph> enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& pred);

// Random d-degenerate graph: vertex i picks between min(min_back, i) and
// min(i, d) distinct back-neighbors. The construction order 0..n-1 is the
// returned ordering. min_back = 1 keeps the graph connected.
struct GeneratedGraph {
    Graph g;
    VertexOrdering ordering;
};
GeneratedGraph gen_d_degenerate(int n, int d, uint64_t seed, int min_back = 0);

// Duplicate-free integer lists, |L(z)| = eta(z)+1, sampled from
// [-universe_bound, universe_bound].
ListAssignment random_lists(const Graph& g, const IndexFunction& eta, int universe_bound, uint64_t seed);

}  // namespace twc

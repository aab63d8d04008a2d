#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "twchoose/matrix.hpp"

namespace twc {

using rational = boost::rational<bigint>;

// Candidate weights per vertex and per edge, each list sorted ascending and
// duplicate-free (normalized on construction/parse).
struct ListAssignment {
    std::vector<std::vector<rational>> vertices;
    std::vector<std::vector<rational>> edges;
};

ListAssignment make_lists(const Graph& g, std::vector<std::vector<rational>> vertex_lists,
                          std::vector<std::vector<rational>> edge_lists);

struct Weighting {
    std::vector<rational> vertices;
    std::vector<rational> edges;
};

// phi(v) + sum of phi(e) over edges at v.
rational vertex_sum(const Graph& g, const Weighting& w, int v);

// Edges whose endpoints get equal sums; empty means proper.
std::vector<int> improper_edges(const Graph& g, const Weighting& w);

// Backtracking search for a proper weighting with phi(z) in L(z). Variables
// are ordered vertex-first along a DFS so each edge constraint closes early;
// values are tried in list order, so the first proper weighting in
// lexicographic order is returned. `certified` asserts the caller holds a
// nonzero-coefficient certificate whose eta satisfies |L(z)| >= eta(z)+1
// pointwise; exhausting the search in that regime is an internal error.
std::optional<Weighting> find_weighting(const Graph& g, const ListAssignment& lists,
                                        const IndexFunction& eta, bool certified = false);

}  // namespace twc

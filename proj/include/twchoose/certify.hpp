#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "twchoose/matrix.hpp"
#include "twchoose/permanent.hpp"

namespace twc {

// Order-insensitive graph identity: FNV-1a over n, m and the sorted edge
// list, each value fed as 4 little-endian bytes.
struct Fingerprint {
    int n = 0;
    int m = 0;
    uint64_t hash = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Graph& g);

struct TraceStep {
    int step = 0;
    std::string kind;
    std::string detail;
};

// A checkable nonzero-coefficient claim: the matrix assembled from eta on the
// fingerprinted graph has permanent congruent to `residue` (nonzero) mod p.
// The trace records how the construction ran; verification never trusts it.
struct Certificate {
    Fingerprint graph;
    std::string method;
    uint32_t p = 0;
    uint32_t residue = 0;
    IndexFunction eta;
    std::vector<TraceStep> trace;
};

// A hypothesis of the chosen method failed on this input. `witness` names
// vertices demonstrating the failure when the method produces one.
struct NotCertified {
    std::string reason;
    std::vector<int> witness;
};

using CertifyOutcome = std::variant<Certificate, NotCertified>;

// Edge-column expression worth exactly 2*col(v), built around an odd closed
// walk: alternating +-1 on the cycle edges, +-2 on a connecting path when v
// lies off the cycle. Verified against A before returning.
ColumnExpr double_vertex_as_edges(const Graph& g, const DiffMatrix& A, int v,
                                  const OddClosedWalk& cycle);

// Edge-column expression worth col(x)+col(y) (sum_form) or col(x)-col(y),
// depending on the parity of a path joining x and y.
struct PairExpr {
    ColumnExpr expr;
    bool sum_form = false;
};
PairExpr pair_as_edges(const Graph& g, const DiffMatrix& A, int x, int y);

// Edge-only index function mod k for a connected d-degenerate graph, k an odd
// prime > d. Bipartite inputs additionally need a light pair.
CertifyOutcome certify_1k(const Graph& g, uint32_t k, int d);

// Leaf augmentation: every vertex is padded to d incident pendant edges
// beyond its back degree, and the padded graph gets eta with eta(v) <= d,
// eta(e) = 1 on original edges, everything else 0, mod p = d+1.
struct Almost12 {
    Graph gprime;
    std::vector<int> leaf_anchor;  // anchor of leaf vertex n+i
    VertexOrdering ordering;
    Certificate cert;  // certificate for gprime
};
std::variant<Almost12, NotCertified> certify_almost_12(const Graph& g, int d);

// Deletes a subset of the given leaves so that the remainder carries the
// all-edges index function with nonzero permanent. `removed` uses the input
// graph's labels; the returned graph is renumbered downward past the gaps.
struct PruneResult {
    std::vector<int> removed;
    Graph g;
    Certificate cert;  // for the reduced graph, eta = 1 on every edge
};
PruneResult prune_leaves(const Graph& gprime, const IndexFunction& eta,
                         const std::vector<int>& leaves);

// certify_almost_12 followed by prune_leaves: a supergraph of G (possibly G
// itself) certified with eta(v) = 0, eta(e) = 1.
struct Supergraph12 {
    Graph gprime;              // fully padded intermediate
    std::vector<int> removed;  // pruned leaves, in gprime labels
    Graph certified;           // what the certificate is for; contains G
    Certificate cert;
};
std::variant<Supergraph12, NotCertified> certify_12_supergraph(const Graph& g, int d);

// eta on G itself with eta(v) <= d-1, eta(e) <= 1, mod p = d+1, via a walk
// that discharges the pendant rows of the padded graph one per step.
// Requires d >= 2, d+1 prime, G connected.
CertifyOutcome certify_d2(const Graph& g, int d);

// eta(v) <= outdegree(v), eta(e) <= 1 from an orientation. Acyclic
// orientations give eta(v) = outdegree(v) in closed form; the general case
// rewrites each arc disagreeing with an acyclic reference orientation.
Certificate certify_orientation(const Graph& g, const Orientation& dir);

// Orients G with out-degrees <= k if possible and certifies the result;
// otherwise reports the dense subgraph that obstructs the orientation.
CertifyOutcome certify_k2_mad(const Graph& g, int k);

struct VerifyResult {
    bool ok = false;
    std::string reason;  // empty when ok; otherwise a stable reason code
};

// Independent replay: fingerprint, method-specific eta bounds, and the
// permanent recomputed from scratch. The trace is ignored.
VerifyResult verify_certificate(const Graph& g, const Certificate& c);

}  // namespace twc

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "twchoose/graph.hpp"

namespace twc {

using bigint = boost::multiprecision::cpp_int;

// A column symbol: 0..n-1 are vertices, n..n+m-1 are edges. The numeric order
// of symbols is the canonical column order (vertices ascending, then edges).
struct Sym {
    int id = 0;

    static Sym vertex(int v) { return {v}; }
    static Sym edge(const Graph& g, int e) { return {g.n + e}; }
    bool is_vertex(const Graph& g) const { return id < g.n; }
    int vertex_of(const Graph& g) const { return is_vertex(g) ? id : -1; }
    int edge_of(const Graph& g) const { return is_vertex(g) ? -1 : id - g.n; }
    auto operator<=>(const Sym&) const = default;
};

std::string sym_name(const Graph& g, Sym z);

// Rows are edges, columns are vertices then edges, entries in {-1,0,1}:
// +1 at the head vertex and at every other edge incident to the head,
// -1 likewise at the tail, 0 elsewhere. Row e = head sums minus tail sums.
struct DiffMatrix {
    int n = 0, m = 0;
    std::vector<int8_t> a;  // m rows * (n+m) cols, row major

    int cols() const { return n + m; }
    int at(int row, int col) const { return a[static_cast<size_t>(row) * cols() + col]; }
};

// Verifies the column identity col(e) = col(u) + col(v) for every edge
// before returning; a violation is an internal error.
DiffMatrix build_diff_matrix(const Graph& g, const Orientation& d);

// eta over V then E, dense. Valid iff the counts sum to |E|.
struct IndexFunction {
    std::vector<int> vertices;
    std::vector<int> edges;

    long long total() const;
    bool valid_for(const Graph& g) const;
    int of(const Graph& g, Sym z) const { return z.is_vertex(g) ? vertices[z.id] : edges[z.id - g.n]; }
    int& of(const Graph& g, Sym z) { return z.is_vertex(g) ? vertices[z.id] : edges[z.id - g.n]; }
    auto operator<=>(const IndexFunction&) const = default;
};

IndexFunction zero_index_function(const Graph& g);

struct IntMatrix {
    int dim = 0;
    std::vector<long long> a;  // row major

    long long at(int row, int col) const { return a[static_cast<size_t>(row) * dim + col]; }
    long long& at(int row, int col) { return a[static_cast<size_t>(row) * dim + col]; }
};

// Square matrix with eta(z) copies of column z, canonical column order.
IntMatrix assemble(const DiffMatrix& A, const IndexFunction& eta);

// Sparse integer combination of base columns; kept sorted by symbol and free
// of zero coefficients.
using ColumnExpr = std::vector<std::pair<Sym, int>>;

std::vector<long long> evaluate_column(const DiffMatrix& A, const ColumnExpr& expr);

ColumnExpr expr_add(const ColumnExpr& a, const ColumnExpr& b, int scale_b = 1);
ColumnExpr expr_scale(const ColumnExpr& a, int c);

// Columns as formal combinations, over an optional subset of rows (the
// comb-plus walk deletes pendant-edge rows as it consumes them).
struct GenMatrix {
    const DiffMatrix* A = nullptr;
    std::vector<int> rows;         // edge ids, ascending
    std::vector<ColumnExpr> cols;

    bool square() const { return rows.size() == cols.size(); }
};

GenMatrix full_rows_matrix(const DiffMatrix& A);

IntMatrix evaluate(const GenMatrix& M);

// eta_A(z): number of columns carrying z with nonzero coefficient.
IndexFunction usage(const Graph& g, const GenMatrix& M);

struct ResolvePick {
    int col = 0;
    Sym z;
    int coef = 0;
};

// Greedy multilinear fixing: each combination column in turn is replaced by
// the first of its scaled base columns (canonical symbol order) that keeps
// per != 0 mod p. Multilinearity makes the scan total: the branch permanents,
// weighted by the coefficients, sum to the current nonzero permanent.
// Returns the usage counts of the final all-base matrix; `picks`, when given,
// receives the fixed columns in scan order.
IndexFunction resolve_nonzero_selection(const Graph& g, GenMatrix M, uint32_t p,
                                        std::vector<ResolvePick>* picks = nullptr);

// per(A_G(eta)) and whether the monomial coefficient c_eta is nonzero.
std::pair<bigint, bool> coefficient_status(const Graph& g, const IndexFunction& eta);

}  // namespace twc

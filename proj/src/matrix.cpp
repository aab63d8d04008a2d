#include "twchoose/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "twchoose/permanent.hpp"

namespace twc {

std::string sym_name(const Graph& g, Sym z) {
    if (z.is_vertex(g)) return "v" + std::to_string(z.id);
    return "e" + std::to_string(z.id - g.n);
}

DiffMatrix build_diff_matrix(const Graph& g, const Orientation& d) {
    check_orients(g, d);
    DiffMatrix A;
    A.n = g.n;
    A.m = g.m();
    A.a.assign(static_cast<size_t>(A.m) * A.cols(), 0);
    auto put = [&](int row, int col, int val) { A.a[static_cast<size_t>(row) * A.cols() + col] = static_cast<int8_t>(val); };
    for (int e = 0; e < A.m; ++e) {
        auto [t, h] = d.arcs[e];
        put(e, h, +1);
        put(e, t, -1);
        for (auto& [w, f] : g.adj[h]) {
            (void)w;
            if (f != e) put(e, g.n + f, +1);
        }
        for (auto& [w, f] : g.adj[t]) {
            (void)w;
            if (f != e) put(e, g.n + f, -1);
        }
    }
    // construction-time check of the column identity col(e) = col(u) + col(v)
    for (int e = 0; e < A.m; ++e) {
        auto [u, v] = g.edges[e];
        for (int r = 0; r < A.m; ++r)
            if (A.at(r, g.n + e) != A.at(r, u) + A.at(r, v))
                throw internal_error("difference matrix violates the edge-column identity");
    }
    return A;
}

long long IndexFunction::total() const {
    long long s = 0;
    for (int c : vertices) s += c;
    for (int c : edges) s += c;
    return s;
}

bool IndexFunction::valid_for(const Graph& g) const {
    if (static_cast<int>(vertices.size()) != g.n || static_cast<int>(edges.size()) != g.m()) return false;
    for (int c : vertices)
        if (c < 0) return false;
    for (int c : edges)
        if (c < 0) return false;
    return total() == g.m();
}

IndexFunction zero_index_function(const Graph& g) {
    IndexFunction eta;
    eta.vertices.assign(g.n, 0);
    eta.edges.assign(g.m(), 0);
    return eta;
}

IntMatrix assemble(const DiffMatrix& A, const IndexFunction& eta) {
    if (static_cast<int>(eta.vertices.size()) != A.n || static_cast<int>(eta.edges.size()) != A.m)
        throw error("index function domain does not match the matrix");
    long long total = 0;
    for (int c : eta.vertices) total += c;
    for (int c : eta.edges) total += c;
    for (int c : eta.vertices)
        if (c < 0) throw error("negative index function value");
    for (int c : eta.edges)
        if (c < 0) throw error("negative index function value");
    if (total != A.m) throw error("index function is not valid: counts sum to " + std::to_string(total) +
                                  ", expected " + std::to_string(A.m));
    IntMatrix M;
    M.dim = A.m;
    M.a.assign(static_cast<size_t>(A.m) * A.m, 0);
    int col = 0;
    for (int z = 0; z < A.cols(); ++z) {
        int reps = z < A.n ? eta.vertices[z] : eta.edges[z - A.n];
        for (int r = 0; r < reps; ++r, ++col)
            for (int row = 0; row < A.m; ++row) M.at(row, col) = A.at(row, z);
    }
    return M;
}

std::vector<long long> evaluate_column(const DiffMatrix& A, const ColumnExpr& expr) {
    std::vector<long long> v(A.m, 0);
    for (auto& [z, c] : expr) {
        if (z.id < 0 || z.id >= A.cols()) throw error("column expression references an unknown symbol");
        for (int row = 0; row < A.m; ++row) v[row] += static_cast<long long>(c) * A.at(row, z.id);
    }
    return v;
}

ColumnExpr expr_add(const ColumnExpr& a, const ColumnExpr& b, int scale_b) {
    ColumnExpr out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, b[j].second * scale_b});
            ++j;
        } else {
            int c = a[i].second + b[j].second * scale_b;
            if (c != 0) out.push_back({a[i].first, c});
            ++i;
            ++j;
        }
    }
    return out;
}

ColumnExpr expr_scale(const ColumnExpr& a, int c) {
    if (c == 0) return {};
    ColumnExpr out = a;
    for (auto& [z, v] : out) {
        (void)z;
        v *= c;
    }
    return out;
}

GenMatrix full_rows_matrix(const DiffMatrix& A) {
    GenMatrix M;
    M.A = &A;
    M.rows.resize(A.m);
    std::iota(M.rows.begin(), M.rows.end(), 0);
    return M;
}

IntMatrix evaluate(const GenMatrix& M) {
    if (!M.square()) throw error("generalized matrix is not square");
    IntMatrix out;
    out.dim = static_cast<int>(M.rows.size());
    out.a.assign(static_cast<size_t>(out.dim) * out.dim, 0);
    for (int j = 0; j < out.dim; ++j) {
        auto col = evaluate_column(*M.A, M.cols[j]);
        for (int i = 0; i < out.dim; ++i) out.at(i, j) = col[M.rows[i]];
    }
    return out;
}

IndexFunction usage(const Graph& g, const GenMatrix& M) {
    if (M.A->n != g.n || M.A->m != g.m()) throw error("usage: graph does not match the matrix");
    IndexFunction eta = zero_index_function(g);
    for (auto& col : M.cols)
        for (auto& [z, c] : col)
            if (c != 0) ++eta.of(g, z);
    return eta;
}

IndexFunction resolve_nonzero_selection(const Graph& g, GenMatrix M, uint32_t p,
                                        std::vector<ResolvePick>* picks) {
    if (permanent_mod(evaluate(M), p) == 0) throw error("resolution requires a permanent nonzero mod p");
    for (size_t j = 0; j < M.cols.size(); ++j) {
        ColumnExpr& col = M.cols[j];
        if (col.size() == 1 && (col[0].second == 1 || col[0].second == -1)) continue;
        ColumnExpr expr = col;
        bool fixed = false;
        for (auto& [z, c] : expr) {  // canonical symbol order: expr is kept sorted
            col = {{z, c}};
            if (permanent_mod(evaluate(M), p) != 0) {
                if (picks) picks->push_back({static_cast<int>(j), z, c});
                fixed = true;
                break;
            }
        }
        if (!fixed) throw internal_error("multilinear branch scan found no nonzero branch");
    }
    return usage(g, M);
}

std::pair<bigint, bool> coefficient_status(const Graph& g, const IndexFunction& eta) {
    if (!eta.valid_for(g)) throw error("coefficient status requires a valid index function");
    auto A = build_diff_matrix(g, canonical_orientation(g));
    bigint per = permanent_exact(assemble(A, eta));
    return {per, per != 0};
}

}  // namespace twc

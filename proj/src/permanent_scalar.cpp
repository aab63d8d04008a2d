#include <bit>
#include <cmath>

#include "twchoose/permanent.hpp"

// Ryser with Gray-code updates:
//   per(M) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} M[i][j]
// Subset t and t+1 differ in column ctz(t+1), so the column sums are kept
// incrementally; only the product is recomputed per subset.

namespace twc {

namespace {

using int256 = boost::multiprecision::int256_t;

// Fast path when every per-subset product provably fits __int128: row sum i
// is bounded by R_i = sum_j |M[i][j]|, so the product needs
// sum_i bits(R_i) bits.
int product_bits_bound(const IntMatrix& M) {
    int bits = 0;
    for (int i = 0; i < M.dim; ++i) {
        unsigned long long r = 0;
        for (int j = 0; j < M.dim; ++j) r += static_cast<unsigned long long>(std::llabs(M.at(i, j)));
        bits += 64 - std::countl_zero(r | 1ull);
    }
    return bits;
}

bigint ryser_int128(const IntMatrix& M) {
    const int n = M.dim;
    std::vector<long long> sums(n, 0);
    int256 acc = 0;
    const uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    for (uint64_t t = 1; t <= full; ++t) {
        int j = std::countr_zero(t);
        uint64_t gray = t ^ (t >> 1);
        if (gray & (1ull << j))
            for (int i = 0; i < n; ++i) sums[i] += M.at(i, j);
        else
            for (int i = 0; i < n; ++i) sums[i] -= M.at(i, j);
        __int128 prod = 1;
        for (int i = 0; i < n; ++i) prod *= sums[i];
        int popc = std::popcount(gray);
        if ((n - popc) & 1)
            acc -= int256(static_cast<long long>(prod >> 64)) * (int256(1) << 64) +
                   int256(static_cast<unsigned long long>(prod));
        else
            acc += int256(static_cast<long long>(prod >> 64)) * (int256(1) << 64) +
                   int256(static_cast<unsigned long long>(prod));
    }
    return bigint(acc);
}

bigint ryser_bigint(const IntMatrix& M) {
    const int n = M.dim;
    std::vector<bigint> sums(n, 0);
    bigint acc = 0;
    const uint64_t full = (1ull << n) - 1;
    for (uint64_t t = 1; t <= full; ++t) {
        int j = std::countr_zero(t);
        uint64_t gray = t ^ (t >> 1);
        if (gray & (1ull << j))
            for (int i = 0; i < n; ++i) sums[i] += M.at(i, j);
        else
            for (int i = 0; i < n; ++i) sums[i] -= M.at(i, j);
        bigint prod = 1;
        for (int i = 0; i < n; ++i) prod *= sums[i];
        int popc = std::popcount(gray);
        if ((n - popc) & 1)
            acc -= prod;
        else
            acc += prod;
    }
    return acc;
}

}  // namespace

bigint permanent_exact(const IntMatrix& M, int dim_cap) {
    if (M.dim > dim_cap)
        throw error("matrix dimension " + std::to_string(M.dim) + " exceeds the permanent cap " +
                    std::to_string(dim_cap));
    if (M.dim == 0) return 1;
    if (product_bits_bound(M) <= 120) return ryser_int128(M);
    return ryser_bigint(M);
}

uint32_t permanent_mod_scalar(const IntMatrix& M, uint32_t p) {
    const int n = M.dim;
    if (n == 0) return 1u % p;
    std::vector<uint32_t> col(static_cast<size_t>(n) * n);  // column major, entries in [0,p)
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            long long e = M.at(i, j) % static_cast<long long>(p);
            if (e < 0) e += p;
            col[static_cast<size_t>(j) * n + i] = static_cast<uint32_t>(e);
        }
    std::vector<uint32_t> sums(n, 0);
    uint32_t acc_pos = 0, acc_neg = 0;
    const uint64_t full = (1ull << n) - 1;
    for (uint64_t t = 1; t <= full; ++t) {
        int j = std::countr_zero(t);
        uint64_t gray = t ^ (t >> 1);
        const uint32_t* c = &col[static_cast<size_t>(j) * n];
        if (gray & (1ull << j)) {
            for (int i = 0; i < n; ++i) {
                uint32_t s = sums[i] + c[i];
                sums[i] = s >= p ? s - p : s;
            }
        } else {
            for (int i = 0; i < n; ++i) {
                uint32_t s = sums[i] + p - c[i];
                sums[i] = s >= p ? s - p : s;
            }
        }
        uint64_t prod = 1;
        for (int i = 0; i < n; ++i) prod = prod * sums[i] % p;
        int popc = std::popcount(gray);
        if ((n - popc) & 1) {
            acc_neg += static_cast<uint32_t>(prod);
            if (acc_neg >= p) acc_neg -= p;
        } else {
            acc_pos += static_cast<uint32_t>(prod);
            if (acc_pos >= p) acc_pos -= p;
        }
    }
    uint32_t r = acc_pos + p - acc_neg;
    return r >= p ? r - p : r;
}

}  // namespace twc

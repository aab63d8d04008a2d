#include <immintrin.h>

#include <bit>
#include <vector>

#include "twchoose/permanent.hpp"

// AVX2 variant of the modular Ryser kernel. Column sums live in Montgomery
// form (R = 2^32), eight 32-bit lanes per vector. Montgomery form is linear,
// so the Gray-code add/subtract updates stay valid; the per-subset product
// chains Montgomery multiplications and the accumulator converts out once at
// the end. Requires odd p (the dispatcher sends p = 2 to the scalar kernel).

namespace twc {

namespace {

struct Mont {
    uint32_t p;
    uint32_t pprime;  // -p^{-1} mod 2^32
    uint32_t r1;      // R mod p (Montgomery form of 1)

    explicit Mont(uint32_t p_) : p(p_) {
        uint32_t inv = 1;
        for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;  // Newton, mod 2^32
        pprime = ~inv + 1u;                               // -inv
        r1 = static_cast<uint32_t>((uint64_t(1) << 32) % p);
    }
    uint32_t to_mont(uint32_t x) const { return static_cast<uint32_t>((uint64_t(x) << 32) % p); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        uint64_t t = uint64_t(a) * b;
        uint32_t m = static_cast<uint32_t>(t) * pprime;
        uint64_t u = (t + uint64_t(m) * p) >> 32;
        return u >= p ? static_cast<uint32_t>(u - p) : static_cast<uint32_t>(u);
    }
    uint32_t from_mont(uint32_t a) const { return mul(a, 1); }
};

inline __m256i add_mod(__m256i a, __m256i b, __m256i vp) {
    __m256i s = _mm256_add_epi32(a, b);
    return _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
}

inline __m256i sub_mod(__m256i a, __m256i b, __m256i vp) {
    __m256i d = _mm256_sub_epi32(a, b);
    return _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
}

// lane-wise Montgomery product of eight 32-bit values
inline __m256i mul_mont(__m256i a, __m256i b, __m256i vp, __m256i vpprime) {
    __m256i t_even = _mm256_mul_epu32(a, b);
    __m256i t_odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    __m256i m_even = _mm256_mul_epu32(t_even, vpprime);
    __m256i m_odd = _mm256_mul_epu32(t_odd, vpprime);
    __m256i u_even = _mm256_srli_epi64(_mm256_add_epi64(t_even, _mm256_mul_epu32(m_even, vp)), 32);
    __m256i u_odd = _mm256_srli_epi64(_mm256_add_epi64(t_odd, _mm256_mul_epu32(m_odd, vp)), 32);
    __m256i u = _mm256_blend_epi32(u_even, _mm256_slli_epi64(u_odd, 32), 0xAA);
    return _mm256_min_epu32(u, _mm256_sub_epi32(u, vp));
}

}  // namespace

uint32_t permanent_mod_avx2(const IntMatrix& M, uint32_t p) {
    const int n = M.dim;
    if (n == 0) return 1u % p;
    Mont mm(p);
    const int blocks = (n + 7) / 8;
    const int lanes = blocks * 8;
    // columns padded with zeros; sums padded with mont(1) so idle lanes are
    // multiplicative identities
    std::vector<uint32_t> col(static_cast<size_t>(n) * lanes, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            long long e = M.at(i, j) % static_cast<long long>(p);
            if (e < 0) e += p;
            col[static_cast<size_t>(j) * lanes + i] = mm.to_mont(static_cast<uint32_t>(e));
        }
    std::vector<uint32_t> sums(lanes, 0);
    for (int i = n; i < lanes; ++i) sums[i] = mm.r1;

    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vpprime = _mm256_set1_epi32(static_cast<int>(mm.pprime));
    uint32_t acc_pos = 0, acc_neg = 0;
    const uint64_t full = (1ull << n) - 1;
    for (uint64_t t = 1; t <= full; ++t) {
        int j = std::countr_zero(t);
        uint64_t gray = t ^ (t >> 1);
        const uint32_t* c = &col[static_cast<size_t>(j) * lanes];
        bool adding = (gray >> j) & 1;
        __m256i prodv = _mm256_set1_epi32(static_cast<int>(mm.r1));
        for (int b = 0; b < blocks; ++b) {
            __m256i sv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&sums[b * 8]));
            __m256i cv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&c[b * 8]));
            sv = adding ? add_mod(sv, cv, vp) : sub_mod(sv, cv, vp);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(&sums[b * 8]), sv);
            prodv = mul_mont(prodv, sv, vp, vpprime);
        }
        // fold eight lanes to one
        alignas(32) uint32_t lane[8];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane), prodv);
        uint32_t prod = lane[0];
        for (int i = 1; i < 8; ++i) prod = mm.mul(prod, lane[i]);
        int popc = std::popcount(gray);
        if ((n - popc) & 1) {
            acc_neg += prod;
            if (acc_neg >= p) acc_neg -= p;
        } else {
            acc_pos += prod;
            if (acc_pos >= p) acc_pos -= p;
        }
    }
    uint32_t acc = acc_pos + p - acc_neg;
    if (acc >= p) acc -= p;
    return mm.from_mont(acc);
}

}  // namespace twc

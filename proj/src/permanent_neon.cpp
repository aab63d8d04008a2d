#include <arm_neon.h>

#include <bit>
#include <vector>

#include "twchoose/permanent.hpp"

// NEON variant of the modular Ryser kernel: four 32-bit Montgomery lanes per
// vector, otherwise identical in structure to the AVX2 kernel. Built only on
// aarch64; the equivalence tests run whichever variant the host dispatches.

namespace twc {

namespace {

struct Mont {
    uint32_t p;
    uint32_t pprime;
    uint32_t r1;

    explicit Mont(uint32_t p_) : p(p_) {
        uint32_t inv = 1;
        for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;
        pprime = ~inv + 1u;
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

inline uint32x4_t add_mod(uint32x4_t a, uint32x4_t b, uint32x4_t vp) {
    uint32x4_t s = vaddq_u32(a, b);
    return vminq_u32(s, vsubq_u32(s, vp));
}

inline uint32x4_t sub_mod(uint32x4_t a, uint32x4_t b, uint32x4_t vp) {
    uint32x4_t d = vsubq_u32(a, b);
    return vminq_u32(d, vaddq_u32(d, vp));
}

// Montgomery-reduce two 64-bit products to 32-bit lanes
inline uint32x2_t reduce_pair(uint64x2_t t, uint32_t p, uint32_t pprime) {
    uint32x2_t tlo = vmovn_u64(t);
    uint32x2_t m = vmul_u32(tlo, vdup_n_u32(pprime));
    uint64x2_t u = vshrq_n_u64(vaddq_u64(t, vmull_u32(m, vdup_n_u32(p))), 32);
    return vmovn_u64(u);  // < 2p, final subtract happens vector-wide
}

inline uint32x4_t mul_mont(uint32x4_t a, uint32x4_t b, uint32_t p, uint32_t pprime, uint32x4_t vp) {
    uint64x2_t t_lo = vmull_u32(vget_low_u32(a), vget_low_u32(b));
    uint64x2_t t_hi = vmull_u32(vget_high_u32(a), vget_high_u32(b));
    uint32x4_t u = vcombine_u32(reduce_pair(t_lo, p, pprime), reduce_pair(t_hi, p, pprime));
    return vminq_u32(u, vsubq_u32(u, vp));
}

}  // namespace

uint32_t permanent_mod_neon(const IntMatrix& M, uint32_t p) {
    const int n = M.dim;
    if (n == 0) return 1u % p;
    Mont mm(p);
    const int blocks = (n + 3) / 4;
    const int lanes = blocks * 4;
    std::vector<uint32_t> col(static_cast<size_t>(n) * lanes, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            long long e = M.at(i, j) % static_cast<long long>(p);
            if (e < 0) e += p;
            col[static_cast<size_t>(j) * lanes + i] = mm.to_mont(static_cast<uint32_t>(e));
        }
    std::vector<uint32_t> sums(lanes, 0);
    for (int i = n; i < lanes; ++i) sums[i] = mm.r1;

    const uint32x4_t vp = vdupq_n_u32(p);
    uint32_t acc_pos = 0, acc_neg = 0;
    const uint64_t full = (1ull << n) - 1;
    for (uint64_t t = 1; t <= full; ++t) {
        int j = std::countr_zero(t);
        uint64_t gray = t ^ (t >> 1);
        const uint32_t* c = &col[static_cast<size_t>(j) * lanes];
        bool adding = (gray >> j) & 1;
        uint32x4_t prodv = vdupq_n_u32(mm.r1);
        for (int b = 0; b < blocks; ++b) {
            uint32x4_t sv = vld1q_u32(&sums[b * 4]);
            uint32x4_t cv = vld1q_u32(&c[b * 4]);
            sv = adding ? add_mod(sv, cv, vp) : sub_mod(sv, cv, vp);
            vst1q_u32(&sums[b * 4], sv);
            prodv = mul_mont(prodv, sv, p, mm.pprime, vp);
        }
        uint32_t lane[4];
        vst1q_u32(lane, prodv);
        uint32_t prod = mm.mul(mm.mul(lane[0], lane[1]), mm.mul(lane[2], lane[3]));
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

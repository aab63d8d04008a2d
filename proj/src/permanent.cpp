#include "twchoose/permanent.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <vector>

namespace twc {

namespace {

std::atomic<int> g_dim_cap{0};  // 0 = uninitialized

int read_env_cap() {
    if (const char* s = std::getenv("TWCHOOSE_MAX_DIM")) {
        int v = std::atoi(s);
        if (v >= 1) return v;
    }
    return 24;
}

}  // namespace

int permanent_dim_cap() {
    int v = g_dim_cap.load(std::memory_order_relaxed);
    if (v == 0) {
        v = read_env_cap();
        g_dim_cap.store(v, std::memory_order_relaxed);
    }
    return v;
}

void set_permanent_dim_cap(int cap) {
    if (cap < 1) throw error("permanent dimension cap must be at least 1");
    g_dim_cap.store(cap, std::memory_order_relaxed);
}

bigint permanent_exact(const IntMatrix& M) { return permanent_exact(M, permanent_dim_cap()); }

uint32_t permanent_mod(const IntMatrix& M, uint32_t p) { return permanent_mod(M, p, permanent_dim_cap()); }

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) { return static_cast<uint64_t>((__uint128_t)a * b % m); }

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u32(uint32_t v) {
    if (v < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (v == q) return true;
        if (v % q == 0) return false;
    }
    // Miller-Rabin with bases {2,7,61} is exact below 2^32
    uint32_t d = v - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (uint32_t a : {2u, 7u, 61u}) {
        if (a % v == 0) continue;  // a base divisible by v says nothing
        uint64_t x = powmod_u64(a, d, v);
        if (x == 1 || x == v - 1) continue;
        bool witness = true;
        for (int i = 1; i < r && witness; ++i) {
            x = mulmod_u64(x, x, v);
            if (x == v - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

uint32_t choose_prime(int d) {
    if (d < 1) throw error("prime request requires d >= 1");
    if (d > 10000) throw error("prime table covers d up to 10^4");
    static const std::vector<uint32_t> primes = [] {
        const int limit = 10100;
        std::vector<char> comp(limit + 1, 0);
        std::vector<uint32_t> ps;
        for (int i = 2; i <= limit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (long j = static_cast<long>(i) * i; j <= limit; j += i) comp[j] = 1;
        }
        return ps;
    }();
    for (uint32_t q : primes)
        if (static_cast<int>(q) > d) return q;
    throw error("prime table exhausted");
}

namespace {

using mod_kernel_fn = uint32_t (*)(const IntMatrix&, uint32_t);

struct Backend {
    mod_kernel_fn fn;
    const char* name;
};

Backend pick_backend() {
#if defined(TWCHOOSE_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return {&permanent_mod_avx2, "avx2"};
#endif
#if defined(TWCHOOSE_HAVE_NEON)
    return {&permanent_mod_neon, "neon"};
#endif
    return {&permanent_mod_scalar, "scalar"};
}

const Backend& backend() {
    static const Backend b = pick_backend();
    return b;
}

}  // namespace

std::string permanent_mod_backend() { return backend().name; }

uint32_t permanent_mod(const IntMatrix& M, uint32_t p, int dim_cap) {
    if (!is_prime_u32(p)) throw error("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw error("modulus must be below 2^31");
    if (M.dim > dim_cap)
        throw error("matrix dimension " + std::to_string(M.dim) + " exceeds the permanent cap " +
                    std::to_string(dim_cap));
    // the SIMD kernels use Montgomery form, which needs an odd modulus
    if (p == 2) return permanent_mod_scalar(M, p);
    return backend().fn(M, p);
}

}  // namespace twc

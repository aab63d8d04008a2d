#pragma once

#include <cstdint>
#include <string>

#include "twchoose/matrix.hpp"

namespace twc {

// Dimension guard for the 2^n Ryser kernels. Default 24, overridable per
// call or process-wide through TWCHOOSE_MAX_DIM.
int permanent_dim_cap();
void set_permanent_dim_cap(int cap);

// Exact permanent, Ryser's inclusion-exclusion with Gray-code updates.
// Row sums and per-subset products run in __int128 when the row-sum bound
// certifies they fit, with a wide fixed-size accumulator; otherwise the whole
// kernel runs on arbitrary-precision integers.
bigint permanent_exact(const IntMatrix& M);
bigint permanent_exact(const IntMatrix& M, int dim_cap);

// Same subset walk over Z_p, p prime < 2^31. A scalar kernel is the
// reference; SIMD variants are selected at runtime and must agree with it.
uint32_t permanent_mod(const IntMatrix& M, uint32_t p);
uint32_t permanent_mod(const IntMatrix& M, uint32_t p, int dim_cap);

// Which modular kernel the dispatcher picked ("scalar", "avx2", "neon").
std::string permanent_mod_backend();

// Scalar reference kernel, exposed for equivalence tests.
uint32_t permanent_mod_scalar(const IntMatrix& M, uint32_t p);

#if defined(TWCHOOSE_HAVE_AVX2)
uint32_t permanent_mod_avx2(const IntMatrix& M, uint32_t p);
#endif
#if defined(TWCHOOSE_HAVE_NEON)
uint32_t permanent_mod_neon(const IntMatrix& M, uint32_t p);
#endif

bool is_prime_u32(uint32_t v);

// Smallest prime > d from a static table covering 1..10^4.
uint32_t choose_prime(int d);

}  // namespace twc

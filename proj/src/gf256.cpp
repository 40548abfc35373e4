#include "ncra/gf256.hpp"

#include <array>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define NCRA_X86 1
#endif

namespace ncra::gf {
namespace {

constexpr int kPoly = 0x11d;

struct Tables {
  std::array<std::uint8_t, 512> exp{};
  std::array<std::uint8_t, 256> log{};
  // nibble[c][0..15]  = c * x        (low nibble products)
  // nibble[c][16..31] = c * (x << 4) (high nibble products)
  std::array<std::array<std::uint8_t, 32>, 256> nibble{};

  Tables() {
    int x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
      log[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(i);
      x <<= 1;
      if (x & 0x100) x ^= kPoly;
    }
    for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];

    for (int c = 0; c < 256; ++c) {
      for (int v = 0; v < 16; ++v) {
        nibble[c][v] = mul_slow(static_cast<std::uint8_t>(c),
                                static_cast<std::uint8_t>(v));
        nibble[c][16 + v] = mul_slow(static_cast<std::uint8_t>(c),
                                     static_cast<std::uint8_t>(v << 4));
      }
    }
  }

  static std::uint8_t mul_slow(std::uint8_t a, std::uint8_t b) {
    int p = 0;
    int aa = a;
    for (int bb = b; bb; bb >>= 1) {
      if (bb & 1) p ^= aa;
      aa <<= 1;
      if (aa & 0x100) aa ^= kPoly;
    }
    return static_cast<std::uint8_t>(p);
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

#ifdef NCRA_X86
__attribute__((target("avx2"))) void mul_add_row_avx2(std::uint8_t* dst,
                                                      const std::uint8_t* src,
                                                      std::uint8_t c,
                                                      std::size_t n) {
  const auto& nib = tables().nibble[c];
  const __m128i lo128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(nib.data()));
  const __m128i hi128 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(nib.data() + 16));
  const __m256i lo_tbl = _mm256_broadcastsi128_si256(lo128);
  const __m256i hi_tbl = _mm256_broadcastsi128_si256(hi128);
  const __m256i mask = _mm256_set1_epi8(0x0f);

  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i lo = _mm256_and_si256(s, mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi64(s, 4), mask);
    __m256i prod = _mm256_xor_si256(_mm256_shuffle_epi8(lo_tbl, lo),
                                    _mm256_shuffle_epi8(hi_tbl, hi));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(d, prod));
  }
  for (; i < n; ++i) dst[i] ^= nib[src[i] & 0x0f] ^ nib[16 + (src[i] >> 4)];
}

bool detect_avx2() { return __builtin_cpu_supports("avx2"); }
#else
bool detect_avx2() { return false; }
#endif

const bool g_avx2 = detect_avx2();

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  const auto& t = tables();
  return t.exp[t.log[a] + t.log[b]];
}

std::uint8_t inv(std::uint8_t a) {
  const auto& t = tables();
  return t.exp[255 - t.log[a]];
}

void mul_add_row_scalar(std::uint8_t* dst, const std::uint8_t* src,
                        std::uint8_t c, std::size_t n) {
  const auto& nib = tables().nibble[c];
  for (std::size_t i = 0; i < n; ++i)
    dst[i] ^= nib[src[i] & 0x0f] ^ nib[16 + (src[i] >> 4)];
}

void mul_add_row(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
                 std::size_t n) {
  if (c == 0) return;
#ifdef NCRA_X86
  if (g_avx2) {
    mul_add_row_avx2(dst, src, c, n);
    return;
  }
#endif
  mul_add_row_scalar(dst, src, c, n);
}

void scale_row(std::uint8_t* row, std::uint8_t c, std::size_t n) {
  if (c == 1) return;
  const auto& nib = tables().nibble[c];
  for (std::size_t i = 0; i < n; ++i)
    row[i] = nib[row[i] & 0x0f] ^ nib[16 + (row[i] >> 4)];
}

bool using_avx2() { return g_avx2; }

}  // namespace ncra::gf

#pragma once

#include <cstddef>
#include <cstdint>

// GF(2^8) arithmetic, primitive polynomial x^8 + x^4 + x^3 + x^2 + 1 (0x11d).
// Scalar ops go through log/antilog tables; the row kernels dispatch to an
// AVX2 nibble-shuffle path when the CPU supports it.
namespace ncra::gf {

constexpr int kFieldSize = 256;

std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t inv(std::uint8_t a);  // a must be nonzero

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

// dst[i] ^= c * src[i] for i in [0, n)
void mul_add_row(std::uint8_t* dst, const std::uint8_t* src, std::uint8_t c,
                 std::size_t n);

// row[i] *= c
void scale_row(std::uint8_t* row, std::uint8_t c, std::size_t n);

// Scalar reference kernels, kept callable so tests can compare them against
// whatever mul_add_row dispatched to.
void mul_add_row_scalar(std::uint8_t* dst, const std::uint8_t* src,
                        std::uint8_t c, std::size_t n);

bool using_avx2();

}  // namespace ncra::gf

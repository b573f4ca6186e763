#pragma once

#include <cstddef>
#include <cstdint>

namespace halfcode::kernels {

/// Byte-residue kernels backing the brute-force codeword weight scan.
///
/// Layout contract: codewords live in fixed 32-byte row slots (kRowStride),
/// entries are residues < p with p <= 127 (so a sum of two entries fits a
/// byte), unused tail bytes are zero. Zero padding is weight-neutral, so the
/// weight of a row equals the count of its nonzero bytes.
inline constexpr std::size_t kRowStride = 32;

struct Kernels {
    const char* name;
    /// out row a = (base + a*step) mod p, for a = 0..count-1.
    void (*fill_axpy_rows)(std::uint8_t* out, const std::uint8_t* base, const std::uint8_t* step,
                           std::size_t count, std::uint8_t p);
    /// (base + add) mod p, elementwise over one row slot.
    void (*add_row_mod)(std::uint8_t* dst, const std::uint8_t* base, const std::uint8_t* add,
                        std::uint8_t p);
    /// Minimum over rows of the per-row nonzero-byte count.
    std::uint32_t (*min_weight_rows)(const std::uint8_t* rows, std::size_t nrows);
};

const Kernels& scalar_kernels();
#ifdef HALFCODE_HAVE_AVX2
const Kernels& avx2_kernels();
#endif

bool avx2_supported();

/// Runtime-selected implementation: AVX2 when compiled in and supported by
/// the CPU, scalar otherwise. Set HALFCODE_FORCE_SCALAR=1 in the environment
/// to pin the scalar reference path.
const Kernels& active_kernels();

} // namespace halfcode::kernels

// AVX2 variants of the weight-scan kernels. This translation unit is compiled
// with -mavx2 and must only be entered after a runtime cpuid check.
#ifdef HALFCODE_HAVE_AVX2

#include <immintrin.h>

#include "halfcode/kernels.hpp"

namespace halfcode::kernels {

namespace {

// (a + b) mod p per byte: s = a + b < 2p <= 254, then min(s, s - p) picks the
// reduced value because s - p wraps above s exactly when s < p.
inline __m256i add_mod_epi8(__m256i a, __m256i b, __m256i pv) {
    __m256i s = _mm256_add_epi8(a, b);
    return _mm256_min_epu8(s, _mm256_sub_epi8(s, pv));
}

void fill_axpy_rows_avx2(std::uint8_t* out, const std::uint8_t* base, const std::uint8_t* step,
                         std::size_t count, std::uint8_t p) {
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base));
    const __m256i stp = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(step));
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    for (std::size_t a = 0; a < count; ++a) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + a * kRowStride), cur);
        cur = add_mod_epi8(cur, stp, pv);
    }
}

void add_row_mod_avx2(std::uint8_t* dst, const std::uint8_t* base, const std::uint8_t* add,
                      std::uint8_t p) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(add));
    const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), add_mod_epi8(a, b, pv));
}

std::uint32_t min_weight_rows_avx2(const std::uint8_t* rows, std::size_t nrows) {
    const __m256i zero = _mm256_setzero_si256();
    std::uint32_t best = 0xffffffffu;
    for (std::size_t i = 0; i < nrows; ++i) {
        const __m256i r =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows + i * kRowStride));
        const auto zmask =
            static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(r, zero)));
        const std::uint32_t w = kRowStride - static_cast<std::uint32_t>(__builtin_popcount(zmask));
        if (w < best) best = w;
    }
    return best;
}

} // namespace

const Kernels& avx2_kernels() {
    static const Kernels k{"avx2", fill_axpy_rows_avx2, add_row_mod_avx2, min_weight_rows_avx2};
    return k;
}

} // namespace halfcode::kernels

#endif // HALFCODE_HAVE_AVX2

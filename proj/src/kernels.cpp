#include "halfcode/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace halfcode::kernels {

namespace {

inline std::uint8_t add_mod(std::uint8_t a, std::uint8_t b, std::uint8_t p) {
    std::uint8_t s = static_cast<std::uint8_t>(a + b);
    return s >= p ? static_cast<std::uint8_t>(s - p) : s;
}

void fill_axpy_rows_scalar(std::uint8_t* out, const std::uint8_t* base, const std::uint8_t* step,
                           std::size_t count, std::uint8_t p) {
    std::uint8_t cur[kRowStride];
    std::memcpy(cur, base, kRowStride);
    for (std::size_t a = 0; a < count; ++a) {
        std::memcpy(out + a * kRowStride, cur, kRowStride);
        for (std::size_t j = 0; j < kRowStride; ++j) cur[j] = add_mod(cur[j], step[j], p);
    }
}

void add_row_mod_scalar(std::uint8_t* dst, const std::uint8_t* base, const std::uint8_t* add,
                        std::uint8_t p) {
    for (std::size_t j = 0; j < kRowStride; ++j) dst[j] = add_mod(base[j], add[j], p);
}

std::uint32_t min_weight_rows_scalar(const std::uint8_t* rows, std::size_t nrows) {
    std::uint32_t best = 0xffffffffu;
    for (std::size_t i = 0; i < nrows; ++i) {
        const std::uint8_t* r = rows + i * kRowStride;
        std::uint32_t w = 0;
        for (std::size_t j = 0; j < kRowStride; ++j) w += r[j] != 0;
        if (w < best) best = w;
    }
    return best;
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", fill_axpy_rows_scalar, add_row_mod_scalar,
                           min_weight_rows_scalar};
    return k;
}

bool avx2_supported() {
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernels& active_kernels() {
    static const Kernels& chosen = []() -> const Kernels& {
        const char* force = std::getenv("HALFCODE_FORCE_SCALAR");
        if (force && force[0] == '1') return scalar_kernels();
#ifdef HALFCODE_HAVE_AVX2
        if (avx2_supported()) return avx2_kernels();
#endif
        return scalar_kernels();
    }();
    return chosen;
}

} // namespace halfcode::kernels

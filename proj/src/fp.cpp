#include "halfcode/fp.hpp"

#include <limits>
#include <string>
#include <utility>

namespace halfcode {

bool is_prime_u64(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t d = 3; d * d <= m; d += 2)
        if (m % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw invalid_params("modulus too large: " + std::to_string(p));
    if (!is_prime_u64(p)) throw invalid_params("modulus is not prime: " + std::to_string(p));
    if (p == 2) throw invalid_params("characteristic 2 is not supported");
    p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeModulus::pow(Residue a, std::uint64_t e) const {
    Residue r = 1 % p_;
    Residue base = a % p_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Residue PrimeModulus::inv(Residue a) const {
    a %= p_;
    if (a == 0) throw zero_inverse("inverse of zero mod " + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

std::uint64_t FactorMultiset::recompose() const {
    std::uint64_t m = 1;
    for (const auto& e : entries)
        for (std::uint32_t i = 0; i < e.exponent; ++i) m *= e.prime;
    return m;
}

FactorMultiset factorize(std::uint64_t m) {
    if (m < 1 || m >= (std::uint64_t(1) << 63))
        throw invalid_params("factorize: input out of range [1, 2^63)");
    FactorMultiset out;
    auto strip = [&](std::uint64_t d) {
        if (m % d) return;
        std::uint32_t e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.entries.push_back({d, e});
    };
    strip(2);
    for (std::uint64_t d = 3; d * d <= m; d += 2) strip(d);
    if (m > 1) out.entries.push_back({m, 1});
    return out;
}

} // namespace halfcode

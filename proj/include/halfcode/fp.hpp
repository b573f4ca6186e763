#pragma once

#include <cstdint>
#include <vector>

#include "halfcode/errors.hpp"

namespace halfcode {

/// Canonical residue mod p, always kept in [0, p).
using Residue = std::uint32_t;

/// An odd prime modulus, verified at construction by trial division.
///
/// p = 2 is rejected: the construction needs 1/2 in F_p for the projection
/// operators, and nothing downstream supports characteristic two.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const { return p_; }

    Residue add(Residue a, Residue b) const {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const {
        return static_cast<Residue>(std::uint64_t(a) * b % p_);
    }
    /// Canonical representative of a signed value.
    Residue reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    Residue pow(Residue a, std::uint64_t e) const;

    /// Multiplicative inverse via extended Euclid; throws zero_inverse on a = 0.
    Residue inv(Residue a) const;

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeModulus& o) const { return p_ != o.p_; }

  private:
    std::uint32_t p_;
};

/// fp_inv(a, p): inverse of a modulo p.
inline Residue fp_inv(Residue a, const PrimeModulus& p) { return p.inv(a); }

/// Prime factorization as (prime, exponent) pairs with strictly increasing primes.
struct FactorMultiset {
    struct Entry {
        std::uint64_t prime;
        std::uint32_t exponent;
        bool operator==(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    std::uint64_t recompose() const;
    bool operator==(const FactorMultiset&) const = default;
};

/// Complete factorization by trial division. Requires 1 <= m < 2^63.
FactorMultiset factorize(std::uint64_t m);

/// Trial-division primality test (used by PrimeModulus and test oracles).
bool is_prime_u64(std::uint64_t m);

} // namespace halfcode

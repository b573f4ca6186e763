#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halfcode/fp.hpp"

namespace halfcode {

/// Polynomial over F_p with coefficients stored in DESCENDING degree order:
/// coeffs()[0] is the leading coefficient. The zero polynomial has an empty
/// coefficient vector and degree() == -1. The descending order matches the
/// monomial basis (X^{n-1}, ..., X, 1) used everywhere downstream.
class PolyFp {
  public:
    PolyFp(PrimeModulus p, std::vector<Residue> coeffs_descending);

    static PolyFp zero(PrimeModulus p) { return PolyFp(p, {}); }
    static PolyFp constant(PrimeModulus p, Residue c) { return PolyFp(p, {c}); }
    /// The monomial c*X^d.
    static PolyFp monomial(PrimeModulus p, Residue c, std::size_t d);

    const PrimeModulus& modulus() const { return p_; }
    const std::vector<Residue>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Residue leading() const { return c_.empty() ? 0 : c_.front(); }
    /// Coefficient of X^d (0 when d exceeds the degree).
    Residue coeff(std::size_t d) const;

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp scaled(Residue c) const;
    PolyFp monic() const;

    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const PolyFp& o) const { return !(*this == o); }

  private:
    PrimeModulus p_;
    std::vector<Residue> c_;

    void trim();
};

struct PolyDivRem {
    PolyFp quotient;
    PolyFp remainder;
};

/// Long division: a = q*m + r with deg r < deg m. Throws division_by_zero_poly on m = 0.
PolyDivRem poly_divrem(const PolyFp& a, const PolyFp& m);

PolyFp poly_rem(const PolyFp& a, const PolyFp& m);

/// Monic gcd.
PolyFp poly_gcd(PolyFp a, PolyFp b);

/// a^e mod m by square-and-multiply.
PolyFp poly_pow_mod(const PolyFp& a, std::uint64_t e, const PolyFp& m);

/// X^{p^d} mod m, computed as d iterated p-th powers (the exponent p^d is
/// never materialized, so large p^d cannot overflow).
PolyFp frobenius_power(const PolyFp& m, std::size_t d);

/// Rabin's criterion: f of degree n is irreducible over F_p iff
/// X^{p^n} = X (mod f) and gcd(X^{p^{n/l}} - X mod f, f) = 1 for every prime l | n.
/// Requires deg f >= 1.
bool is_irreducible(const PolyFp& f);

/// Deterministic seeded search for a monic irreducible polynomial of degree n.
/// Candidates are drawn from std::mt19937_64(seed); same (p, n, seed) always
/// returns the same polynomial.
PolyFp find_irreducible(PrimeModulus p, std::size_t n, std::uint64_t seed = 0);

/// Parses either a descending coefficient list ("1,1,2,1,5,3,2") or a
/// symbolic form ("X^6+X^5+2*X^4+X^3+5*X^2+3*X+2").
PolyFp parse_poly(const std::string& text, PrimeModulus p);

/// Descending coefficient list, e.g. "1,1,2,1,5,3,2". Zero polynomial -> "0".
std::string format_poly_coeffs(const PolyFp& f);

/// Symbolic form, e.g. "X^6+X^5+2*X^4+X^3+5*X^2+3*X+2". Zero polynomial -> "0".
std::string format_poly(const PolyFp& f);

} // namespace halfcode

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halfcode/matrix.hpp"
#include "halfcode/poly.hpp"

namespace halfcode {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// The extension field F_{p^n} = F_p[X]/(f) as an n-dimensional F_p-vector
/// space over the ordered monomial basis
///
///     (e_1, ..., e_n) = (X^{n-1}, ..., X, 1).
///
/// The basis is fixed in DESCENDING degree order; a coordinate vector's entry
/// 0 multiplies X^{n-1}. All element coordinates, operator matrices and code
/// listings downstream follow this order.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
  public:
    /// f must be monic irreducible of degree n >= 1; throws invalid_params otherwise.
    static FieldCtxPtr create(PrimeModulus p, PolyFp f);

    const PrimeModulus& modulus() const { return p_; }
    std::size_t degree() const { return n_; }
    const PolyFp& poly() const { return f_; }

    /// p^n as u64; throws too_large past 2^63 (the trial-division cap).
    std::uint64_t cardinality() const;

    bool same_field(const FieldCtx& o) const { return p_ == o.p_ && f_ == o.f_; }

  private:
    FieldCtx(PrimeModulus p, PolyFp f);
    PrimeModulus p_;
    std::size_t n_;
    PolyFp f_;
};

/// Element of F_{p^n}: n coordinates over the descending monomial basis.
class FieldElem {
  public:
    FieldElem(FieldCtxPtr ctx, std::vector<Residue> coords);

    static FieldElem zero(FieldCtxPtr ctx);
    static FieldElem one(FieldCtxPtr ctx);
    /// e_j for 1-based j (e_1 = X^{n-1}, e_n = 1).
    static FieldElem basis(FieldCtxPtr ctx, std::size_t j);
    static FieldElem from_poly(FieldCtxPtr ctx, const PolyFp& a);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<Residue>& coords() const { return c_; }
    PolyFp to_poly() const;

    bool is_zero() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem scaled(Residue c) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

  private:
    FieldCtxPtr ctx_;
    std::vector<Residue> c_;
};

/// Product in F_{p^n} by polynomial multiplication and reduction mod f.
FieldElem elem_mul(const FieldElem& a, const FieldElem& b);

/// Inverse via extended Euclid on (a, f); throws zero_inverse on a = 0.
FieldElem elem_inv(const FieldElem& a);

/// a^e by square-and-multiply; 0^0 is rejected (zero_to_zero_power).
FieldElem elem_pow(const FieldElem& a, std::uint64_t e);

/// Multiplication tensor: c(j,k,l) with e_j * e_k = sum_l c(j,k,l) e_l
/// (1-based j,k,l accessors to match the written convention).
class StructureTensor {
  public:
    explicit StructureTensor(const FieldCtxPtr& ctx);
    Residue c(std::size_t j, std::size_t k, std::size_t l) const {
        return a_[((j - 1) * n_ + (k - 1)) * n_ + (l - 1)];
    }
    std::size_t dim() const { return n_; }

  private:
    std::size_t n_;
    std::vector<Residue> a_;
};

StructureTensor structure_tensor(const FieldCtxPtr& ctx);

/// Product computed by contracting the structure tensor; kept as a second,
/// independent arithmetic route next to elem_mul (the two are cross-checked
/// in the test suites).
FieldElem mul_via_tensor(const StructureTensor& t, const FieldElem& a, const FieldElem& b);

/// n x n matrix M with M * coords(u) = coords(a * u) for every u.
MatrixFp left_mul_matrix(const FieldElem& a);

/// Least e >= 1 with a^e = 1, by stripping prime factors from p^n - 1.
/// Throws zero_order on a = 0.
std::uint64_t element_order(const FieldElem& a);

/// Seeded deterministic search for an element of multiplicative order p^n - 1.
FieldElem find_primitive_root(const FieldCtxPtr& ctx, std::uint64_t seed = 0);

/// Accepts polynomial form ("2*X^5+6*X^4+5*X^3+5*X^2+4") or coordinate form
/// ("[2,6,5,5,0,4]", descending basis).
FieldElem parse_elem(const std::string& text, const FieldCtxPtr& ctx);

/// Polynomial form over X; zero element -> "0".
std::string format_elem(const FieldElem& a);

/// Coordinate form "[2,6,5,5,0,4]" (descending basis).
std::string format_elem_coords(const FieldElem& a);

} // namespace halfcode

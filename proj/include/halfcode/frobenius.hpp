#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "halfcode/ext_field.hpp"
#include "halfcode/matrix.hpp"

namespace halfcode {

/// The operator apparatus on F_{p^n} with n = 2k: Frobenius matrix sigma,
/// involution tau = sigma^k, the idempotent projections, the tau-eigenspace
/// bases, the distinguished element xi in V^- and the left-multiplication
/// matrices of the V^+ basis.
///
/// SIGN CONVENTION (kept verbatim from the construction; do not "fix"):
///
///     pi_plus  = (1/2)(I - tau)   projects ONTO V^-,  ker pi_plus  = V^+
///     pi_minus = (1/2)(I + tau)   projects ONTO V^+,  ker pi_minus = V^-
///
/// where V^+ = ker(tau - I) is the fixed subfield F_{p^k} and
/// V^- = ker(tau + I). So the "+" operator annihilates the "+" space.
struct DecompositionCtx {
    FieldCtxPtr field;
    std::size_t k = 0; // n = 2k

    MatrixFp sigma;
    MatrixFp tau;
    MatrixFp pi_plus;
    MatrixFp pi_minus;

    std::vector<FieldElem> v_plus_basis;  // f_1, ..., f_k
    std::vector<FieldElem> v_minus_basis; // echelonized kernel basis of (tau + I)

    FieldElem xi;
    FieldElem xi_inv;

    std::vector<MatrixFp> vplus_mul_mats; // left multiplication by f_i

    bool in_v_plus(const FieldElem& u) const;
    bool in_v_minus(const FieldElem& u) const;
};

/// Matrix of x -> x^p: column j holds coords(e_j^p).
MatrixFp frobenius_matrix(const FieldCtxPtr& field);

/// sigma^k by binary exponentiation.
MatrixFp involution_matrix(const MatrixFp& sigma, std::size_t k);

/// (pi_plus, pi_minus) = ((1/2)(I - tau), (1/2)(I + tau)).
/// Throws not_involution unless tau^2 = I.
std::pair<MatrixFp, MatrixFp> projection_pair(const MatrixFp& tau);

/// Echelonized kernel bases of (tau - I) and (tau + I), as column vectors.
std::pair<std::vector<std::vector<Residue>>, std::vector<std::vector<Residue>>>
eigenspace_bases(const MatrixFp& tau);

/// Builds the whole apparatus for a field with even degree n = 2k.
/// Default xi is the first echelonized kernel vector of (tau + I); an
/// override must be a nonzero element of V^- (throws xi_zero / xi_not_in_v_minus).
DecompositionCtx build_decomposition(const FieldCtxPtr& field,
                                     const std::optional<FieldElem>& xi_override = std::nullopt);

/// Splits u as xi*a + b with a, b in V^+:  a = xi^{-1} (pi_plus u),  b = pi_minus u.
std::pair<FieldElem, FieldElem> split_coordinates(const FieldElem& u, const DecompositionCtx& ctx);

} // namespace halfcode

#include "halfcode/frobenius.hpp"

namespace halfcode {

MatrixFp frobenius_matrix(const FieldCtxPtr& field) {
    const std::size_t n = field->degree();
    MatrixFp sigma(n, n, field->modulus());
    for (std::size_t j = 1; j <= n; ++j) {
        FieldElem col = elem_pow(FieldElem::basis(field, j), field->modulus().value());
        for (std::size_t i = 0; i < n; ++i) sigma(i, j - 1) = col.coords()[i];
    }
    return sigma;
}

MatrixFp involution_matrix(const MatrixFp& sigma, std::size_t k) {
    if (sigma.rows() != sigma.cols()) throw dimension_mismatch("sigma must be square");
    return sigma.pow(k);
}

std::pair<MatrixFp, MatrixFp> projection_pair(const MatrixFp& tau) {
    const auto& p = tau.modulus();
    const MatrixFp id = MatrixFp::identity(tau.rows(), p);
    if (tau * tau != id) throw not_involution("tau^2 != I");
    const Residue half = p.inv(2);
    return {(id - tau).scaled(half), (id + tau).scaled(half)};
}

std::pair<std::vector<std::vector<Residue>>, std::vector<std::vector<Residue>>>
eigenspace_bases(const MatrixFp& tau) {
    const auto& p = tau.modulus();
    const MatrixFp id = MatrixFp::identity(tau.rows(), p);
    if (tau * tau != id) throw not_involution("tau^2 != I");
    return {kernel_basis(tau - id), kernel_basis(tau + id)};
}

bool DecompositionCtx::in_v_plus(const FieldElem& u) const {
    return tau.mul_vector(u.coords()) == u.coords();
}

bool DecompositionCtx::in_v_minus(const FieldElem& u) const {
    return tau.mul_vector(u.coords()) == (-u).coords();
}

DecompositionCtx build_decomposition(const FieldCtxPtr& field,
                                     const std::optional<FieldElem>& xi_override) {
    const std::size_t n = field->degree();
    if (n < 2 || n % 2 != 0)
        throw invalid_params("decomposition needs even degree n = 2k >= 2");
    const std::size_t k = n / 2;

    MatrixFp sigma = frobenius_matrix(field);
    MatrixFp tau = involution_matrix(sigma, k);
    auto [pi_plus, pi_minus] = projection_pair(tau);
    auto [vplus_cols, vminus_cols] = eigenspace_bases(tau);
    if (vplus_cols.size() != k || vminus_cols.size() != k)
        throw invalid_params("eigenspaces do not have dimension k"); // cannot happen for valid fields

    std::vector<FieldElem> v_plus, v_minus;
    v_plus.reserve(k);
    v_minus.reserve(k);
    for (auto& c : vplus_cols) v_plus.emplace_back(field, std::move(c));
    for (auto& c : vminus_cols) v_minus.emplace_back(field, std::move(c));

    // select xi: default is the first echelonized kernel vector of (tau + I)
    FieldElem xi = xi_override.value_or(v_minus.front());
    if (xi.is_zero()) throw xi_zero("xi must be nonzero");
    if (!xi.ctx()->same_field(*field)) throw ctx_mismatch("xi from a different field");
    if (tau.mul_vector(xi.coords()) != (-xi).coords())
        throw xi_not_in_v_minus("xi is not in V^-");
    FieldElem xi_inv = elem_inv(xi);

    std::vector<MatrixFp> mul_mats;
    mul_mats.reserve(k);
    for (const auto& f_i : v_plus) mul_mats.push_back(left_mul_matrix(f_i));

    return DecompositionCtx{field,
                            k,
                            std::move(sigma),
                            std::move(tau),
                            std::move(pi_plus),
                            std::move(pi_minus),
                            std::move(v_plus),
                            std::move(v_minus),
                            std::move(xi),
                            std::move(xi_inv),
                            std::move(mul_mats)};
}

std::pair<FieldElem, FieldElem> split_coordinates(const FieldElem& u, const DecompositionCtx& ctx) {
    if (!u.ctx()->same_field(*ctx.field)) throw ctx_mismatch("element from a different field");
    FieldElem proj_plus(ctx.field, ctx.pi_plus.mul_vector(u.coords()));
    FieldElem proj_minus(ctx.field, ctx.pi_minus.mul_vector(u.coords()));
    return {elem_mul(ctx.xi_inv, proj_plus), proj_minus};
}

} // namespace halfcode

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "halfcode/frobenius.hpp"

namespace halfcode {

/// Point of the projective line P^1(F_{p^k}): either infinity or a finite
/// point x in V^+ (the copy of F_{p^k} inside F_{p^n}).
class ProjectivePoint {
  public:
    static ProjectivePoint infinity() { return ProjectivePoint{std::nullopt}; }
    static ProjectivePoint finite(FieldElem x) { return ProjectivePoint{std::move(x)}; }

    bool is_infinity() const { return !x_.has_value(); }
    const FieldElem& finite_value() const {
        if (!x_) throw invalid_params("point at infinity has no finite value");
        return *x_;
    }

  private:
    explicit ProjectivePoint(std::optional<FieldElem> x) : x_(std::move(x)) {}
    std::optional<FieldElem> x_;
};

/// A k-dimensional code of length n over F_p, stored as a full-rank k x n
/// generator matrix (rows are basis codewords) together with its canonical
/// RREF. Codes are equal as subspaces iff their canonical forms are equal.
class LinearCode {
  public:
    /// Throws rank_deficiency unless the rows are linearly independent.
    static LinearCode from_generator(MatrixFp generator);

    std::size_t k() const { return generator_.rows(); }
    std::size_t n() const { return generator_.cols(); }
    const PrimeModulus& modulus() const { return generator_.modulus(); }
    const MatrixFp& generator() const { return generator_; }
    const MatrixFp& canonical() const { return canonical_; }

    bool same_subspace(const LinearCode& o) const { return canonical_ == o.canonical_; }

  private:
    LinearCode(MatrixFp generator, MatrixFp canonical);
    MatrixFp generator_;
    MatrixFp canonical_;
};

/// Generator basis permuted to [I_k | M] plus the check matrix read off it.
/// cols[t] is the ORIGINAL column index sitting at permuted position t
/// (pivots first, then the remaining columns in their original order).
/// matrix * check^T = 0 holds in the permuted coordinates.
struct StandardForm {
    std::vector<std::size_t> cols;
    MatrixFp matrix; // k x n      = [ I_k | M ]
    MatrixFp check;  // (n-k) x n  = [ -M^T | I_{n-k} ]
};

/// All p^k + 1 points of P^1(F_{p^k}): infinity first, then the finite points
/// x = sum a_i f_i where (a_1..a_k) are the base-p digits of the running
/// index, a_k least significant. Guarded to p^k <= 10^7.
std::vector<ProjectivePoint> enumerate_points(const DecompositionCtx& ctx);

/// Theta: infinity -> V^+ (rows f_1..f_k); finite x -> rows f_i * (x + xi).
LinearCode theta_embed(const ProjectivePoint& pt, const DecompositionCtx& ctx);

/// theta_embed over enumerate_points, in order. num_threads > 1 partitions the
/// point list; the result is identical to the sequential run.
std::vector<LinearCode> generate_all(const DecompositionCtx& ctx, std::size_t num_threads = 1);

StandardForm standard_form(const LinearCode& code);

/// Check matrix expressed back in ORIGINAL column order, so that
/// H * c = 0 for every codeword c of the unpermuted code.
MatrixFp check_matrix(const LinearCode& code);

/// Membership by syndrome: H * v = 0.
bool contains(const LinearCode& code, const std::vector<Residue>& v);

/// Membership by rank: stacking v onto the canonical basis must not raise the
/// rank. Independent route kept for cross-checking the syndrome path.
bool contains_by_solve(const LinearCode& code, const std::vector<Residue>& v);

/// All k x k minors of the generator, ordered by lexicographic column tuples,
/// normalized so the first nonzero coordinate is 1. Length C(n, k).
std::vector<Residue> pluecker_coords(const LinearCode& code);

/// Minimum Hamming weight over the (p^k - 1)/(p - 1) projective codeword
/// classes, by exhaustive scan. Guarded to p^k <= 10^7 (too_large beyond).
std::size_t min_distance(const LinearCode& code);

} // namespace halfcode

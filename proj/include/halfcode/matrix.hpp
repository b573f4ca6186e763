#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halfcode/fp.hpp"

namespace halfcode {

/// Dense row-major matrix over F_p. Entries are canonical residues in [0, p).
class MatrixFp {
  public:
    MatrixFp(std::size_t rows, std::size_t cols, PrimeModulus p);
    MatrixFp(std::size_t rows, std::size_t cols, PrimeModulus p, std::vector<Residue> entries);

    static MatrixFp identity(std::size_t n, PrimeModulus p);
    static MatrixFp from_rows(const std::vector<std::vector<Residue>>& rows, PrimeModulus p);
    static MatrixFp from_columns(const std::vector<std::vector<Residue>>& cols, PrimeModulus p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PrimeModulus& modulus() const { return p_; }

    Residue operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Residue& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const std::vector<Residue>& entries() const { return a_; }

    std::vector<Residue> row(std::size_t i) const;
    std::vector<Residue> column(std::size_t j) const;

    MatrixFp operator+(const MatrixFp& o) const;
    MatrixFp operator-(const MatrixFp& o) const;
    MatrixFp operator*(const MatrixFp& o) const;
    MatrixFp scaled(Residue c) const;
    MatrixFp transpose() const;
    /// Square matrix power by binary exponentiation (M^0 = I).
    MatrixFp pow(std::uint64_t e) const;

    std::vector<Residue> mul_vector(const std::vector<Residue>& v) const;

    bool is_zero() const;
    bool operator==(const MatrixFp& o) const;
    bool operator!=(const MatrixFp& o) const { return !(*this == o); }

  private:
    std::size_t rows_, cols_;
    PrimeModulus p_;
    std::vector<Residue> a_;

    void check_same_shape(const MatrixFp& o) const;
};

/// Reduced row echelon form: leading 1 per nonzero row, pivot columns strictly
/// increasing, zeros above and below each pivot.
struct RrefResult {
    MatrixFp R;
    std::vector<std::size_t> pivots; // 0-based column indices
    std::size_t rank;
};

RrefResult rref(const MatrixFp& m);

std::size_t rank(const MatrixFp& m);

/// Echelonized basis of the right kernel {v : M v = 0}. Each vector has a 1 in
/// its free coordinate; vectors are ordered by free column. Size = cols - rank.
std::vector<std::vector<Residue>> kernel_basis(const MatrixFp& m);

/// Inverse of a nonsingular square matrix; throws singular_matrix otherwise.
MatrixFp mat_inverse(const MatrixFp& m);

/// True iff the two matrices span the same row space (equal RREF after
/// dropping zero rows). Throws dimension_mismatch on different column counts.
bool row_space_equal(const MatrixFp& a, const MatrixFp& b);

/// RREF with zero rows dropped: the canonical representative of a row space.
MatrixFp canonical_row_space(const MatrixFp& m);

/// Text format: one row per line, entries space-separated, e.g. "6 5 1 0 0 0".
std::string format_matrix(const MatrixFp& m);
MatrixFp parse_matrix(const std::string& text, PrimeModulus p);

} // namespace halfcode

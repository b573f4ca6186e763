#include "halfcode/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace halfcode {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, PrimeModulus p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, PrimeModulus p, std::vector<Residue> entries)
    : rows_(rows), cols_(cols), p_(p), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw dimension_mismatch("MatrixFp: entry count != rows*cols");
    for (auto& x : a_) x %= p_.value();
}

MatrixFp MatrixFp::identity(std::size_t n, PrimeModulus p) {
    MatrixFp m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixFp MatrixFp::from_rows(const std::vector<std::vector<Residue>>& rows, PrimeModulus p) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    MatrixFp m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw dimension_mismatch("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j] % p.value();
    }
    return m;
}

MatrixFp MatrixFp::from_columns(const std::vector<std::vector<Residue>>& cols, PrimeModulus p) {
    return from_rows(cols, p).transpose();
}

std::vector<Residue> MatrixFp::row(std::size_t i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Residue> MatrixFp::column(std::size_t j) const {
    std::vector<Residue> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void MatrixFp::check_same_shape(const MatrixFp& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
        throw dimension_mismatch("matrix shape/modulus mismatch");
}

MatrixFp MatrixFp::operator+(const MatrixFp& o) const {
    check_same_shape(o);
    MatrixFp r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_.add(a_[i], o.a_[i]);
    return r;
}

MatrixFp MatrixFp::operator-(const MatrixFp& o) const {
    check_same_shape(o);
    MatrixFp r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = p_.sub(a_[i], o.a_[i]);
    return r;
}

MatrixFp MatrixFp::operator*(const MatrixFp& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw dimension_mismatch("matrix product shape mismatch");
    MatrixFp r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Residue a = (*this)(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = p_.add(r(i, j), p_.mul(a, o(t, j)));
        }
    return r;
}

MatrixFp MatrixFp::scaled(Residue c) const {
    MatrixFp r = *this;
    for (auto& x : r.a_) x = p_.mul(x, c);
    return r;
}

MatrixFp MatrixFp::transpose() const {
    MatrixFp r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

MatrixFp MatrixFp::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw dimension_mismatch("matrix power of non-square matrix");
    MatrixFp r = identity(rows_, p_);
    MatrixFp base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::vector<Residue> MatrixFp::mul_vector(const std::vector<Residue>& v) const {
    if (v.size() != cols_) throw dimension_mismatch("matrix-vector shape mismatch");
    std::vector<Residue> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t((*this)(i, j)) * v[j];
        r[i] = static_cast<Residue>(acc % p_.value());
    }
    return r;
}

bool MatrixFp::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Residue x) { return x == 0; });
}

bool MatrixFp::operator==(const MatrixFp& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
}

RrefResult rref(const MatrixFp& m) {
    MatrixFp r = m;
    const auto& p = m.modulus();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < r.cols() && pr < r.rows(); ++c) {
        // first nonzero entry scanning top-to-bottom in the leftmost unresolved column
        std::size_t sel = pr;
        while (sel < r.rows() && r(sel, c) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pr, j), r(sel, j));
        const Residue inv = p.inv(r(pr, c));
        for (std::size_t j = 0; j < r.cols(); ++j) r(pr, j) = p.mul(r(pr, j), inv);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pr || r(i, c) == 0) continue;
            const Residue f = r(i, c);
            for (std::size_t j = 0; j < r.cols(); ++j)
                r(i, j) = p.sub(r(i, j), p.mul(f, r(pr, j)));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(r), std::move(pivots), pr};
}

std::size_t rank(const MatrixFp& m) { return rref(m).rank; }

std::vector<std::vector<Residue>> kernel_basis(const MatrixFp& m) {
    const auto [R, pivots, rk] = rref(m);
    const auto& p = m.modulus();
    std::vector<std::vector<Residue>> basis;
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        std::vector<Residue> v(m.cols(), 0);
        v[c] = 1;
        for (std::size_t r_i = 0; r_i < rk; ++r_i) v[pivots[r_i]] = p.neg(R(r_i, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

MatrixFp mat_inverse(const MatrixFp& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    MatrixFp aug(n, 2 * n, m.modulus());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto res = rref(aug);
    if (res.rank < n) throw singular_matrix("matrix is singular");
    MatrixFp inv(n, n, m.modulus());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = res.R(i, n + j);
    return inv;
}

MatrixFp canonical_row_space(const MatrixFp& m) {
    const auto res = rref(m);
    MatrixFp out(res.rank, m.cols(), m.modulus());
    for (std::size_t i = 0; i < res.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = res.R(i, j);
    return out;
}

bool row_space_equal(const MatrixFp& a, const MatrixFp& b) {
    if (a.cols() != b.cols() || a.modulus() != b.modulus())
        throw dimension_mismatch("row_space_equal: column count or modulus mismatch");
    return canonical_row_space(a) == canonical_row_space(b);
}

std::string format_matrix(const MatrixFp& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ' ';
            s += std::to_string(m(i, j));
        }
        s += '\n';
    }
    return s;
}

MatrixFp parse_matrix(const std::string& text, PrimeModulus p) {
    std::vector<std::vector<Residue>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<Residue> row;
        std::int64_t v;
        while (ls >> v) row.push_back(p.reduce(v));
        if (!ls.eof()) throw parse_error("bad matrix entry", line_no);
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows[0].size())
            throw parse_error("inconsistent row length", line_no);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty matrix");
    return MatrixFp::from_rows(rows, p);
}

} // namespace halfcode

#include "halfcode/code.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <thread>

#include "halfcode/kernels.hpp"

namespace halfcode {

namespace {

constexpr std::uint64_t kEnumerationCap = 10'000'000;

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    unsigned __int128 v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > cap) throw too_large("p^k exceeds the enumeration cap");
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

LinearCode::LinearCode(MatrixFp generator, MatrixFp canonical)
    : generator_(std::move(generator)), canonical_(std::move(canonical)) {}

LinearCode LinearCode::from_generator(MatrixFp generator) {
    if (generator.rows() == 0 || generator.cols() == 0)
        throw invalid_params("code dimensions must be positive");
    auto res = rref(generator);
    if (res.rank != generator.rows())
        throw rank_deficiency("generator rows are linearly dependent");
    return LinearCode(std::move(generator), std::move(res.R));
}

std::vector<ProjectivePoint> enumerate_points(const DecompositionCtx& ctx) {
    const std::uint64_t count =
        checked_pow(ctx.field->modulus().value(), ctx.k, kEnumerationCap);
    std::vector<ProjectivePoint> pts;
    pts.reserve(count + 1);
    pts.push_back(ProjectivePoint::infinity());
    const std::uint32_t p = ctx.field->modulus().value();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        FieldElem x = FieldElem::zero(ctx.field);
        std::uint64_t t = idx;
        // digits a_1..a_k of idx, a_k least significant
        for (std::size_t i = ctx.k; i-- > 0;) {
            const auto digit = static_cast<Residue>(t % p);
            t /= p;
            if (digit) x = x + ctx.v_plus_basis[i].scaled(digit);
        }
        pts.push_back(ProjectivePoint::finite(std::move(x)));
    }
    return pts;
}

LinearCode theta_embed(const ProjectivePoint& pt, const DecompositionCtx& ctx) {
    const std::size_t n = ctx.field->degree();
    MatrixFp gen(ctx.k, n, ctx.field->modulus());
    if (pt.is_infinity()) {
        for (std::size_t i = 0; i < ctx.k; ++i)
            for (std::size_t j = 0; j < n; ++j) gen(i, j) = ctx.v_plus_basis[i].coords()[j];
    } else {
        const FieldElem& x = pt.finite_value();
        if (!ctx.in_v_plus(x)) throw invalid_params("finite point does not lie in V^+");
        const FieldElem u = x + ctx.xi;
        for (std::size_t i = 0; i < ctx.k; ++i) {
            const auto row = ctx.vplus_mul_mats[i].mul_vector(u.coords());
            for (std::size_t j = 0; j < n; ++j) gen(i, j) = row[j];
        }
    }
    return LinearCode::from_generator(std::move(gen));
}

std::vector<LinearCode> generate_all(const DecompositionCtx& ctx, std::size_t num_threads) {
    const auto pts = enumerate_points(ctx);
    if (num_threads <= 1) {
        std::vector<LinearCode> codes;
        codes.reserve(pts.size());
        for (const auto& pt : pts) codes.push_back(theta_embed(pt, ctx));
        return codes;
    }
    // partitioned run; slots keep index order so the output matches sequential
    std::vector<std::optional<LinearCode>> slots(pts.size());
    std::vector<std::thread> workers;
    const std::size_t nt = std::min(num_threads, pts.size());
    workers.reserve(nt);
    for (std::size_t w = 0; w < nt; ++w) {
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < pts.size(); i += nt)
                slots[i] = theta_embed(pts[i], ctx);
        });
    }
    for (auto& t : workers) t.join();
    std::vector<LinearCode> codes;
    codes.reserve(pts.size());
    for (auto& s : slots) codes.push_back(std::move(*s));
    return codes;
}

StandardForm standard_form(const LinearCode& code) {
    const MatrixFp& R = code.canonical();
    const auto res = rref(R); // R is already reduced; reuse for the pivot list
    const std::size_t k = code.k(), n = code.n();
    const auto& p = code.modulus();

    std::vector<std::size_t> cols = res.pivots;
    cols.reserve(n);
    std::size_t next_pivot = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (next_pivot < res.pivots.size() && res.pivots[next_pivot] == c) {
            ++next_pivot;
            continue;
        }
        cols.push_back(c);
    }

    MatrixFp matrix(k, n, p);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < n; ++t) matrix(i, t) = R(i, cols[t]);

    MatrixFp check(n - k, n, p);
    for (std::size_t r = 0; r < n - k; ++r) {
        for (std::size_t c = 0; c < k; ++c) check(r, c) = p.neg(matrix(c, k + r)); // -M^T
        check(r, k + r) = 1;
    }
    return {std::move(cols), std::move(matrix), std::move(check)};
}

MatrixFp check_matrix(const LinearCode& code) {
    const StandardForm sf = standard_form(code);
    const std::size_t n = code.n();
    MatrixFp h(n - code.k(), n, code.modulus());
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t t = 0; t < n; ++t) h(r, sf.cols[t]) = sf.check(r, t);
    return h;
}

bool contains(const LinearCode& code, const std::vector<Residue>& v) {
    if (v.size() != code.n()) throw dimension_mismatch("vector length != code length");
    const MatrixFp h = check_matrix(code);
    const auto syndrome = h.mul_vector(v);
    return std::all_of(syndrome.begin(), syndrome.end(), [](Residue x) { return x == 0; });
}

bool contains_by_solve(const LinearCode& code, const std::vector<Residue>& v) {
    if (v.size() != code.n()) throw dimension_mismatch("vector length != code length");
    MatrixFp stacked(code.k() + 1, code.n(), code.modulus());
    for (std::size_t i = 0; i < code.k(); ++i)
        for (std::size_t j = 0; j < code.n(); ++j) stacked(i, j) = code.canonical()(i, j);
    for (std::size_t j = 0; j < code.n(); ++j) stacked(code.k(), j) = v[j] % code.modulus().value();
    return rank(stacked) == code.k();
}

namespace {

Residue det_of_columns(const MatrixFp& g, const std::vector<std::size_t>& cols) {
    const auto& p = g.modulus();
    const std::size_t k = g.rows();
    MatrixFp m(k, k, p);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = g(i, cols[j]);
    // elimination, tracking the pivot product and swap sign
    Residue det = 1;
    bool negate = false;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t sel = c;
        while (sel < k && m(sel, c) == 0) ++sel;
        if (sel == k) return 0;
        if (sel != c) {
            negate = !negate;
            for (std::size_t j = 0; j < k; ++j) std::swap(m(c, j), m(sel, j));
        }
        det = p.mul(det, m(c, c));
        const Residue inv = p.inv(m(c, c));
        for (std::size_t i = c + 1; i < k; ++i) {
            if (m(i, c) == 0) continue;
            const Residue f = p.mul(m(i, c), inv);
            for (std::size_t j = c; j < k; ++j) m(i, j) = p.sub(m(i, j), p.mul(f, m(c, j)));
        }
    }
    return negate ? p.neg(det) : det;
}

} // namespace

std::vector<Residue> pluecker_coords(const LinearCode& code) {
    const std::size_t k = code.k(), n = code.n();
    const auto& p = code.modulus();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Residue> out;
    for (;;) {
        out.push_back(det_of_columns(code.generator(), idx));
        // next lexicographic k-combination of {0..n-1}
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) {
                // normalize: first nonzero coordinate scaled to 1
                for (Residue c : out) {
                    if (c == 0) continue;
                    if (c != 1) {
                        const Residue inv = p.inv(c);
                        for (auto& x : out) x = p.mul(x, inv);
                    }
                    break;
                }
                return out;
            }
        }
    }
}

namespace {

// Generic scalar scan over one leading-digit class: codewords
// G_t + sum_{i>t} d_i G_i with d running through all suffixes.
std::size_t scan_class_scalar(const MatrixFp& g, std::size_t t) {
    const auto& p = g.modulus();
    const std::uint32_t pv = p.value();
    const std::size_t k = g.rows(), n = g.cols();
    std::vector<Residue> base = g.row(t);
    auto weight = [&](const std::vector<Residue>& v) {
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(),
                                                      [](Residue x) { return x != 0; }));
    };
    if (t == k - 1) return weight(base);
    std::size_t best = n + 1;
    std::vector<std::uint32_t> digits(k, 0); // positions t+1..k-2 drive the odometer
    for (;;) {
        std::vector<Residue> cw = base;
        for (std::uint32_t a = 0; a < pv; ++a) {
            best = std::min(best, weight(cw));
            for (std::size_t j = 0; j < n; ++j) cw[j] = p.add(cw[j], g(k - 1, j));
        }
        // advance the odometer; adding G_pos p times cancels, so wraps are free
        auto pos = static_cast<std::ptrdiff_t>(k) - 2;
        while (pos >= static_cast<std::ptrdiff_t>(t) + 1) {
            const auto up = static_cast<std::size_t>(pos);
            for (std::size_t j = 0; j < n; ++j) base[j] = p.add(base[j], g(up, j));
            if (++digits[up] < pv) break;
            digits[up] = 0;
            --pos;
        }
        if (pos < static_cast<std::ptrdiff_t>(t) + 1) return best;
    }
}

// Kernel-backed scan: codewords are materialized in 32-byte row slots and
// weighed in blocks, so the inner loops run through the dispatched SIMD path.
std::size_t scan_class_kernel(const MatrixFp& g, std::size_t t, std::uint8_t* buf,
                              std::size_t buf_rows) {
    namespace kr = kernels;
    const auto& kern = kr::active_kernels();
    const std::uint8_t pv = static_cast<std::uint8_t>(g.modulus().value());
    const std::size_t k = g.rows(), n = g.cols();

    std::vector<std::array<std::uint8_t, kr::kRowStride>> rows(k);
    for (std::size_t i = 0; i < k; ++i) {
        rows[i].fill(0);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<std::uint8_t>(g(i, j));
    }

    if (t == k - 1) return kern.min_weight_rows(rows[t].data(), 1);

    std::uint32_t best = 0xffffffffu;
    std::array<std::uint8_t, kr::kRowStride> base = rows[t];
    std::vector<std::uint32_t> digits(k, 0);
    std::size_t filled = 0;
    auto flush = [&] {
        if (filled) best = std::min(best, kern.min_weight_rows(buf, filled));
        filled = 0;
    };
    for (;;) {
        if (filled + pv > buf_rows) flush();
        kern.fill_axpy_rows(buf + filled * kr::kRowStride, base.data(), rows[k - 1].data(), pv,
                            pv);
        filled += pv;
        auto pos = static_cast<std::ptrdiff_t>(k) - 2;
        while (pos >= static_cast<std::ptrdiff_t>(t) + 1) {
            const auto up = static_cast<std::size_t>(pos);
            kern.add_row_mod(base.data(), base.data(), rows[up].data(), pv);
            if (++digits[up] < pv) break;
            digits[up] = 0;
            --pos;
        }
        if (pos < static_cast<std::ptrdiff_t>(t) + 1) break;
    }
    flush();
    return best;
}

} // namespace

std::size_t min_distance(const LinearCode& code) {
    const auto& p = code.modulus();
    checked_pow(p.value(), code.k(), kEnumerationCap);
    const std::size_t k = code.k(), n = code.n();

    std::size_t best = n + 1;
    if (p.value() <= 127 && n <= kernels::kRowStride) {
        constexpr std::size_t kBufRows = 8192;
        std::vector<std::uint8_t> buf(kBufRows * kernels::kRowStride);
        for (std::size_t t = 0; t < k; ++t)
            best = std::min(best, scan_class_kernel(code.generator(), t, buf.data(), kBufRows));
    } else {
        for (std::size_t t = 0; t < k; ++t)
            best = std::min(best, scan_class_scalar(code.generator(), t));
    }
    return best;
}

} // namespace halfcode

#include "halfcode/ext_field.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace halfcode {

namespace {

void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (!a.ctx()->same_field(*b.ctx())) throw ctx_mismatch("elements from different fields");
}

std::vector<Residue> pad_coords(const PolyFp& a, std::size_t n) {
    // reduced polynomial -> fixed-length descending coordinates
    const auto& c = a.coeffs();
    std::vector<Residue> out(n, 0);
    std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(n - c.size()));
    return out;
}

} // namespace

FieldCtx::FieldCtx(PrimeModulus p, PolyFp f)
    : p_(p), n_(static_cast<std::size_t>(f.degree())), f_(std::move(f)) {}

FieldCtxPtr FieldCtx::create(PrimeModulus p, PolyFp f) {
    if (f.modulus() != p) throw invalid_params("modulus polynomial over wrong prime field");
    if (f.degree() < 1) throw invalid_params("modulus polynomial must have degree >= 1");
    if (f.leading() != 1) throw invalid_params("modulus polynomial must be monic");
    if (!is_irreducible(f)) throw invalid_params("modulus polynomial is reducible");
    return FieldCtxPtr(new FieldCtx(p, std::move(f)));
}

std::uint64_t FieldCtx::cardinality() const {
    unsigned __int128 q = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        q *= p_.value();
        if (q >= (static_cast<unsigned __int128>(1) << 63))
            throw too_large("p^n exceeds 2^63");
    }
    return static_cast<std::uint64_t>(q);
}

FieldElem::FieldElem(FieldCtxPtr ctx, std::vector<Residue> coords)
    : ctx_(std::move(ctx)), c_(std::move(coords)) {
    if (c_.size() != ctx_->degree()) throw dimension_mismatch("coordinate count != field degree");
    for (auto& x : c_) x %= ctx_->modulus().value();
}

FieldElem FieldElem::zero(FieldCtxPtr ctx) {
    std::vector<Residue> c(ctx->degree(), 0);
    return FieldElem(std::move(ctx), std::move(c));
}

FieldElem FieldElem::one(FieldCtxPtr ctx) {
    std::vector<Residue> c(ctx->degree(), 0);
    c.back() = 1;
    return FieldElem(std::move(ctx), std::move(c));
}

FieldElem FieldElem::basis(FieldCtxPtr ctx, std::size_t j) {
    if (j < 1 || j > ctx->degree()) throw invalid_params("basis index out of range");
    std::vector<Residue> c(ctx->degree(), 0);
    c[j - 1] = 1;
    return FieldElem(std::move(ctx), std::move(c));
}

FieldElem FieldElem::from_poly(FieldCtxPtr ctx, const PolyFp& a) {
    PolyFp r = poly_rem(a, ctx->poly());
    auto c = pad_coords(r, ctx->degree());
    return FieldElem(std::move(ctx), std::move(c));
}

PolyFp FieldElem::to_poly() const { return PolyFp(ctx_->modulus(), c_); }

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Residue x) { return x == 0; });
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_ctx(*this, o);
    std::vector<Residue> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->modulus().add(c_[i], o.c_[i]);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same_ctx(*this, o);
    std::vector<Residue> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->modulus().sub(c_[i], o.c_[i]);
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-() const { return scaled(ctx_->modulus().neg(1)); }

FieldElem FieldElem::scaled(Residue c) const {
    std::vector<Residue> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx_->modulus().mul(c_[i], c);
    return FieldElem(ctx_, std::move(r));
}

bool FieldElem::operator==(const FieldElem& o) const {
    return ctx_->same_field(*o.ctx_) && c_ == o.c_;
}

FieldElem elem_mul(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    PolyFp prod = poly_rem(a.to_poly() * b.to_poly(), a.ctx()->poly());
    return FieldElem::from_poly(a.ctx(), prod);
}

FieldElem elem_inv(const FieldElem& a) {
    if (a.is_zero()) throw zero_inverse("inverse of zero field element");
    // extended Euclid on (a, f): find u with u*a = 1 mod f
    const auto& f = a.ctx()->poly();
    const auto& p = a.ctx()->modulus();
    PolyFp r0 = f, r1 = a.to_poly();
    PolyFp t0 = PolyFp::zero(p), t1 = PolyFp::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, rem] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        PolyFp t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd(a, f), a unit since f is irreducible and a != 0
    PolyFp u = t0.scaled(p.inv(r0.leading()));
    return FieldElem::from_poly(a.ctx(), u);
}

FieldElem elem_pow(const FieldElem& a, std::uint64_t e) {
    if (a.is_zero() && e == 0) throw zero_to_zero_power("0^0 is undefined");
    FieldElem r = FieldElem::one(a.ctx());
    FieldElem base = a;
    while (e) {
        if (e & 1) r = elem_mul(r, base);
        base = elem_mul(base, base);
        e >>= 1;
    }
    return r;
}

StructureTensor::StructureTensor(const FieldCtxPtr& ctx) : n_(ctx->degree()), a_(n_ * n_ * n_) {
    for (std::size_t j = 1; j <= n_; ++j)
        for (std::size_t k = j; k <= n_; ++k) {
            FieldElem prod = elem_mul(FieldElem::basis(ctx, j), FieldElem::basis(ctx, k));
            for (std::size_t l = 1; l <= n_; ++l) {
                const Residue v = prod.coords()[l - 1];
                a_[((j - 1) * n_ + (k - 1)) * n_ + (l - 1)] = v;
                a_[((k - 1) * n_ + (j - 1)) * n_ + (l - 1)] = v; // e_j e_k = e_k e_j
            }
        }
}

StructureTensor structure_tensor(const FieldCtxPtr& ctx) { return StructureTensor(ctx); }

FieldElem mul_via_tensor(const StructureTensor& t, const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    const std::size_t n = t.dim();
    if (n != a.ctx()->degree()) throw dimension_mismatch("tensor dimension != field degree");
    const auto& p = a.ctx()->modulus();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        const Residue aj = a.coords()[j - 1];
        if (aj == 0) continue;
        for (std::size_t k = 1; k <= n; ++k) {
            const Residue bk = b.coords()[k - 1];
            if (bk == 0) continue;
            const Residue ab = p.mul(aj, bk);
            for (std::size_t l = 1; l <= n; ++l)
                acc[l - 1] = (acc[l - 1] + std::uint64_t(ab) * t.c(j, k, l)) % p.value();
        }
    }
    std::vector<Residue> out(n);
    for (std::size_t l = 0; l < n; ++l) out[l] = static_cast<Residue>(acc[l]);
    return FieldElem(a.ctx(), std::move(out));
}

MatrixFp left_mul_matrix(const FieldElem& a) {
    const std::size_t n = a.ctx()->degree();
    MatrixFp m(n, n, a.ctx()->modulus());
    for (std::size_t j = 1; j <= n; ++j) {
        FieldElem col = elem_mul(a, FieldElem::basis(a.ctx(), j));
        for (std::size_t i = 0; i < n; ++i) m(i, j - 1) = col.coords()[i];
    }
    return m;
}

std::uint64_t element_order(const FieldElem& a) {
    if (a.is_zero()) throw zero_order("order of zero");
    const std::uint64_t group = a.ctx()->cardinality() - 1;
    std::uint64_t ord = group;
    const FieldElem one = FieldElem::one(a.ctx());
    for (const auto& [prime, exponent] : factorize(group).entries) {
        for (std::uint32_t i = 0; i < exponent; ++i) {
            if (ord % prime != 0) break;
            if (elem_pow(a, ord / prime) == one)
                ord /= prime;
            else
                break;
        }
    }
    return ord;
}

FieldElem find_primitive_root(const FieldCtxPtr& ctx, std::uint64_t seed) {
    const std::uint64_t group = ctx->cardinality() - 1;
    const auto factors = factorize(group).entries;
    const FieldElem one = FieldElem::one(ctx);
    std::mt19937_64 rng(seed);
    const std::size_t n = ctx->degree();
    const std::uint32_t p = ctx->modulus().value();
    for (;;) {
        std::vector<Residue> c(n);
        for (auto& x : c) x = static_cast<Residue>(rng() % p); // see find_irreducible note
        FieldElem cand(ctx, std::move(c));
        if (cand.is_zero()) continue;
        bool primitive = true;
        for (const auto& [prime, exponent] : factors) {
            (void)exponent;
            if (elem_pow(cand, group / prime) == one) {
                primitive = false;
                break;
            }
        }
        if (primitive) return cand;
    }
}

FieldElem parse_elem(const std::string& text, const FieldCtxPtr& ctx) {
    const auto open = text.find('[');
    if (open != std::string::npos) {
        // coordinate form: fixed-length descending vector
        std::vector<Residue> coords;
        std::string tok;
        bool closed = false;
        for (std::size_t i = open + 1; i < text.size(); ++i) {
            const char ch = text[i];
            if (ch == ']') {
                closed = true;
                if (!tok.empty()) coords.push_back(ctx->modulus().reduce(std::stoll(tok)));
                break;
            }
            if (ch == ',') {
                if (tok.empty()) throw parse_error("empty coordinate in: " + text);
                coords.push_back(ctx->modulus().reduce(std::stoll(tok)));
                tok.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                tok.push_back(ch);
            }
        }
        if (!closed) throw parse_error("missing ']' in: " + text);
        if (coords.size() != ctx->degree())
            throw parse_error("expected " + std::to_string(ctx->degree()) + " coordinates in: " + text);
        return FieldElem(ctx, std::move(coords));
    }
    PolyFp a = parse_poly(text, ctx->modulus());
    if (a.degree() >= static_cast<int>(ctx->degree()))
        throw parse_error("element degree exceeds field degree in: " + text);
    return FieldElem::from_poly(ctx, a);
}

std::string format_elem(const FieldElem& a) { return format_poly(a.to_poly()); }

std::string format_elem_coords(const FieldElem& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.coords()[i]);
    }
    s += ']';
    return s;
}

} // namespace halfcode

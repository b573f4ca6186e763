#include "halfcode/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace halfcode {

PolyFp::PolyFp(PrimeModulus p, std::vector<Residue> coeffs_descending)
    : p_(p), c_(std::move(coeffs_descending)) {
    for (auto& x : c_) x %= p_.value();
    trim();
}

void PolyFp::trim() {
    std::size_t i = 0;
    while (i < c_.size() && c_[i] == 0) ++i;
    if (i) c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(i));
}

PolyFp PolyFp::monomial(PrimeModulus p, Residue c, std::size_t d) {
    std::vector<Residue> v(d + 1, 0);
    v[0] = c;
    return PolyFp(p, std::move(v));
}

Residue PolyFp::coeff(std::size_t d) const {
    if (d >= c_.size()) return 0;
    return c_[c_.size() - 1 - d];
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    std::size_t len = std::max(c_.size(), o.c_.size());
    std::vector<Residue> r(len, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[len - c_.size() + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        auto& slot = r[len - o.c_.size() + i];
        slot = p_.add(slot, o.c_[i]);
    }
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::operator-(const PolyFp& o) const { return *this + o.scaled(p_.neg(1)); }

PolyFp PolyFp::operator*(const PolyFp& o) const {
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<Residue> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = p_.add(r[i + j], p_.mul(c_[i], o.c_[j]));
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::scaled(Residue c) const {
    std::vector<Residue> r = c_;
    for (auto& x : r) x = p_.mul(x, c);
    return PolyFp(p_, std::move(r));
}

PolyFp PolyFp::monic() const {
    if (is_zero() || leading() == 1) return *this;
    return scaled(p_.inv(leading()));
}

PolyDivRem poly_divrem(const PolyFp& a, const PolyFp& m) {
    if (m.is_zero()) throw division_by_zero_poly("polynomial division by zero");
    const auto& p = a.modulus();
    if (p != m.modulus()) throw ctx_mismatch("poly_divrem: mismatched moduli");
    std::vector<Residue> rem = a.coeffs();
    const std::size_t md = m.coeffs().size();
    if (rem.size() < md) return {PolyFp::zero(p), a};
    std::vector<Residue> quot(rem.size() - md + 1, 0);
    const Residue lead_inv = p.inv(m.leading());
    for (std::size_t i = 0; i + md <= rem.size(); ++i) {
        Residue c = p.mul(rem[i], lead_inv);
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < md; ++j) rem[i + j] = p.sub(rem[i + j], p.mul(c, m.coeffs()[j]));
    }
    return {PolyFp(p, std::move(quot)), PolyFp(p, std::move(rem))};
}

PolyFp poly_rem(const PolyFp& a, const PolyFp& m) { return poly_divrem(a, m).remainder; }

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyFp poly_pow_mod(const PolyFp& a, std::uint64_t e, const PolyFp& m) {
    PolyFp r = poly_rem(PolyFp::constant(a.modulus(), 1), m);
    PolyFp base = poly_rem(a, m);
    while (e) {
        if (e & 1) r = poly_rem(r * base, m);
        base = poly_rem(base * base, m);
        e >>= 1;
    }
    return r;
}

PolyFp frobenius_power(const PolyFp& m, std::size_t d) {
    const auto& p = m.modulus();
    PolyFp h = poly_rem(PolyFp::monomial(p, 1, 1), m); // X
    for (std::size_t i = 0; i < d; ++i) h = poly_pow_mod(h, p.value(), m);
    return h;
}

bool is_irreducible(const PolyFp& f) {
    if (f.degree() < 1) throw invalid_params("is_irreducible: degree must be >= 1");
    const auto& p = f.modulus();
    const auto n = static_cast<std::size_t>(f.degree());
    const PolyFp x = poly_rem(PolyFp::monomial(p, 1, 1), f);
    if (frobenius_power(f, n) != x) return false;
    for (const auto& [l, e] : factorize(n).entries) {
        (void)e;
        PolyFp g = poly_gcd(frobenius_power(f, n / l) - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

PolyFp find_irreducible(PrimeModulus p, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw invalid_params("find_irreducible: degree must be >= 1");
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<Residue> c(n + 1);
        c[0] = 1;
        // rng() % p instead of uniform_int_distribution: the distribution's
        // mapping is implementation-defined and would break cross-platform
        // reproducibility of the seeded search.
        for (std::size_t i = 1; i <= n; ++i) c[i] = static_cast<Residue>(rng() % p.value());
        PolyFp cand(p, std::move(c));
        if (cand.degree() == static_cast<int>(n) && is_irreducible(cand)) return cand;
    }
}

namespace {

bool looks_symbolic(const std::string& s) {
    return s.find('X') != std::string::npos || s.find('x') != std::string::npos;
}

// "X^6+X^5+2*X^4+X^3+5*X^2+3*X+2"; '-' starts a negated term.
std::vector<Residue> parse_symbolic(const std::string& text, PrimeModulus p) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("empty polynomial");
    std::vector<std::int64_t> by_degree; // index = degree
    std::size_t i = 0;
    while (i < s.size()) {
        std::int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::int64_t coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                coef = coef * 10 + (s[i++] - '0');
            have_coef = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        std::size_t deg = 0;
        if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw parse_error("expected exponent after '^' in: " + text);
                deg = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    deg = deg * 10 + static_cast<std::size_t>(s[i++] - '0');
            }
        } else if (!have_coef) {
            throw parse_error("expected term at position " + std::to_string(i) + " in: " + text);
        }
        if (by_degree.size() <= deg) by_degree.resize(deg + 1, 0);
        by_degree[deg] += sign * coef;
    }
    std::vector<Residue> desc(by_degree.size());
    for (std::size_t d = 0; d < by_degree.size(); ++d)
        desc[by_degree.size() - 1 - d] = p.reduce(by_degree[d]);
    return desc;
}

std::vector<Residue> parse_coeff_list(const std::string& text, PrimeModulus p) {
    std::vector<Residue> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) throw parse_error("empty coefficient in: " + text);
        out.push_back(p.reduce(std::stoll(tok)));
        tok.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            tok.push_back(ch);
        } else if (ch == '[' || ch == ']') {
            continue;
        } else {
            throw parse_error(std::string("unexpected character '") + ch + "' in: " + text);
        }
    }
    flush();
    return out;
}

} // namespace

PolyFp parse_poly(const std::string& text, PrimeModulus p) {
    if (looks_symbolic(text)) return PolyFp(p, parse_symbolic(text, p));
    return PolyFp(p, parse_coeff_list(text, p));
}

std::string format_poly_coeffs(const PolyFp& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.coeffs()[i]);
    }
    return s;
}

std::string format_poly(const PolyFp& f) {
    if (f.is_zero()) return "0";
    std::string s;
    const auto deg = static_cast<std::size_t>(f.degree());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Residue c = f.coeffs()[i];
        if (c == 0) continue;
        std::size_t d = deg - i;
        if (!s.empty()) s += '+';
        if (d == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) {
                s += std::to_string(c);
                s += '*';
            }
            s += 'X';
            if (d > 1) {
                s += '^';
                s += std::to_string(d);
            }
        }
    }
    return s;
}

} // namespace halfcode

#pragma once

// Finite fields F_q (q = p^e), univariate polynomials over them, and the
// exp / subexp invariants of a polynomial.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace metacomm {

// Largest field order for which log/antilog tables are built.
inline constexpr std::uint64_t max_field_order = std::uint64_t{1} << 16;

// Default iteration bound for exp/subexp searches.
inline constexpr std::uint64_t default_exp_cap = 1'000'000;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
    if (q < 2) return {0, 0};
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return {0, 0};
    return {static_cast<std::uint32_t>(p), e};
}

// Element of a finite field, stored as the base-p integer encoding
// c_0 + c_1 p + ... + c_{e-1} p^{e-1} of its coefficient vector.
struct FieldElem {
    std::uint32_t code = 0;
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;    // monic, low-degree-first; empty for e == 1
    std::vector<std::uint32_t> exp_table;  // g^i for i in [0, q-1)
    std::vector<std::uint32_t> log_table;  // inverse of exp_table; entry 0 unused
};

inline std::vector<std::uint32_t> decode(const FieldData& d, std::uint32_t code) {
    std::vector<std::uint32_t> digits(d.e);
    for (std::uint32_t i = 0; i < d.e; ++i) {
        digits[i] = code % d.p;
        code /= d.p;
    }
    return digits;
}

inline std::uint32_t encode(const FieldData& d, std::span<const std::uint32_t> digits) {
    std::uint32_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * d.p + digits[i];
    return code;
}

// Schoolbook product reduced modulo the defining polynomial; only used while
// the log tables are being built.
inline std::uint32_t slow_mul(const FieldData& d, std::uint32_t a, std::uint32_t b) {
    if (d.e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % d.p);
    auto x = decode(d, a);
    auto y = decode(d, b);
    std::vector<std::uint64_t> prod(2 * d.e - 1, 0);
    for (std::uint32_t i = 0; i < d.e; ++i)
        for (std::uint32_t j = 0; j < d.e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % d.p;
    for (std::size_t k = prod.size(); k-- > d.e;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i < d.e; ++i)
            prod[k - d.e + i] = (prod[k - d.e + i] + (d.p - c) * d.modulus[i]) % d.p;
        prod[k] = 0;
    }
    std::vector<std::uint32_t> digits(d.e);
    for (std::uint32_t i = 0; i < d.e; ++i) digits[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(d, digits);
}

inline void build_log_tables(FieldData& d) {
    const std::uint32_t n = d.q - 1;
    d.log_table.assign(d.q, 0);
    d.exp_table.assign(n, 0);
    for (std::uint32_t g = 1; g < d.q; ++g) {
        std::uint32_t x = 1;
        bool primitive = true;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i > 0 && x == 1) {
                primitive = false;
                break;
            }
            d.exp_table[i] = x;
            x = slow_mul(d, x, g);
        }
        if (primitive && x == 1) {
            for (std::uint32_t i = 0; i < n; ++i) d.log_table[d.exp_table[i]] = i;
            return;
        }
    }
    throw consistency_error("no primitive element found in F_" + std::to_string(d.q));
}

}  // namespace detail

class Field {
public:
    // Builds F_{p^e}; for e > 1 the modulus is the lexicographically smallest
    // monic irreducible of degree e (constant term compared first).
    static Field make(std::uint32_t p, std::uint32_t e = 1);

    // F_q for a prime power q.
    static Field of_order(std::uint64_t q) {
        auto [p, e] = prime_power_decompose(q);
        if (p == 0) throw domain_error("field order " + std::to_string(q) + " is not a prime power");
        return make(p, e);
    }

    std::uint32_t p() const { return d_->p; }
    std::uint32_t e() const { return d_->e; }
    std::uint32_t q() const { return d_->q; }
    bool is_prime_field() const { return d_->e == 1; }
    const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }

    FieldElem element(std::uint32_t code) const {
        if (code >= d_->q) throw domain_error("element code out of range");
        return {code};
    }

    FieldElem from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(d_->p);
        return {static_cast<std::uint32_t>(((v % p) + p) % p)};
    }

    FieldElem from_coeffs(std::span<const std::int64_t> cs) const {
        if (cs.size() > d_->e) throw domain_error("too many coefficients for F_" + std::to_string(d_->q));
        std::vector<std::uint32_t> digits(d_->e, 0);
        for (std::size_t i = 0; i < cs.size(); ++i) digits[i] = from_int(cs[i]).code;
        return {detail::encode(*d_, digits)};
    }

    std::vector<std::uint32_t> coeffs(FieldElem a) const { return detail::decode(*d_, a.code); }

    FieldElem add(FieldElem a, FieldElem b) const {
        if (d_->e == 1) return {(a.code + b.code) % d_->p};
        std::uint32_t out = 0, scale = 1, x = a.code, y = b.code;
        for (std::uint32_t i = 0; i < d_->e; ++i) {
            out += ((x % d_->p + y % d_->p) % d_->p) * scale;
            x /= d_->p;
            y /= d_->p;
            scale *= d_->p;
        }
        return {out};
    }

    FieldElem neg(FieldElem a) const {
        if (d_->e == 1) return {(d_->p - a.code) % d_->p};
        std::uint32_t out = 0, scale = 1, x = a.code;
        for (std::uint32_t i = 0; i < d_->e; ++i) {
            out += ((d_->p - x % d_->p) % d_->p) * scale;
            x /= d_->p;
            scale *= d_->p;
        }
        return {out};
    }

    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.code == 0 || b.code == 0) return {0};
        const std::uint32_t n = d_->q - 1;
        return {d_->exp_table[(d_->log_table[a.code] + d_->log_table[b.code]) % n]};
    }

    FieldElem inv(FieldElem a) const {
        if (a.code == 0) throw domain_error("inverse of zero in F_" + std::to_string(d_->q));
        const std::uint32_t n = d_->q - 1;
        return {d_->exp_table[(n - d_->log_table[a.code]) % n]};
    }

    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    FieldElem pow(FieldElem a, std::uint64_t k) const {
        if (k == 0) return one();
        if (a.code == 0) return zero();
        const std::uint64_t n = d_->q - 1;
        return {d_->exp_table[(d_->log_table[a.code] * (k % n)) % n]};
    }

    // Multiplicative order of a nonzero element.
    std::uint64_t order(FieldElem a) const {
        if (a.code == 0) throw domain_error("order of zero");
        const std::uint64_t n = d_->q - 1;
        return n / std::gcd(n, std::uint64_t{d_->log_table[a.code]});
    }

    // Fixed generator of the multiplicative group.
    FieldElem generator() const { return {d_->q == 2 ? 1u : d_->exp_table[1]}; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->e == b.d_->e);
    }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

// Polynomial over F_q, coefficients low-degree-first, no trailing zeros.
class Poly {
public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<FieldElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Field& f, FieldElem c) { return Poly(f, {c}); }
    static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
    static Poly monomial(const Field& f, std::size_t deg, FieldElem c) {
        std::vector<FieldElem> cs(deg + 1, f.zero());
        cs[deg] = c;
        return Poly(f, std::move(cs));
    }
    static Poly from_ints(const Field& f, std::span<const std::int64_t> cs) {
        std::vector<FieldElem> out;
        out.reserve(cs.size());
        for (auto v : cs) out.push_back(f.from_int(v));
        return Poly(f, std::move(out));
    }

    const Field& field() const { return f_; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }
    FieldElem lead() const { return c_.empty() ? f_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == f_.one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Poly monic() const {
        if (c_.empty()) throw domain_error("monic() of the zero polynomial");
        return scale(f_.inv(lead()));
    }

    Poly scale(FieldElem s) const {
        std::vector<FieldElem> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(c_[i], s);
        return Poly(f_, std::move(out));
    }

    FieldElem eval(FieldElem x) const {
        FieldElem acc = f_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(f_);
        std::vector<FieldElem> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            out[i - 1] = f_.mul(c_[i], f_.from_int(static_cast<std::int64_t>(i)));
        return Poly(f_, std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const auto& f = a.f_;
        std::vector<FieldElem> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a[i], b[i]);
        return Poly(f, std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        const auto& f = a.f_;
        std::vector<FieldElem> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a[i], b[i]);
        return Poly(f, std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        const auto& f = a.f_;
        if (a.is_zero() || b.is_zero()) return Poly(f);
        std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1, f.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].code == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return Poly(f, std::move(out));
    }

    // f = quot * g + rem with deg rem < deg g.
    friend std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den) {
        if (den.is_zero()) throw domain_error("polynomial division by zero");
        const auto& f = num.f_;
        std::vector<FieldElem> rem = num.c_;
        const std::size_t dd = den.c_.size();
        if (rem.size() < dd) return {Poly(f), num};
        std::vector<FieldElem> quot(rem.size() - dd + 1, f.zero());
        const FieldElem lead_inv = f.inv(den.lead());
        for (std::size_t k = rem.size(); k-- >= dd;) {
            const FieldElem c = f.mul(rem[k], lead_inv);
            quot[k - dd + 1] = c;
            if (c.code != 0)
                for (std::size_t i = 0; i < dd; ++i)
                    rem[k - dd + 1 + i] = f.sub(rem[k - dd + 1 + i], f.mul(c, den.c_[i]));
            if (k == dd - 1) break;
        }
        rem.resize(dd - 1);
        return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

    Poly pow(std::uint64_t k) const {
        Poly result = constant(f_, f_.one());
        Poly base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

    // Lexicographic on the coefficient list, constant term first.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            if (f_.is_prime_field()) {
                s += std::to_string(c_[i].code);
            } else {
                s += "[";
                auto d = f_.coeffs(c_[i]);
                for (std::size_t j = 0; j < d.size(); ++j) s += (j ? "," : "") + std::to_string(d[j]);
                s += "]";
            }
        }
        return s + "]";
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().code == 0) c_.pop_back();
    }

    Field f_;
    std::vector<FieldElem> c_;
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return ((a * b) / poly_gcd(a, b)).monic();
}

// All monic polynomials of degree d, in lexicographic order (constant term first).
inline std::vector<Poly> monic_polys(const Field& f, std::size_t d) {
    const std::uint64_t q = f.q();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) {
        count *= q;
        if (count > max_field_order * 64) throw capacity_error("too many monic polynomials to enumerate");
    }
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        std::vector<FieldElem> cs(d + 1);
        std::uint64_t r = t;
        for (std::size_t i = d; i-- > 0;) {
            cs[i] = FieldElem{static_cast<std::uint32_t>(r % q)};
            r /= q;
        }
        cs[d] = f.one();
        out.emplace_back(f, std::move(cs));
    }
    return out;
}

// Monic irreducible factors with multiplicities, sorted lexicographically.
// Trial division against monic polynomials of ascending degree.
inline std::vector<std::pair<Poly, int>> poly_factor(const Poly& poly) {
    if (poly.is_zero()) throw domain_error("cannot factor the zero polynomial");
    const Field& f = poly.field();
    Poly g = poly.monic();
    std::vector<std::pair<Poly, int>> out;
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(std::max(g.degree(), 0)); ++d) {
        for (const Poly& h : monic_polys(f, d)) {
            if (2 * static_cast<int>(d) > g.degree()) break;
            int mult = 0;
            while (true) {
                auto [quo, rem] = divrem(g, h);
                if (!rem.is_zero()) break;
                g = std::move(quo);
                ++mult;
            }
            if (mult > 0) out.emplace_back(h, mult);
        }
    }
    if (g.degree() >= 1) out.emplace_back(g, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

inline bool is_irreducible(const Poly& poly) {
    if (poly.degree() < 1) return false;
    auto fs = poly_factor(poly);
    return fs.size() == 1 && fs.front().second == 1;
}

inline std::vector<Poly> irreducible_polys(const Field& f, std::size_t d) {
    std::vector<Poly> out;
    for (auto& h : monic_polys(f, d))
        if (is_irreducible(h)) out.push_back(std::move(h));
    return out;
}

namespace detail {

inline void check_exp_input(const Poly& f) {
    if (f.is_zero() || !f.is_monic()) throw domain_error("exp/subexp need a monic polynomial");
    if (f.degree() >= 1 && f[0].code == 0) throw domain_error("x divides the polynomial; x^e - 1 is never divisible by it");
}

// x * r mod f for deg r < deg f, f monic.
inline Poly mulx_mod(const Poly& r, const Poly& f) {
    const Field& fld = f.field();
    const auto d = static_cast<std::size_t>(f.degree());
    std::vector<FieldElem> cs(d + 1, fld.zero());
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) cs[i + 1] = r.coeffs()[i];
    const FieldElem top = cs[d];
    if (top.code != 0)
        for (std::size_t i = 0; i < d; ++i) cs[i] = fld.sub(cs[i], fld.mul(top, f[i]));
    cs.resize(d);
    return Poly(fld, std::move(cs));
}

}  // namespace detail

// Least e >= 1 with f | x^e - 1.
inline std::uint64_t poly_exp(const Poly& f, std::uint64_t cap = default_exp_cap) {
    detail::check_exp_input(f);
    if (f.degree() == 0) return 1;
    const Poly one = Poly::constant(f.field(), f.field().one());
    Poly r = Poly::x(f.field()) % f;
    for (std::uint64_t e = 1; e <= cap; ++e) {
        if (r == one) return e;
        r = detail::mulx_mod(r, f);
    }
    throw capacity_error("exp search exceeded cap of " + std::to_string(cap));
}

// Least e >= 1 with f | x^e - a for some nonzero scalar a.
inline std::uint64_t poly_subexp(const Poly& f, std::uint64_t cap = default_exp_cap) {
    detail::check_exp_input(f);
    if (f.degree() == 0) return 1;
    Poly r = Poly::x(f.field()) % f;
    for (std::uint64_t e = 1; e <= cap; ++e) {
        if (r.degree() == 0) return e;
        r = detail::mulx_mod(r, f);
    }
    throw capacity_error("subexp search exceeded cap of " + std::to_string(cap));
}

inline Field Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    if (e == 0) throw domain_error("extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_field_order) throw capacity_error("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds capacity");
    }
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->e = e;
    d->q = static_cast<std::uint32_t>(q);
    if (e > 1) {
        const Field base = make(p, 1);
        for (const Poly& cand : monic_polys(base, e)) {
            if (is_irreducible(cand)) {
                for (auto c : cand.coeffs()) d->modulus.push_back(c.code);
                break;
            }
        }
    }
    detail::build_log_tables(*d);
    return Field(std::move(d));
}

inline Field fq_make(std::uint32_t p, std::uint32_t e = 1) { return Field::make(p, e); }

}  // namespace metacomm

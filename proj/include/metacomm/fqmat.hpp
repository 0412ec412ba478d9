#pragma once

// Dense square matrices over F_q and the exact linear algebra the
// projective-action machinery needs.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"

namespace metacomm {

class MatFq {
public:
    MatFq(Field f, std::size_t m) : f_(std::move(f)), m_(m), a_(m * m, FieldElem{0}) {}
    MatFq(Field f, std::size_t m, std::vector<FieldElem> entries) : f_(std::move(f)), m_(m), a_(std::move(entries)) {
        if (a_.size() != m_ * m_) throw domain_error("matrix entry count does not match dimension");
    }

    static MatFq identity(const Field& f, std::size_t m) { return scalar(f, m, f.one()); }

    static MatFq scalar(const Field& f, std::size_t m, FieldElem c) {
        MatFq out(f, m);
        for (std::size_t i = 0; i < m; ++i) out.at(i, i) = c;
        return out;
    }

    // Rows of integers, each reduced into the prime subfield.
    static MatFq from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t m = rows.size();
        MatFq out(f, m);
        for (std::size_t i = 0; i < m; ++i) {
            if (rows[i].size() != m) throw domain_error("matrix must be square");
            for (std::size_t j = 0; j < m; ++j) out.at(i, j) = f.from_int(rows[i][j]);
        }
        return out;
    }

    const Field& field() const { return f_; }
    std::size_t dim() const { return m_; }
    const std::vector<FieldElem>& entries() const { return a_; }

    FieldElem operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
    FieldElem& at(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }

    friend MatFq operator*(const MatFq& x, const MatFq& y) {
        const auto& f = x.f_;
        const std::size_t m = x.m_;
        MatFq out(f, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                const FieldElem c = x(i, k);
                if (c.code == 0) continue;
                for (std::size_t j = 0; j < m; ++j) out.at(i, j) = f.add(out(i, j), f.mul(c, y(k, j)));
            }
        return out;
    }

    friend MatFq operator+(const MatFq& x, const MatFq& y) {
        MatFq out(x.f_, x.m_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.f_.add(x.a_[i], y.a_[i]);
        return out;
    }

    friend MatFq operator-(const MatFq& x, const MatFq& y) {
        MatFq out(x.f_, x.m_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.f_.sub(x.a_[i], y.a_[i]);
        return out;
    }

    MatFq scale(FieldElem c) const {
        MatFq out(f_, m_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.mul(a_[i], c);
        return out;
    }

    std::vector<FieldElem> apply(std::span<const FieldElem> v) const {
        std::vector<FieldElem> out(m_, f_.zero());
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) out[i] = f_.add(out[i], f_.mul((*this)(i, j), v[j]));
        return out;
    }

    MatFq pow(std::uint64_t k) const {
        MatFq result = identity(f_, m_);
        MatFq base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

    bool is_scalar() const {
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < m_; ++j) {
                if (i != j && (*this)(i, j).code != 0) return false;
                if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
            }
        return true;
    }

    friend bool operator==(const MatFq& x, const MatFq& y) { return x.f_ == y.f_ && x.m_ == y.m_ && x.a_ == y.a_; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < m_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < m_; ++j) {
                if (j) s += ",";
                if (f_.is_prime_field()) {
                    s += std::to_string((*this)(i, j).code);
                } else {
                    auto d = f_.coeffs((*this)(i, j));
                    s += "[";
                    for (std::size_t t = 0; t < d.size(); ++t) s += (t ? "," : "") + std::to_string(d[t]);
                    s += "]";
                }
            }
            s += "]";
        }
        return s + "]";
    }

private:
    Field f_;
    std::size_t m_;
    std::vector<FieldElem> a_;
};

// Point of P^{m-1}(F_q): nonzero vector whose first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<FieldElem> coords;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

inline ProjPoint canonicalize_point(const Field& f, std::span<const FieldElem> v) {
    auto it = std::find_if(v.begin(), v.end(), [](FieldElem x) { return x.code != 0; });
    if (it == v.end()) throw domain_error("the zero vector is not a projective point");
    const FieldElem s = f.inv(*it);
    ProjPoint out;
    out.coords.reserve(v.size());
    for (auto x : v) out.coords.push_back(f.mul(x, s));
    return out;
}

inline std::string point_to_string(const Field& f, const ProjPoint& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i) s += ":";
        if (f.is_prime_field()) {
            s += std::to_string(v.coords[i].code);
        } else {
            auto d = f.coeffs(v.coords[i]);
            s += "[";
            for (std::size_t t = 0; t < d.size(); ++t) s += (t ? "," : "") + std::to_string(d[t]);
            s += "]";
        }
    }
    return s + ")";
}

namespace detail {

// In-place RREF of a rows x cols row-major array; returns pivot columns.
inline std::vector<std::size_t> rref_inplace(const Field& f, std::size_t rows, std::size_t cols, std::vector<FieldElem>& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c].code == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const FieldElem inv = f.inv(a[r * cols + c]);
        for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const FieldElem t = a[i * cols + c];
            if (t.code == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(t, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the right kernel of a rows x cols matrix.
inline std::vector<std::vector<FieldElem>> kernel_rect(const Field& f, std::size_t rows, std::size_t cols, std::vector<FieldElem> a) {
    auto pivots = rref_inplace(f, rows, cols, a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(cols, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a[r * cols + free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

struct RrefResult {
    MatFq rref;
    std::size_t rank;
};

inline RrefResult rref_rank(const MatFq& a) {
    auto data = a.entries();
    auto pivots = detail::rref_inplace(a.field(), a.dim(), a.dim(), data);
    return {MatFq(a.field(), a.dim(), std::move(data)), pivots.size()};
}

inline std::size_t rank(const MatFq& a) { return rref_rank(a).rank; }

inline std::vector<std::vector<FieldElem>> kernel_basis(const MatFq& a) {
    return detail::kernel_rect(a.field(), a.dim(), a.dim(), a.entries());
}

// The kernel line of a rank m-1 matrix.
inline ProjPoint kernel_point(const MatFq& a) {
    auto basis = kernel_basis(a);
    if (basis.size() != 1)
        throw domain_error("kernel_point needs rank " + std::to_string(a.dim() - 1) + ", got rank " +
                           std::to_string(a.dim() - basis.size()));
    return canonicalize_point(a.field(), basis.front());
}

inline FieldElem det(const MatFq& a) {
    const Field& f = a.field();
    const std::size_t m = a.dim();
    auto d = a.entries();
    FieldElem acc = f.one();
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        while (piv < m && d[piv * m + c].code == 0) ++piv;
        if (piv == m) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < m; ++j) std::swap(d[piv * m + j], d[c * m + j]);
            acc = f.neg(acc);
        }
        acc = f.mul(acc, d[c * m + c]);
        const FieldElem inv = f.inv(d[c * m + c]);
        for (std::size_t i = c + 1; i < m; ++i) {
            const FieldElem t = f.mul(d[i * m + c], inv);
            if (t.code == 0) continue;
            for (std::size_t j = c; j < m; ++j) d[i * m + j] = f.sub(d[i * m + j], f.mul(t, d[c * m + j]));
        }
    }
    return acc;
}

inline bool is_invertible(const MatFq& a) { return det(a).code != 0; }

inline MatFq inverse(const MatFq& a) {
    const Field& f = a.field();
    const std::size_t m = a.dim();
    const std::size_t w = 2 * m;
    std::vector<FieldElem> aug(m * w, f.zero());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i * w + j] = a(i, j);
        aug[i * w + m + i] = f.one();
    }
    auto pivots = detail::rref_inplace(f, m, w, aug);
    if (pivots.size() < m || pivots[m - 1] != m - 1) throw domain_error("matrix is singular");
    MatFq out(f, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = aug[i * w + m + j];
    return out;
}

// p(A) by Horner's rule.
inline MatFq eval_at(const Poly& p, const MatFq& a) {
    const Field& f = a.field();
    MatFq acc(f, a.dim());
    const auto& cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * a + MatFq::scalar(f, a.dim(), cs[i]);
    return acc;
}

// det(xI - A), via reduction to upper Hessenberg form by similarity.
inline Poly charpoly(const MatFq& a) {
    const Field& f = a.field();
    const std::size_t n = a.dim();
    std::vector<FieldElem> h = a.entries();
    auto H = [&](std::size_t i, std::size_t j) -> FieldElem& { return h[i * n + j]; };
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && H(piv, j).code == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
        }
        const FieldElem inv = f.inv(H(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            const FieldElem t = f.mul(H(i, j), inv);
            if (t.code == 0) continue;
            for (std::size_t c = 0; c < n; ++c) H(i, c) = f.sub(H(i, c), f.mul(t, H(j + 1, c)));
            for (std::size_t r = 0; r < n; ++r) H(r, j + 1) = f.add(H(r, j + 1), f.mul(t, H(r, i)));
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i=1}^{k-1} h_{k-i,k} (prod_{l=k-i+1}^{k} h_{l,l-1}) p_{k-i-1}, 1-indexed.
    auto h1 = [&](std::size_t i, std::size_t j) { return H(i - 1, j - 1); };
    std::vector<Poly> p;
    p.push_back(Poly::constant(f, f.one()));
    const Poly x = Poly::x(f);
    for (std::size_t k = 1; k <= n; ++k) {
        Poly pk = (x - Poly::constant(f, h1(k, k))) * p[k - 1];
        FieldElem prod = f.one();
        for (std::size_t i = 1; i < k; ++i) {
            prod = f.mul(prod, h1(k - i + 1, k - i));
            const FieldElem coef = f.mul(h1(k - i, k), prod);
            if (coef.code != 0) pk = pk - p[k - i - 1].scale(coef);
        }
        p.push_back(std::move(pk));
    }
    return p[n];
}

// Least k such that I, A, ..., A^k are dependent gives the monic minimal polynomial.
inline Poly minpoly(const MatFq& a) {
    const Field& f = a.field();
    const std::size_t m = a.dim();
    const std::size_t len = m * m;
    std::vector<MatFq> powers{MatFq::identity(f, m)};
    for (std::size_t k = 1; k <= m; ++k) {
        powers.push_back(powers.back() * a);
        const std::size_t cols = k + 1;
        std::vector<FieldElem> sys(len * cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < len; ++r) sys[r * cols + c] = powers[c].entries()[r];
        auto ker = detail::kernel_rect(f, len, cols, std::move(sys));
        if (!ker.empty()) return Poly(f, ker.front()).monic();
    }
    throw consistency_error("minimal polynomial degree exceeds dimension");
}

struct ElementaryDivisor {
    Poly phi;
    int k;
};

// Prime-power elementary divisors phi^k, sorted by (phi, k). Block counts come
// from the kernel dimensions of phi(A)^j.
inline std::vector<ElementaryDivisor> elementary_divisors(const MatFq& a) {
    const std::size_t m = a.dim();
    std::vector<ElementaryDivisor> out;
    for (const auto& [phi, mult] : poly_factor(charpoly(a))) {
        const auto d = static_cast<std::size_t>(phi.degree());
        const std::size_t target = d * static_cast<std::size_t>(mult);
        const MatFq base = eval_at(phi, a);
        std::vector<std::size_t> r{0};  // r[j] = dim ker phi(A)^j / d
        MatFq power = MatFq::identity(a.field(), m);
        while (r.back() * d < target) {
            power = power * base;
            r.push_back((m - rank(power)) / d);
            if (r.size() > m + 1) throw consistency_error("generalized eigenspace did not stabilise");
        }
        r.push_back(r.back());
        // blocks of size >= j is r[j] - r[j-1]
        for (std::size_t k = 1; k + 1 < r.size(); ++k) {
            const std::size_t at_least_k = r[k] - r[k - 1];
            const std::size_t at_least_k1 = r[k + 1] - r[k];
            for (std::size_t t = 0; t < at_least_k - at_least_k1; ++t) out.push_back({phi, static_cast<int>(k)});
        }
    }
    std::sort(out.begin(), out.end(), [](const ElementaryDivisor& x, const ElementaryDivisor& y) {
        if (x.phi != y.phi) return x.phi < y.phi;
        return x.k < y.k;
    });
    return out;
}

inline MatFq companion(const Poly& phi) {
    if (!phi.is_monic()) throw domain_error("companion matrix needs a monic polynomial");
    if (phi.degree() < 1) throw domain_error("companion matrix needs degree >= 1");
    const Field& f = phi.field();
    const auto d = static_cast<std::size_t>(phi.degree());
    MatFq c(f, d);
    for (std::size_t i = 1; i < d; ++i) c.at(i, i - 1) = f.one();
    for (std::size_t i = 0; i < d; ++i) c.at(i, d - 1) = f.neg(phi[i]);
    return c;
}

// Block lower-bidiagonal: C(phi) on the diagonal, E_{1d} below it.
inline MatFq hypercompanion(const Poly& phi, int k) {
    if (k < 1) throw domain_error("hypercompanion exponent must be positive");
    if (!is_irreducible(phi)) throw domain_error("hypercompanion needs an irreducible polynomial");
    const Field& f = phi.field();
    const MatFq c = companion(phi);
    const std::size_t d = c.dim();
    const std::size_t n = d * static_cast<std::size_t>(k);
    MatFq h(f, n);
    for (std::size_t b = 0; b < static_cast<std::size_t>(k); ++b) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) h.at(b * d + i, b * d + j) = c(i, j);
        if (b > 0) h.at(b * d, (b - 1) * d + d - 1) = f.one();
    }
    return h;
}

inline MatFq block_diagonal(const Field& f, const std::vector<MatFq>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    MatFq out(f, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) out.at(off + i, off + j) = b(i, j);
        off += b.dim();
    }
    return out;
}

// Block-diagonal assembly of hypercompanion blocks over the elementary divisors.
inline MatFq hypercompanion_form(const MatFq& a) {
    std::vector<MatFq> blocks;
    for (const auto& ed : elementary_divisors(a)) blocks.push_back(hypercompanion(ed.phi, ed.k));
    return block_diagonal(a.field(), blocks);
}

}  // namespace metacomm

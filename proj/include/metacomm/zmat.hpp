#pragma once

// Integer matrices and the left-ideal arithmetic of M_n(Z): Hermite normal
// form, coprime splitting, prime chains, and metacommutation past a prime.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"
#include "fqmat.hpp"
#include "projperm.hpp"

namespace metacomm {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix. Square for ring elements; stacked
// generator lists are rows x n.
class MatZ {
public:
    MatZ() = default;
    MatZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static MatZ identity(std::size_t n) { return scalar(n, 1); }

    static MatZ scalar(std::size_t n, const BigInt& c) {
        MatZ out(n, n);
        for (std::size_t i = 0; i < n; ++i) out.at(i, i) = c;
        return out;
    }

    static MatZ from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.front().size() : 0;
        MatZ out(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw domain_error("ragged integer matrix");
            for (std::size_t j = 0; j < c; ++j) out.at(i, j) = rows[i][j];
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_; }
    bool is_square() const { return rows_ == cols_; }

    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    friend MatZ operator*(const MatZ& x, const MatZ& y) {
        if (x.cols_ != y.rows_) throw domain_error("matrix product shape mismatch");
        MatZ out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k) == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) out.at(i, j) += x(i, k) * y(k, j);
            }
        return out;
    }

    friend MatZ operator+(const MatZ& x, const MatZ& y) {
        MatZ out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
        return out;
    }

    MatZ scale(const BigInt& c) const {
        MatZ out = *this;
        for (auto& v : out.a_) v *= c;
        return out;
    }

    friend bool operator==(const MatZ&, const MatZ&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
            s += "]";
        }
        return s + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> a_;
};

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline void require_square(const MatZ& m) {
    if (!m.is_square()) throw domain_error("square matrix required");
}

}  // namespace detail

// Fraction-free (Bareiss) determinant.
inline BigInt det(const MatZ& m) {
    detail::require_square(m);
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    MatZ a = m;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a.at(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline MatZ adjugate(const MatZ& m) {
    detail::require_square(m);
    const std::size_t n = m.dim();
    MatZ adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatZ minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            const BigInt cof = det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : BigInt(-cof);
        }
    return adj;
}

// x * y^{-1} when it is integral; nullopt otherwise.
inline std::optional<MatZ> right_divide(const MatZ& x, const MatZ& y) {
    const BigInt d = det(y);
    if (d == 0) throw domain_error("right division by a singular matrix");
    MatZ num = x * adjugate(y);
    MatZ out(num.rows(), num.cols());
    for (std::size_t i = 0; i < num.rows(); ++i)
        for (std::size_t j = 0; j < num.cols(); ++j) {
            if (num(i, j) % d != 0) return std::nullopt;
            out.at(i, j) = num(i, j) / d;
        }
    return out;
}

inline BigInt content(const MatZ& m) {
    BigInt g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g = boost::multiprecision::gcd(g, m(i, j));
    return abs(g);
}

inline bool is_primitive(const MatZ& m) { return content(m) == 1; }

// Row-style Hermite normal form of a full-column-rank matrix (rows >= cols):
// upper triangular, positive pivots, entries above each pivot in [0, pivot).
// Returns the top cols x cols block.
inline MatZ hnf(const MatZ& m) {
    const std::size_t rows = m.rows(), n = m.cols();
    if (rows < n) throw domain_error("HNF needs at least as many rows as columns");
    MatZ a = m;
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(x, j), a.at(y, j));
    };
    auto axpy = [&](std::size_t dst, const BigInt& t, std::size_t src) {
        for (std::size_t j = 0; j < n; ++j) a.at(dst, j) -= t * a(src, j);
    };
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t r = c;
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c)))) best = i;
            if (best == rows) throw domain_error("matrix is singular (rank-deficient generators)");
            if (best != r) swap_rows(best, r);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0) continue;
                axpy(i, detail::floor_div(a(i, c), a(r, c)), r);
                if (a(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (a(r, c) < 0)
            for (std::size_t j = 0; j < n; ++j) a.at(r, j) = -a(r, j);
        for (std::size_t i = 0; i < r; ++i) axpy(i, detail::floor_div(a(i, c), a(r, c)), r);
    }
    MatZ out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = a(i, j);
    return out;
}

// G in HNF with M_n(Z) G = sum of M_n(Z) g over the generators.
inline MatZ left_ideal_generator(const std::vector<MatZ>& gens) {
    if (gens.empty()) throw domain_error("no generators");
    const std::size_t n = gens.front().cols();
    std::size_t total = 0;
    for (const auto& g : gens) {
        if (g.cols() != n) throw domain_error("generators have different widths");
        total += g.rows();
    }
    MatZ stacked(total, n);
    std::size_t off = 0;
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) stacked.at(off + i, j) = g(i, j);
        off += g.rows();
    }
    return hnf(stacked);
}

struct SplitZ {
    MatZ left;   // omega_1
    MatZ right;  // omega_2, HNF with det a2
};

// alpha = omega_1 omega_2 with det(omega_2) = a2, given gcd(a2, det/a2) = 1.
inline SplitZ split_factor(const MatZ& alpha, const BigInt& a2) {
    detail::require_square(alpha);
    const BigInt d = det(alpha);
    if (d == 0) throw domain_error("alpha is singular");
    if (a2 <= 0) throw domain_error("a2 must be positive");
    if (d % a2 != 0) throw domain_error("a2 does not divide det(alpha)");
    if (boost::multiprecision::gcd(a2, BigInt(d / a2)) != 1) throw domain_error("a2 and det(alpha)/a2 are not coprime");
    MatZ right = left_ideal_generator({alpha, MatZ::scalar(alpha.dim(), a2)});
    if (det(right) != a2) throw consistency_error("right factor has det " + det(right).str() + ", expected " + a2.str());
    auto left = right_divide(alpha, right);
    if (!left) throw consistency_error("alpha is not right-divisible by its ideal generator");
    return {std::move(*left), std::move(right)};
}

// Factors of prime determinant, listed left to right (alpha = F_0 F_1 ... F_{r-1}).
// primes[0] is peeled first and is the determinant of the rightmost factor;
// the leftmost factor absorbs the remaining unit so the product is exact.
inline std::vector<MatZ> prime_chain_factor(const MatZ& alpha, const std::vector<std::uint64_t>& primes) {
    detail::require_square(alpha);
    if (primes.empty()) throw domain_error("empty prime list");
    if (!is_primitive(alpha)) throw domain_error("alpha is not primitive");
    std::set<std::uint64_t> seen;
    BigInt product = 1;
    for (auto p : primes) {
        if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
        if (!seen.insert(p).second) throw domain_error("repeated prime " + std::to_string(p) + " in chain");
        product *= p;
    }
    if (abs(det(alpha)) != product) throw domain_error("|det(alpha)| = " + BigInt(abs(det(alpha))).str() + " does not match the prime list");
    std::vector<MatZ> peeled;
    MatZ rest = alpha;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        auto s = split_factor(rest, BigInt(primes[i]));
        peeled.push_back(std::move(s.right));
        rest = std::move(s.left);
    }
    peeled.push_back(std::move(rest));
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

struct MetacommuteZ {
    MatZ omega_prime;
    MatZ p_prime;
};

// P omega = omega' P' with P' = HNF(P omega + O p).
inline MetacommuteZ metacommute_z(const MatZ& p_mat, const MatZ& omega, std::uint64_t p) {
    detail::require_square(p_mat);
    detail::require_square(omega);
    if (p_mat.dim() != omega.dim()) throw domain_error("P and omega have different sizes");
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    if (abs(det(p_mat)) != p) throw domain_error("det(P) must be +-" + std::to_string(p));
    const BigInt dw = det(omega);
    if (boost::multiprecision::gcd(dw, BigInt(p)) != 1) throw domain_error("det(omega) is not coprime to p");
    const MatZ prod = p_mat * omega;
    MatZ p_prime = left_ideal_generator({prod, MatZ::scalar(prod.dim(), p)});
    if (det(p_prime) != p) throw consistency_error("metacommuted prime has det " + det(p_prime).str());
    auto omega_prime = right_divide(prod, p_prime);
    if (!omega_prime) throw consistency_error("P omega is not right-divisible by P'");
    if (abs(det(*omega_prime)) != abs(dw)) throw consistency_error("det(omega') differs from det(omega)");
    return {std::move(*omega_prime), std::move(p_prime)};
}

inline MatFq reduce_mod(const MatZ& m, const Field& fp) {
    detail::require_square(m);
    if (!fp.is_prime_field()) throw domain_error("reduction target must be a prime field");
    const BigInt p = fp.p();
    MatFq out(fp, m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            BigInt r = m(i, j) % p;
            if (r < 0) r += p;
            out.at(i, j) = FieldElem{r.convert_to<std::uint32_t>()};
        }
    return out;
}

struct DiagramZ {
    MetacommuteZ mc;
    ProjPoint kernel_before;  // ker rho(P)
    ProjPoint kernel_after;   // ker rho(P')
    ProjPoint predicted;      // tau_{rho(omega)}(kernel_before)
    bool commutes = false;
};

inline DiagramZ diagram_z(const MatZ& p_mat, const MatZ& omega, std::uint64_t p, Mutation mut = {}) {
    const Field fp = Field::make(static_cast<std::uint32_t>(p));
    const MatFq rho_p = reduce_mod(p_mat, fp);
    if (rank(rho_p) + 1 != p_mat.dim()) throw domain_error("rho_p(P) does not have rank n-1");
    DiagramZ out{metacommute_z(p_mat, omega, p), {}, {}, {}, false};
    out.kernel_before = kernel_point(rho_p);
    out.kernel_after = kernel_point(reduce_mod(out.mc.p_prime, fp));
    const MatFq q = reduce_mod(omega, fp);
    out.predicted = mut.active ? canonicalize_point(fp, q.apply(out.kernel_before.coords)) : tau_apply(q, out.kernel_before);
    out.commutes = out.predicted == out.kernel_after;
    return out;
}

inline bool diagram_check_z(const MatZ& p_mat, const MatZ& omega, std::uint64_t p) { return diagram_z(p_mat, omega, p).commutes; }

// All HNF matrices of determinant p: one pivot p at column i, free entries
// in [0, p) above it, identity elsewhere. There are (p^n - 1)/(p - 1).
inline std::vector<MatZ> prime_ideals_z(std::size_t n, std::uint64_t p) {
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    std::vector<MatZ> out;
    for (std::size_t col = 0; col < n; ++col) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(col));
        for (std::uint64_t t = 0; t < count; ++t) {
            MatZ h = MatZ::identity(n);
            h.at(col, col) = p;
            std::uint64_t r = t;
            for (std::size_t row = col; row-- > 0;) {
                h.at(row, col) = r % p;
                r /= p;
            }
            out.push_back(std::move(h));
        }
    }
    return out;
}

// sigma_omega on prime_ideals_z(n, p): index i -> index of HNF(P_i omega + O p).
inline Perm sigma_permutation_z(const MatZ& omega, std::size_t n, std::uint64_t p) {
    const auto ideals = prime_ideals_z(n, p);
    Perm out;
    out.images.resize(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const MatZ img = metacommute_z(ideals[i], omega, p).p_prime;
        auto it = std::find(ideals.begin(), ideals.end(), img);
        if (it == ideals.end()) throw consistency_error("metacommuted ideal " + img.to_string() + " is not a listed prime ideal");
        out.images[i] = static_cast<std::size_t>(it - ideals.begin());
    }
    return out;
}

}  // namespace metacomm

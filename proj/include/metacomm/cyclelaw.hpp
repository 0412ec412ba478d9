#pragma once

// Closed-form cycle structure of tau_Q: fixed points, single hypercompanion
// blocks, GL_2, and diagonalizable matrices, with a brute-force fallback.

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"
#include "fqmat.hpp"
#include "projperm.hpp"

namespace metacomm {

enum class CycleSource { formula_single_block, formula_gl2, formula_diagonalizable, brute_force };

inline std::string to_string(CycleSource s) {
    switch (s) {
        case CycleSource::formula_single_block: return "formula-single-block";
        case CycleSource::formula_gl2: return "formula-gl2";
        case CycleSource::formula_diagonalizable: return "formula-diagonalizable";
        case CycleSource::brute_force: return "brute-force";
    }
    return "unknown";
}

struct CycleReport {
    CycleSource source = CycleSource::brute_force;
    CycleType type;
    std::optional<std::uint64_t> ell;

    std::size_t fixed_points() const { return type.fixed; }
};

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 62) / b) throw capacity_error("integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

inline void require_invertible(const MatFq& q) {
    if (!is_invertible(q)) throw domain_error("matrix is singular");
}

inline std::uint64_t gl_order_bound(std::uint64_t q, std::size_t m) {
    std::uint64_t n = 1;
    const std::uint64_t qm = checked_pow(q, m);
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::uint64_t factor = qm - qi;
        if (n > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
        n *= factor;
        qi *= q;
    }
    return n;
}

}  // namespace detail

struct EigenContribution {
    FieldElem lambda;
    std::size_t geometric;  // dim ker(Q - lambda I)
    std::size_t algebraic;  // multiplicity of (x - lambda) in charpoly
    std::uint64_t points;   // (q^geometric - 1) / (q - 1)
};

// One entry per eigenvalue lying in F_q.
inline std::vector<EigenContribution> fixed_point_breakdown(const MatFq& q, Mutation mut = {}) {
    detail::require_invertible(q);
    const std::size_t m = q.dim();
    if (m < 2) throw domain_error("fixed-point formula needs m >= 2");
    const Field& f = q.field();
    const Poly cp = charpoly(q);
    std::vector<EigenContribution> out;
    for (std::uint32_t code = 1; code < f.q(); ++code) {
        const FieldElem lambda{code};
        if (cp.eval(lambda).code != 0) continue;
        const std::size_t geo = m - rank(q - MatFq::scalar(f, m, lambda));
        const Poly lin(f, {f.neg(lambda), f.one()});
        std::size_t alg = 0;
        for (Poly rest = cp; (rest % lin).is_zero(); rest = rest / lin) ++alg;
        const std::uint64_t qa = detail::checked_pow(f.q(), geo);
        const std::uint64_t pts = mut.active ? (qa + 1) / (f.q() - 1) : (qa - 1) / (f.q() - 1);
        out.push_back({lambda, geo, alg, pts});
    }
    return out;
}

// Sum over eigenvalues in F_q of #P^{a-1}(F_q), a the eigenspace dimension.
inline std::uint64_t fixed_point_count(const MatFq& q, Mutation mut = {}) {
    std::uint64_t total = 0;
    for (const auto& c : fixed_point_breakdown(q, mut)) total += c.points;
    return total;
}

// Cycle counts of tau on P^{dk-1} for the hypercompanion matrix H(phi^k).
inline CycleType single_block_cycle_counts(const Poly& phi, int k, Mutation mut = {}) {
    if (k < 1) throw domain_error("block exponent must be positive");
    if (!is_irreducible(phi) || !phi.is_monic()) throw domain_error("single-block formula needs a monic irreducible polynomial");
    const std::uint64_t q = phi.field().q();
    const auto d = static_cast<std::uint64_t>(phi.degree());
    std::map<std::size_t, std::size_t> cycles;
    for (int j = 1; j <= k; ++j) {
        const std::uint64_t fj = poly_subexp(phi.pow(static_cast<std::uint64_t>(j)));
        const std::uint64_t hi = detail::checked_pow(q, j * d);
        const std::uint64_t lo = detail::checked_pow(q, (j - 1) * d);
        const std::uint64_t num = mut.active ? hi + lo : hi - lo;
        const std::uint64_t den = (q - 1) * fj;
        if (num % den != 0)
            throw consistency_error("non-integral cycle count for j=" + std::to_string(j) + ": " + std::to_string(num) + "/" +
                                    std::to_string(den));
        cycles[fj] += num / den;
    }
    return make_cycle_type(std::move(cycles));
}

// subexp(phi) * p^t with t the least r >= 0 such that p^r >= j.
inline std::uint64_t fj_fast(const Poly& phi, std::uint64_t j) {
    if (j < 1) throw domain_error("j must be positive");
    const std::uint64_t p = phi.field().p();
    std::uint64_t pt = 1;
    while (pt < j) pt *= p;
    return poly_subexp(phi) * pt;
}

// Least l >= 1 with Q^l scalar.
inline std::uint64_t pgl_order(const MatFq& q) {
    detail::require_invertible(q);
    const std::uint64_t bound = detail::gl_order_bound(q.field().q(), q.dim());
    MatFq power = q;
    for (std::uint64_t l = 1; l <= bound; ++l) {
        if (power.is_scalar()) return l;
        power = power * q;
    }
    throw consistency_error("no scalar power found within |GL_m(F_q)|");
}

inline CycleReport gl2_cycle_structure(const MatFq& q, Mutation mut = {}) {
    if (q.dim() != 2) throw domain_error("GL_2 formula needs a 2x2 matrix");
    detail::require_invertible(q);
    const std::uint64_t ell = pgl_order(q);
    const std::uint64_t fixed = fixed_point_count(q);
    const std::uint64_t n = q.field().q() + 1;
    if (fixed > n) throw consistency_error("more fixed points than points on the line");
    const std::uint64_t rest = mut.active ? n + fixed : n - fixed;
    std::map<std::size_t, std::size_t> cycles;
    if (fixed > 0) cycles[1] += fixed;
    if (rest > 0) {
        if (ell == 1 || rest % ell != 0)
            throw consistency_error("GL_2 split: " + std::to_string(rest) + " moved points do not form " + std::to_string(ell) + "-cycles");
        cycles[ell] += rest / ell;
    }
    return {CycleSource::formula_gl2, make_cycle_type(std::move(cycles)), ell};
}

// Values of an F_q element inside a larger field F_{p^{es}}, indexed by code.
inline std::vector<FieldElem> embed_field(const Field& small, const Field& big) {
    if (small.p() != big.p() || big.e() % small.e() != 0) throw domain_error("no embedding between these fields");
    std::vector<FieldElem> image(small.q());
    if (small.is_prime_field()) {
        for (std::uint32_t c = 0; c < small.q(); ++c) image[c] = big.from_int(c);
        return image;
    }
    // A root of small's defining polynomial in big plays the role of x.
    const auto& mod = small.modulus();
    std::optional<FieldElem> root;
    for (std::uint32_t c = 0; c < big.q() && !root; ++c) {
        FieldElem acc = big.zero();
        for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, FieldElem{c}), big.from_int(mod[i]));
        if (acc.code == 0) root = FieldElem{c};
    }
    if (!root) throw consistency_error("defining polynomial has no root in the extension");
    for (std::uint32_t c = 0; c < small.q(); ++c) {
        auto digits = small.coeffs(FieldElem{c});
        FieldElem acc = big.zero();
        for (std::size_t i = digits.size(); i-- > 0;) acc = big.add(big.mul(acc, *root), big.from_int(digits[i]));
        image[c] = acc;
    }
    return image;
}

inline bool is_squarefree(const Poly& f) { return poly_gcd(f, f.derivative()).degree() == 0; }

// Diagonalizable Q whose pairwise eigenvalue ratios share one multiplicative
// order l: only fixed points and l-cycles. Absent when the ratio orders differ.
inline std::optional<CycleReport> uniform_cycle_check(const MatFq& q) {
    detail::require_invertible(q);
    const Field& f = q.field();
    const Poly mp = minpoly(q);
    if (!is_squarefree(mp)) throw domain_error("matrix is not diagonalizable over the algebraic closure");

    std::uint64_t s = 1;
    for (const auto& [phi, mult] : poly_factor(charpoly(q))) s = std::lcm(s, static_cast<std::uint64_t>(phi.degree()));
    const Field big = Field::make(f.p(), static_cast<std::uint32_t>(f.e() * s));
    const auto image = embed_field(f, big);

    std::vector<FieldElem> big_coeffs;
    for (auto c : mp.coeffs()) big_coeffs.push_back(image[c.code]);
    const Poly mp_big(big, big_coeffs);
    std::vector<FieldElem> eigen;
    for (std::uint32_t c = 1; c < big.q(); ++c)
        if (mp_big.eval(FieldElem{c}).code == 0) eigen.push_back(FieldElem{c});
    if (eigen.size() != static_cast<std::size_t>(mp.degree()))
        throw consistency_error("minimal polynomial does not split into distinct roots in F_" + std::to_string(big.q()));

    std::optional<std::uint64_t> common;
    for (std::size_t i = 0; i < eigen.size(); ++i)
        for (std::size_t j = 0; j < eigen.size(); ++j) {
            if (i == j) continue;
            const std::uint64_t ord = big.order(big.div(eigen[i], eigen[j]));
            if (common && *common != ord) return std::nullopt;
            common = ord;
        }
    const std::uint64_t ratio_order = common.value_or(1);
    const std::uint64_t ell = pgl_order(q);
    if (ell != ratio_order)
        throw consistency_error("eigenvalue ratio order " + std::to_string(ratio_order) + " differs from scalar order " + std::to_string(ell));

    const std::uint64_t n = projective_size(f.q(), static_cast<unsigned>(q.dim()));
    const std::uint64_t fixed = fixed_point_count(q);
    std::map<std::size_t, std::size_t> cycles;
    if (fixed > 0) cycles[1] = fixed;
    if (n > fixed) {
        if (ell == 1 || (n - fixed) % ell != 0) throw consistency_error("moved points do not split into " + std::to_string(ell) + "-cycles");
        cycles[ell] += (n - fixed) / ell;
    }
    return CycleReport{CycleSource::formula_diagonalizable, make_cycle_type(std::move(cycles)), ell};
}

inline CycleReport brute_force_cycle_structure(const MatFq& q) {
    return {CycleSource::brute_force, cycle_type(tau_permutation(q)), std::nullopt};
}

// Picks the first applicable closed form, else enumerates. With cross_check,
// any closed-form answer is compared against enumeration and a mismatch throws.
inline CycleReport cycle_structure(const MatFq& q, bool cross_check = false) {
    detail::require_invertible(q);
    std::optional<CycleReport> report;
    const auto eds = elementary_divisors(q);
    if (eds.size() == 1) {
        report = CycleReport{CycleSource::formula_single_block, single_block_cycle_counts(eds.front().phi, eds.front().k), std::nullopt};
    } else if (q.dim() == 2) {
        report = gl2_cycle_structure(q);
    } else if (is_squarefree(minpoly(q))) {
        report = uniform_cycle_check(q);
    }
    if (!report) return brute_force_cycle_structure(q);
    if (cross_check) {
        const CycleType brute = cycle_type(tau_permutation(q));
        if (!(brute == report->type))
            throw consistency_error(to_string(report->source) + " disagrees with enumeration for Q=" + q.to_string());
    }
    return *report;
}

}  // namespace metacomm

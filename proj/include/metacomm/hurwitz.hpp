#pragma once

// The Hurwitz order Z + Zi + Zj + Z w0, w0 = (-1+i+j+k)/2, in the rational
// quaternions ramified at 2 and infinity: arithmetic, right-Euclidean gcds,
// prime factorization, metacommutation, and the splitting map modulo odd p.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fq.hpp"
#include "fqmat.hpp"
#include "projperm.hpp"

namespace metacomm {

// a + b i + c j + d w0.
struct HQuat {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    static HQuat integer(std::int64_t n) { return {n, 0, 0, 0}; }

    // 2x in the {1, i, j, k} basis.
    std::array<std::int64_t, 4> doubled() const { return {2 * a - d, 2 * b + d, 2 * c + d, d}; }

    // Inverse of doubled(); the four entries must share a parity.
    static HQuat from_doubled(const std::array<std::int64_t, 4>& w) {
        const auto par = [](std::int64_t v) { return ((v % 2) + 2) % 2; };
        if (par(w[0]) != par(w[1]) || par(w[1]) != par(w[2]) || par(w[2]) != par(w[3]))
            throw domain_error("half-integer combination is not a Hurwitz quaternion");
        const std::int64_t d = w[3];
        return {(w[0] + d) / 2, (w[1] - d) / 2, (w[2] - d) / 2, d};
    }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend auto operator<=>(const HQuat&, const HQuat&) = default;

    std::string to_string() const {
        return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + "]";
    }
};

namespace detail {

inline std::array<std::int64_t, 4> hamilton(const std::array<std::int64_t, 4>& x, const std::array<std::int64_t, 4>& y) {
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

inline HQuat operator*(const HQuat& x, const HQuat& y) {
    auto prod = detail::hamilton(x.doubled(), y.doubled());  // 4xy
    for (auto& v : prod) v /= 2;
    return HQuat::from_doubled(prod);
}

inline HQuat operator+(const HQuat& x, const HQuat& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
inline HQuat operator-(const HQuat& x, const HQuat& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
inline HQuat operator-(const HQuat& x) { return {-x.a, -x.b, -x.c, -x.d}; }

inline HQuat conj(const HQuat& x) {
    auto w = x.doubled();
    return HQuat::from_doubled({w[0], -w[1], -w[2], -w[3]});
}

inline std::int64_t nrd(const HQuat& x) {
    auto w = x.doubled();
    return (w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3]) / 4;
}

inline std::int64_t trd(const HQuat& x) { return x.doubled()[0]; }

// Exact quotient x / n for a rational integer n dividing x.
inline std::optional<HQuat> divide_exact(const HQuat& x, std::int64_t n) {
    if (x.a % n || x.b % n || x.c % n || x.d % n) return std::nullopt;
    return HQuat{x.a / n, x.b / n, x.c / n, x.d / n};
}

inline bool is_primitive(const HQuat& x) {
    if (x.is_zero()) throw domain_error("primitivity of zero");
    return std::gcd(std::gcd(x.a, x.b), std::gcd(x.c, x.d)) == 1;
}

// The 24 elements of reduced norm 1.
inline const std::vector<HQuat>& hurwitz_units() {
    static const std::vector<HQuat> units = [] {
        std::vector<HQuat> out;
        for (std::int64_t w0 = -2; w0 <= 2; ++w0)
            for (std::int64_t w1 = -2; w1 <= 2; ++w1)
                for (std::int64_t w2 = -2; w2 <= 2; ++w2)
                    for (std::int64_t w3 = -2; w3 <= 2; ++w3) {
                        if (w0 * w0 + w1 * w1 + w2 * w2 + w3 * w3 != 4) continue;
                        const std::array<std::int64_t, 4> w{w0, w1, w2, w3};
                        const bool same = std::all_of(w.begin(), w.end(), [&](std::int64_t v) { return (v & 1) == (w0 & 1); });
                        if (same) out.push_back(HQuat::from_doubled(w));
                    }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return units;
}

// Lexicographic minimum of the 24 left associates.
inline HQuat canonical_class(const HQuat& x) {
    if (x.is_zero()) throw domain_error("canonical class of zero");
    HQuat best = x;
    for (const auto& u : hurwitz_units()) best = std::min(best, u * x);
    return best;
}

// Generator of O alpha + O beta by the right-Euclidean algorithm, canonicalized.
inline HQuat right_gcd(HQuat alpha, HQuat beta) {
    if (alpha.is_zero() && beta.is_zero()) throw domain_error("right_gcd of two zeros");
    while (!beta.is_zero()) {
        const std::int64_t n = nrd(beta);
        const auto x = detail::hamilton(alpha.doubled(), conj(beta).doubled());  // 4 alpha conj(beta)
        // target t = alpha beta^{-1}; t_i = x_i / (4n)
        std::array<std::int64_t, 4> lip{}, half{};
        for (int i = 0; i < 4; ++i) {
            lip[i] = 2 * detail::floor_div(x[i] + 2 * n, 4 * n);
            half[i] = 2 * detail::floor_div(x[i], 4 * n) + 1;
        }
        HQuat rem = alpha;
        std::int64_t best = -1;
        for (const auto& cand : {lip, half}) {
            const HQuat r = alpha - HQuat::from_doubled(cand) * beta;
            const std::int64_t nr = nrd(r);
            if (best < 0 || nr < best) {
                best = nr;
                rem = r;
            }
        }
        if (best >= n) throw consistency_error("Euclidean step failed to reduce the norm");
        alpha = beta;
        beta = rem;
    }
    return canonical_class(alpha);
}

// alpha = pi_0 pi_1 ... pi_{r-1} with nrd(pi_i) = primes[i]. Right factors are
// peeled first; pi_0 absorbs the leftover unit so the product is exact.
inline std::vector<HQuat> factor_hurwitz(const HQuat& alpha, const std::vector<std::uint64_t>& primes) {
    if (alpha.is_zero()) throw domain_error("cannot factor zero");
    if (primes.empty()) throw domain_error("empty prime list");
    if (!is_primitive(alpha)) throw domain_error("alpha is not primitive");
    std::uint64_t product = 1;
    for (auto p : primes) {
        if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
        product *= p;
    }
    if (static_cast<std::uint64_t>(nrd(alpha)) != product)
        throw domain_error("nrd(alpha) = " + std::to_string(nrd(alpha)) + " does not match the prime list");
    std::vector<HQuat> factors(primes.size());
    HQuat rest = alpha;
    for (std::size_t i = primes.size(); i-- > 1;) {
        const auto p = static_cast<std::int64_t>(primes[i]);
        const HQuat g = right_gcd(rest, HQuat::integer(p));
        if (nrd(g) != p) throw consistency_error("right factor has norm " + std::to_string(nrd(g)));
        auto left = divide_exact(rest * conj(g), p);
        if (!left) throw consistency_error("alpha is not right-divisible by its prime factor");
        factors[i] = g;
        rest = *left;
    }
    factors[0] = rest;
    return factors;
}

namespace detail {

inline void require_odd_prime(std::uint64_t p) {
    if (!is_prime(p)) throw domain_error(std::to_string(p) + " is not prime");
    if (p == 2) throw domain_error("p = 2 is ramified in the Hurwitz order");
}

}  // namespace detail

// Canonical classes of reduced norm p, sorted. There are p + 1 of them.
inline std::vector<HQuat> primes_of_norm(std::uint64_t p) {
    detail::require_odd_prime(p);
    static std::shared_mutex mu;
    static std::map<std::uint64_t, std::vector<HQuat>> cache;
    {
        std::shared_lock lock(mu);
        if (auto it = cache.find(p); it != cache.end()) return it->second;
    }
    const auto target = static_cast<std::int64_t>(4 * p);
    std::int64_t bound = 0;
    while ((bound + 1) * (bound + 1) <= target) ++bound;
    std::vector<HQuat> classes;
    for (std::int64_t w0 = -bound; w0 <= bound; ++w0)
        for (std::int64_t w1 = -bound; w1 <= bound; ++w1)
            for (std::int64_t w2 = -bound; w2 <= bound; ++w2) {
                const std::int64_t r = target - w0 * w0 - w1 * w1 - w2 * w2;
                if (r < 0) continue;
                std::int64_t w3 = 0;
                while (w3 * w3 < r) ++w3;
                if (w3 * w3 != r) continue;
                for (std::int64_t s : {w3, -w3}) {
                    if (((w0 ^ w1) & 1) || ((w1 ^ w2) & 1) || ((w2 ^ s) & 1)) continue;
                    classes.push_back(canonical_class(HQuat::from_doubled({w0, w1, w2, s})));
                    if (w3 == 0) break;
                }
            }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    if (classes.size() != p + 1)
        throw consistency_error("found " + std::to_string(classes.size()) + " classes of norm " + std::to_string(p));
    std::unique_lock lock(mu);
    cache.emplace(p, classes);
    return classes;
}

struct MetacommuteH {
    HQuat pi_prime;     // canonical class of norm p
    HQuat omega_prime;  // pi omega = omega' pi'
};

// pi' = canonical generator of O pi omega + O p.
inline MetacommuteH metacommute_h(const HQuat& pi, const HQuat& omega) {
    const std::int64_t p = nrd(pi);
    detail::require_odd_prime(static_cast<std::uint64_t>(p));
    if (omega.is_zero() || std::gcd(nrd(omega), p) != 1) throw domain_error("nrd(omega) is not coprime to nrd(pi)");
    const HQuat prod = pi * omega;
    const HQuat pi_prime = right_gcd(prod, HQuat::integer(p));
    if (nrd(pi_prime) != p) throw consistency_error("metacommuted prime has norm " + std::to_string(nrd(pi_prime)) + ", expected " + std::to_string(p));
    auto omega_prime = divide_exact(prod * conj(pi_prime), p);
    if (!omega_prime) throw consistency_error("pi omega is not right-divisible by pi'");
    return {pi_prime, *omega_prime};
}

// Ring morphism O -> M_2(F_p) with i -> [[a,b],[b,-a]], j -> [[0,1],[-1,0]],
// (a, b) the least pair with a^2 + b^2 = -1 mod p.
class SplitMap {
public:
    explicit SplitMap(std::uint64_t p) : f_(Field::make(static_cast<std::uint32_t>((detail::require_odd_prime(p), p)))) {
        const auto pp = static_cast<std::int64_t>(p);
        bool found = false;
        for (std::int64_t a = 0; a < pp && !found; ++a)
            for (std::int64_t b = 0; b < pp && !found; ++b)
                if ((a * a + b * b + 1) % pp == 0) {
                    a_ = a;
                    b_ = b;
                    found = true;
                }
        if (!found) throw consistency_error("no solution of a^2 + b^2 = -1");
        i_ = MatFq::from_ints(f_, {{a_, b_}, {b_, -a_}});
        j_ = MatFq::from_ints(f_, {{0, 1}, {-1, 0}});
        k_ = i_ * j_;
        const MatFq one = MatFq::identity(f_, 2);
        const MatFq minus_one = MatFq::scalar(f_, 2, f_.from_int(-1));
        if (!(i_ * i_ == minus_one) || !(j_ * j_ == minus_one) || !(j_ * i_ == k_.scale(f_.from_int(-1))))
            throw consistency_error("split images violate the quaternion relations");
        w_ = (minus_one + i_ + j_ + k_).scale(f_.inv(f_.from_int(2)));
        // the images of 1, i, j, w0 must be independent so that the kernel is pO
        std::vector<FieldElem> sys(4 * 4);
        const MatFq* basis[4] = {&one, &i_, &j_, &w_};
        for (std::size_t c = 0; c < 4; ++c)
            for (std::size_t r = 0; r < 4; ++r) sys[r * 4 + c] = basis[c]->entries()[r];
        if (!detail::kernel_rect(f_, 4, 4, sys).empty()) throw consistency_error("split map is not injective mod p");
    }

    const Field& field() const { return f_; }
    std::pair<std::int64_t, std::int64_t> ab() const { return {a_, b_}; }
    const MatFq& image_i() const { return i_; }
    const MatFq& image_j() const { return j_; }

    MatFq operator()(const HQuat& x) const {
        return MatFq::scalar(f_, 2, f_.from_int(x.a)) + i_.scale(f_.from_int(x.b)) + j_.scale(f_.from_int(x.c)) +
               w_.scale(f_.from_int(x.d));
    }

private:
    Field f_;
    std::int64_t a_ = 0, b_ = 0;
    MatFq i_{f_, 2}, j_{f_, 2}, k_{f_, 2}, w_{f_, 2};
};

inline SplitMap split_map(std::uint64_t p) { return SplitMap(p); }

// sigma_omega on primes_of_norm(p), as an index permutation.
inline Perm sigma_permutation_h(const HQuat& omega, std::uint64_t p) {
    const auto classes = primes_of_norm(p);
    Perm out;
    out.images.resize(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const HQuat img = metacommute_h(classes[i], omega).pi_prime;
        auto it = std::lower_bound(classes.begin(), classes.end(), img);
        if (it == classes.end() || *it != img) throw consistency_error("metacommuted class " + img.to_string() + " is not listed");
        out.images[i] = static_cast<std::size_t>(it - classes.begin());
    }
    return out;
}

struct DiagramH {
    bool bijective = false;  // class -> kernel point is onto P^1(F_p)
    bool commutes = false;
    Perm sigma;                   // on primes_of_norm(p)
    std::vector<std::string> witnesses;  // failing classes, if any
};

inline DiagramH diagram_h(const HQuat& omega, std::uint64_t p, Mutation mut = {}) {
    detail::require_odd_prime(p);
    if (omega.is_zero() || std::gcd(nrd(omega), static_cast<std::int64_t>(p)) != 1) throw domain_error("nrd(omega) is not coprime to p");
    const SplitMap rho(p);
    const Field& f = rho.field();
    const auto classes = primes_of_norm(p);
    const ProjectiveSpace line(f, 2);
    const MatFq q = rho(omega);
    DiagramH out;
    out.sigma = sigma_permutation_h(omega, p);

    auto kernel_of = [&](const HQuat& pi) {
        const MatFq m = rho(pi);
        if (rank(m) != 1) throw consistency_error("rho(" + pi.to_string() + ") does not have rank 1");
        return kernel_point(m);
    };
    std::vector<bool> hit(line.size(), false);
    for (const auto& pi : classes) hit[line.index_of(kernel_of(pi))] = true;
    out.bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    out.commutes = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const ProjPoint before = kernel_of(classes[i]);
        const ProjPoint after = kernel_of(classes[out.sigma.images[i]]);
        const ProjPoint predicted = mut.active ? canonicalize_point(f, q.apply(before.coords)) : tau_apply(q, before);
        if (predicted != after) {
            out.commutes = false;
            out.witnesses.push_back("pi=" + classes[i].to_string() + " omega=" + omega.to_string() + " p=" + std::to_string(p) +
                                    " kernel " + point_to_string(f, before) + " -> " + point_to_string(f, after) + ", tau predicts " +
                                    point_to_string(f, predicted));
        }
    }
    return out;
}

inline bool diagram_check_h(const HQuat& omega, std::uint64_t p) {
    const auto d = diagram_h(omega, p);
    return d.bijective && d.commutes;
}

}  // namespace metacomm

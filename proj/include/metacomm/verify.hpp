#pragma once

// Verification sweeps: each pits a closed form or a metacommutation result
// against an independent enumeration over finite fields, ideal sets or
// quaternion classes, and reports witnesses for every disagreement.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cyclelaw.hpp"
#include "errors.hpp"
#include "fq.hpp"
#include "fqmat.hpp"
#include "hurwitz.hpp"
#include "projperm.hpp"
#include "random.hpp"
#include "zmat.hpp"

namespace metacomm::verify {

struct Options {
    std::uint64_t seed = 0;
    std::uint64_t max_q = 0;  // 0: suite default
    std::uint64_t max_p = 0;  // 0: suite default
    unsigned jobs = 1;
    Mutation mutation;
};

struct Result {
    std::string suite;
    std::uint64_t cases = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> witnesses;  // first few failures
    std::vector<std::string> notes;

    bool passed() const { return failed == 0 && cases > 0; }
};

inline constexpr std::size_t max_witnesses = 20;

// Runs fn(i) for i in [0, n) on `jobs` threads. fn returns a failure witness
// or nullopt; exceptions count as failures. Merging is in index order.
inline void run_cases(Result& res, std::size_t n, unsigned jobs, const std::function<std::optional<std::string>(std::size_t)>& fn) {
    std::vector<std::optional<std::string>> out(n);
    auto worker = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < n; i += stride) {
            try {
                out[i] = fn(i);
            } catch (const std::exception& e) {
                out[i] = std::string("case ") + std::to_string(i) + " raised: " + e.what();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker, t, workers);
        for (auto& th : pool) th.join();
    }
    res.cases += n;
    for (auto& o : out) {
        if (!o) continue;
        ++res.failed;
        if (res.witnesses.size() < max_witnesses) res.witnesses.push_back(std::move(*o));
    }
}

namespace detail {

inline std::vector<std::uint64_t> capped(std::vector<std::uint64_t> values, std::uint64_t cap) {
    if (cap == 0) return values;
    values.erase(std::remove_if(values.begin(), values.end(), [&](std::uint64_t v) { return v > cap; }), values.end());
    return values;
}

inline std::string show(const CycleType& ct) {
    std::string s = "{";
    bool first = true;
    for (auto [len, count] : ct.cycles) {
        s += (first ? "" : ", ") + std::to_string(len) + ":" + std::to_string(count);
        first = false;
    }
    return s + "}";
}

inline std::size_t distinct_nontrivial_lengths(const CycleType& ct) {
    return static_cast<std::size_t>(std::count_if(ct.cycles.begin(), ct.cycles.end(), [](const auto& kv) { return kv.first > 1; }));
}

}  // namespace detail

// Single hypercompanion blocks: closed-form l-cycle counts vs enumeration,
// for every monic irreducible phi other than x and k with deg(phi) k <= 4.
inline Result fripertinger(const Options& opt) {
    Result res;
    res.suite = "fripertinger";
    struct Case {
        Poly phi;
        int k;
    };
    std::vector<Case> cases;
    for (auto q : detail::capped({2, 3, 4, 5}, opt.max_q)) {
        const Field f = Field::of_order(q);
        for (std::size_t d = 1; d <= 4; ++d)
            for (const auto& phi : irreducible_polys(f, d)) {
                if (phi[0].code == 0) continue;  // H(x^k) is singular
                for (int k = 1; d * static_cast<std::size_t>(k) <= 4; ++k) cases.push_back({phi, k});
            }
    }
    run_cases(res, cases.size(), opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const auto& c = cases[i];
        const CycleType formula = single_block_cycle_counts(c.phi, c.k, opt.mutation);
        const CycleType brute = cycle_type(tau_permutation(hypercompanion(c.phi, c.k)));
        if (formula == brute) return std::nullopt;
        return "q=" + std::to_string(c.phi.field().q()) + " phi=" + c.phi.to_string() + " k=" + std::to_string(c.k) +
               " formula " + detail::show(formula) + " enumeration " + detail::show(brute);
    });
    return res;
}

// Fixed points of tau_Q: eigenspace formula vs enumeration.
inline Result fixedpoints(const Options& opt) {
    Result res;
    res.suite = "fixedpoints";
    std::vector<MatFq> cases;
    const auto qs = detail::capped({2, 3, 5, 7}, opt.max_q);
    auto has = [&](std::uint64_t q) { return std::find(qs.begin(), qs.end(), q) != qs.end(); };
    if (has(2)) {
        for (auto& a : all_gl(Field::make(2), 2)) cases.push_back(std::move(a));
        for (auto& a : all_gl(Field::make(2), 3)) cases.push_back(std::move(a));
    }
    if (has(3))
        for (auto& a : all_gl(Field::make(3), 2)) cases.push_back(std::move(a));
    const std::size_t exhaustive = cases.size();
    struct Sampled {
        std::uint32_t q;
        std::size_t m;
    };
    std::vector<Sampled> sampled;
    for (Sampled s : {Sampled{5, 2}, Sampled{7, 2}, Sampled{3, 3}})
        if (has(s.q)) sampled.push_back(s);
    for (std::size_t g = 0; g < sampled.size(); ++g) {
        const Field f = Field::make(sampled[g].q);
        for (std::size_t i = 0; i < 1000; ++i) {
            Rng rng(opt.seed, (g << 32) | i);
            cases.push_back(random_gl(f, sampled[g].m, rng));
        }
    }
    std::vector<char> differs(cases.size(), 0);
    run_cases(res, cases.size(), opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const MatFq& q = cases[i];
        const std::uint64_t formula = fixed_point_count(q, opt.mutation);
        const std::size_t brute = cycle_type(tau_permutation(q)).fixed;
        std::uint64_t algebraic_reading = 0;
        for (const auto& c : fixed_point_breakdown(q)) algebraic_reading += (ipow(q.field().q(), static_cast<unsigned>(c.algebraic)) - 1) / (q.field().q() - 1);
        differs[i] = algebraic_reading != formula;
        if (formula == brute) return std::nullopt;
        return "Q=" + q.to_string() + " over F_" + std::to_string(q.field().q()) + " formula " + std::to_string(formula) +
               " enumeration " + std::to_string(brute);
    });
    const auto n_differ = std::count(differs.begin(), differs.end(), 1);
    res.notes.push_back(std::to_string(exhaustive) + " exhaustive and " + std::to_string(cases.size() - exhaustive) + " sampled matrices");
    res.notes.push_back(std::to_string(n_differ) + " matrices where algebraic multiplicities would give a different count (eigenspace dimension used)");
    return res;
}

// GL_2: every moved point lies in a cycle of length pgl_order(Q).
inline Result gl2(const Options& opt) {
    Result res;
    res.suite = "gl2";
    std::vector<MatFq> cases;
    for (auto q : detail::capped({2, 3, 5}, opt.max_q))
        for (auto& a : all_gl(Field::make(static_cast<std::uint32_t>(q)), 2)) cases.push_back(std::move(a));
    run_cases(res, cases.size(), opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const MatFq& q = cases[i];
        const std::uint64_t ell = pgl_order(q);
        const CycleType brute = cycle_type(tau_permutation(q));
        for (auto [len, count] : brute.cycles)
            if (len != 1 && len != ell)
                return "Q=" + q.to_string() + " over F_" + std::to_string(q.field().q()) + " has a " + std::to_string(len) +
                       "-cycle but pgl_order is " + std::to_string(ell);
        const CycleReport formula = gl2_cycle_structure(q, opt.mutation);
        if (!(formula.type == brute))
            return "Q=" + q.to_string() + " formula " + detail::show(formula.type) + " enumeration " + detail::show(brute);
        return std::nullopt;
    });
    return res;
}

// Main theorem, M_n(Z): ker rho(P') = tau_{rho(omega)}(ker rho(P)).
inline Result diagram_z(const Options& opt) {
    Result res;
    res.suite = "diagram-z";
    const auto primes = detail::capped({2, 3, 5, 7}, opt.max_p);
    if (primes.empty()) return res;
    auto check = [&](const MatZ& p_mat, const MatZ& omega, std::uint64_t p) -> std::optional<std::string> {
        const auto d = metacomm::diagram_z(p_mat, omega, p, opt.mutation);
        const bool exact = d.mc.omega_prime * d.mc.p_prime == p_mat * omega && det(d.mc.p_prime) == p;
        if (d.commutes && exact) return std::nullopt;
        const Field fp = Field::make(static_cast<std::uint32_t>(p));
        return "P=" + p_mat.to_string() + " omega=" + omega.to_string() + " p=" + std::to_string(p) + " P'=" + d.mc.p_prime.to_string() +
               " kernel " + point_to_string(fp, d.kernel_before) + " -> " + point_to_string(fp, d.kernel_after) + ", tau predicts " +
               point_to_string(fp, d.predicted) + (exact ? "" : " (factorization not exact)");
    };
    run_cases(res, 1000, opt.jobs, [&](std::size_t i) {
        Rng rng(opt.seed, i);
        const std::uint64_t p = primes[i % primes.size()];
        const std::size_t n = 2 + (i / primes.size()) % 2;
        return check(random_prime_matrix(n, p, rng), random_coprime_matrix(n, p, rng), p);
    });
    for (auto p : detail::capped({3, 5}, opt.max_p)) {
        const auto ideals = prime_ideals_z(2, p);
        run_cases(res, 200, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
            Rng rng(opt.seed ^ (p << 40), i);
            const MatZ omega = random_coprime_matrix(2, p, rng);
            for (const auto& ideal : ideals)
                if (auto w = check(ideal, omega, p)) return w;
            return std::nullopt;
        });
        res.notes.push_back("p=" + std::to_string(p) + ": all " + std::to_string(ideals.size()) + " ideals x 200 omega");
    }
    return res;
}

// Main theorem, Hurwitz order: class-to-kernel bijection, commuting diagram,
// and cycle type of sigma_omega equal to that of tau_{rho(omega)}.
inline Result diagram_h(const Options& opt) {
    Result res;
    res.suite = "diagram-h";
    for (auto p : detail::capped({3, 5, 7, 11, 13}, opt.max_p)) {
        const auto classes = primes_of_norm(p);
        if (classes.size() != p + 1) {
            ++res.failed;
            res.witnesses.push_back("p=" + std::to_string(p) + " has " + std::to_string(classes.size()) + " classes");
        }
        const SplitMap rho(p);
        run_cases(res, 200, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
            Rng rng(opt.seed ^ (p << 40), i);
            const HQuat omega = random_coprime_hquat(p, rng);
            const auto d = metacomm::diagram_h(omega, p, opt.mutation);
            if (!d.bijective) return "p=" + std::to_string(p) + ": classes do not cover P^1";
            if (!d.commutes) return d.witnesses.front();
            const CycleType sigma_type = cycle_type(d.sigma);
            const CycleReport tau = cycle_structure(rho(omega), true);
            if (!(sigma_type == tau.type))
                return "omega=" + omega.to_string() + " p=" + std::to_string(p) + " sigma " + detail::show(sigma_type) + " tau " +
                       detail::show(tau.type);
            return std::nullopt;
        });
    }
    return res;
}

// subexp(phi) gcd(q-1, exp(phi)) = exp(phi), and f_j = subexp(phi) p^t.
inline Result subexp(const Options& opt) {
    Result res;
    res.suite = "subexp";
    std::vector<Poly> cases;
    for (auto q : detail::capped({2, 3, 4, 5}, opt.max_q)) {
        const Field f = Field::of_order(q);
        for (std::size_t d = 1; d <= 3; ++d)
            for (auto& phi : irreducible_polys(f, d))
                if (phi[0].code != 0) cases.push_back(std::move(phi));
    }
    run_cases(res, cases.size(), opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const Poly& phi = cases[i];
        const std::uint64_t q = phi.field().q();
        const std::uint64_t e = poly_exp(phi);
        const std::uint64_t s = poly_subexp(phi);
        const std::uint64_t g = std::gcd(opt.mutation.active ? q + 1 : q - 1, e);
        const std::string tag = "q=" + std::to_string(q) + " phi=" + phi.to_string();
        if (s * g != e) return tag + " exp " + std::to_string(e) + " subexp " + std::to_string(s) + " gcd " + std::to_string(g);
        for (std::uint64_t j = 1; j <= 4; ++j) {
            const std::uint64_t fast = fj_fast(phi, j);
            const std::uint64_t direct = poly_subexp(phi.pow(j));
            if (fast != direct)
                return tag + " j=" + std::to_string(j) + " fj_fast " + std::to_string(fast) + " subexp(phi^j) " + std::to_string(direct);
        }
        return std::nullopt;
    });
    return res;
}

// Diagonalizable Q: uniform_cycle_check's verdict vs the enumerated cycle shape.
inline Result diagonalizable(const Options& opt, std::size_t per_group = 500) {
    Result res;
    res.suite = "diagonalizable";
    struct Group {
        std::uint32_t q;
        std::size_t m;
    };
    std::vector<Group> groups;
    for (auto q : detail::capped({5, 7}, opt.max_q))
        for (std::size_t m : {2, 3}) groups.push_back({static_cast<std::uint32_t>(q), m});
    std::vector<char> uniform(groups.size() * per_group, 0);
    run_cases(res, groups.size() * per_group, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const Group g = groups[i / per_group];
        const Field f = Field::make(g.q);
        Rng rng(opt.seed, i);
        MatFq q = random_gl(f, g.m, rng);
        while (!is_squarefree(minpoly(q))) q = random_gl(f, g.m, rng);
        const auto verdict = uniform_cycle_check(q);
        const CycleType brute = cycle_type(tau_permutation(q));
        const bool shape_uniform = detail::distinct_nontrivial_lengths(brute) <= 1;
        uniform[i] = verdict.has_value();
        const std::string tag = "Q=" + q.to_string() + " over F_" + std::to_string(g.q);
        if (verdict.has_value() != shape_uniform)
            return tag + (verdict ? " ratio orders uniform" : " ratio orders differ") + " but enumeration gives " + detail::show(brute);
        if (verdict) {
            const std::uint64_t ell = pgl_order(q);
            if (*verdict->ell != ell) return tag + " ell " + std::to_string(*verdict->ell) + " vs pgl_order " + std::to_string(ell);
            for (auto [len, count] : brute.cycles)
                if (len != 1 && len != ell) return tag + " has a " + std::to_string(len) + "-cycle, pgl_order " + std::to_string(ell);
            if (!(verdict->type == brute)) return tag + " report " + detail::show(verdict->type) + " enumeration " + detail::show(brute);
        }
        return std::nullopt;
    });
    const auto n_uniform = std::count(uniform.begin(), uniform.end(), 1);
    res.notes.push_back(std::to_string(n_uniform) + " uniform, " + std::to_string(uniform.size() - n_uniform) + " non-uniform");
    return res;
}

// sigma is a bijection for each omega, and sigma_{w1} sigma_{w2} = sigma_{w2 w1},
// on HNF ideal sets of M_n(Z) and on Hurwitz prime classes.
inline Result permutation_algebra(const Options& opt, std::size_t pairs = 200) {
    Result res;
    res.suite = "permutation-algebra";
    struct ZGroup {
        std::size_t n;
        std::uint64_t p;
    };
    const std::vector<ZGroup> zgroups{{2, 3}, {2, 5}, {2, 7}, {3, 2}, {3, 3}};
    run_cases(res, pairs, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const ZGroup g = zgroups[i % zgroups.size()];
        Rng rng(opt.seed, i);
        const MatZ w1 = random_coprime_matrix(g.n, g.p, rng);
        const MatZ w2 = random_coprime_matrix(g.n, g.p, rng);
        const Perm s1 = sigma_permutation_z(w1, g.n, g.p);
        const Perm s2 = sigma_permutation_z(w2, g.n, g.p);
        const std::string tag = "M_" + std::to_string(g.n) + "(Z) p=" + std::to_string(g.p) + " w1=" + w1.to_string() + " w2=" + w2.to_string();
        if (!s1.is_bijection() || !s2.is_bijection()) return tag + ": sigma is not a bijection";
        if (!(compose(s1, s2) == sigma_permutation_z(w2 * w1, g.n, g.p))) return tag + ": sigma_w1 sigma_w2 != sigma_{w2 w1}";
        return std::nullopt;
    });
    const std::vector<std::uint64_t> hprimes{3, 5, 7, 11, 13};
    run_cases(res, pairs, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        const std::uint64_t p = hprimes[i % hprimes.size()];
        Rng rng(opt.seed ^ 0x4857ULL, i);
        const HQuat w1 = random_coprime_hquat(p, rng);
        const HQuat w2 = random_coprime_hquat(p, rng);
        const Perm s1 = sigma_permutation_h(w1, p);
        const Perm s2 = sigma_permutation_h(w2, p);
        const std::string tag = "Hurwitz p=" + std::to_string(p) + " w1=" + w1.to_string() + " w2=" + w2.to_string();
        if (!s1.is_bijection() || !s2.is_bijection()) return tag + ": sigma is not a bijection";
        if (!(compose(s1, s2) == sigma_permutation_h(w2 * w1, p))) return tag + ": sigma_w1 sigma_w2 != sigma_{w2 w1}";
        const HQuat shifted = w1 + HQuat{static_cast<std::int64_t>(p) * rng.range(-2, 2), static_cast<std::int64_t>(p) * rng.range(-2, 2), 0,
                                         static_cast<std::int64_t>(p) * rng.range(-2, 2)};
        if (!shifted.is_zero() && !(sigma_permutation_h(shifted, p) == s1)) return tag + ": sigma depends on more than omega mod p";
        return std::nullopt;
    });
    return res;
}

namespace detail {

inline std::vector<std::vector<std::uint64_t>> orderings(std::vector<std::uint64_t> primes) {
    std::sort(primes.begin(), primes.end());
    std::vector<std::vector<std::uint64_t>> out;
    do out.push_back(primes);
    while (std::next_permutation(primes.begin(), primes.end()));
    return out;
}

inline std::vector<std::uint64_t> pick_distinct(const std::vector<std::uint64_t>& pool, std::size_t count, Rng& rng) {
    std::vector<std::uint64_t> rest = pool, out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t k = rng.below(rest.size());
        out.push_back(rest[k]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return out;
}

}  // namespace detail

// Refactoring under every prime ordering reconstructs alpha, and swapping two
// adjacent primes moves the factors exactly as metacommutation predicts.
inline Result reorder(const Options& opt, std::size_t samples = 100) {
    Result res;
    res.suite = "reorder";
    run_cases(res, samples, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        Rng rng(opt.seed ^ 0x5a4dULL, i);
        const std::size_t n = 2 + i % 2;
        const auto primes = detail::pick_distinct({2, 3, 5, 7, 11}, 2 + rng.below(2), rng);
        MatZ alpha;
        do {
            alpha = MatZ::identity(n);
            for (auto p : primes) alpha = alpha * random_prime_matrix(n, p, rng);
        } while (!is_primitive(alpha));
        const std::string tag = "alpha=" + alpha.to_string();
        for (const auto& order : detail::orderings(primes)) {
            const auto fs = prime_chain_factor(alpha, order);
            const std::size_t r = fs.size();
            MatZ prod = MatZ::identity(n);
            for (const auto& f : fs) prod = prod * f;
            if (!(prod == alpha)) return tag + ": product of factors differs from alpha";
            for (std::size_t t = 0; t < r; ++t)
                if (abs(det(fs[r - 1 - t])) != order[t]) return tag + ": factor determinant mismatch";
            // swap peel positions t, t+1
            for (std::size_t t = 0; t + 1 < r; ++t) {
                auto swapped = order;
                std::swap(swapped[t], swapped[t + 1]);
                const auto gs = prime_chain_factor(alpha, swapped);
                const MatZ& left = fs[r - 2 - t];   // det order[t+1]
                const MatZ& right = fs[r - 1 - t];  // det order[t]
                const auto mc = metacommute_z(left, right, order[t + 1]);
                if (!(gs[r - 1 - t] == mc.p_prime)) return tag + ": swapped factor " + gs[r - 1 - t].to_string() + " vs metacommuted " + mc.p_prime.to_string();
                if (!(hnf(gs[r - 2 - t]) == hnf(mc.omega_prime))) return tag + ": swapped cofactor class differs from omega'";
            }
        }
        return std::nullopt;
    });
    run_cases(res, samples, opt.jobs, [&](std::size_t i) -> std::optional<std::string> {
        Rng rng(opt.seed ^ 0x4877ULL, i);
        const auto primes = detail::pick_distinct({3, 5, 7, 11, 13}, 2 + rng.below(2), rng);
        const auto& units = hurwitz_units();
        HQuat alpha;
        do {
            alpha = HQuat::integer(1);
            for (auto p : primes) {
                const auto classes = primes_of_norm(p);
                alpha = alpha * (units[rng.below(units.size())] * classes[rng.below(classes.size())]);
            }
        } while (!is_primitive(alpha));
        const std::string tag = "alpha=" + alpha.to_string();
        for (const auto& order : detail::orderings(primes)) {
            const auto fs = factor_hurwitz(alpha, order);
            HQuat prod = HQuat::integer(1);
            for (const auto& f : fs) prod = prod * f;
            if (prod != alpha) return tag + ": product of factors differs from alpha";
            for (std::size_t t = 0; t < fs.size(); ++t)
                if (static_cast<std::uint64_t>(nrd(fs[t])) != order[t]) return tag + ": factor norm mismatch";
            for (std::size_t t = 0; t + 1 < fs.size(); ++t) {
                auto swapped = order;
                std::swap(swapped[t], swapped[t + 1]);
                const auto gs = factor_hurwitz(alpha, swapped);
                const auto mc = metacommute_h(fs[t], fs[t + 1]);
                if (canonical_class(gs[t + 1]) != mc.pi_prime) return tag + ": swapped factor differs from metacommuted prime";
                if (canonical_class(gs[t]) != canonical_class(mc.omega_prime)) return tag + ": swapped cofactor differs from omega'";
            }
        }
        return std::nullopt;
    });
    return res;
}

// The worked M_2(Z) example with det 15, reproduced exactly.
inline Result worked_example() {
    Result res;
    res.suite = "worked_example";
    run_cases(res, 1, 1, [](std::size_t) -> std::optional<std::string> {
        const MatZ alpha = MatZ::from_ints({{5, 1}, {0, 3}});
        const MatZ p_mat = MatZ::from_ints({{1, 1}, {0, 3}});
        const MatZ omega = MatZ::from_ints({{5, 0}, {0, 1}});
        if (!(p_mat * omega == alpha)) return "P omega != alpha";
        const auto d = metacomm::diagram_z(p_mat, omega, 3);
        const Field f3 = Field::make(3);
        std::string got = "P'=" + d.mc.p_prime.to_string() + " omega'=" + d.mc.omega_prime.to_string() + " kernels " +
                          point_to_string(f3, d.kernel_before) + " -> " + point_to_string(f3, d.kernel_after);
        const bool ok = d.mc.p_prime == MatZ::from_ints({{1, 2}, {0, 3}}) && d.mc.omega_prime == MatZ::from_ints({{5, -3}, {0, 1}}) &&
                        point_to_string(f3, d.kernel_before) == "(1:2)" && point_to_string(f3, d.kernel_after) == "(1:1)" && d.commutes;
        if (!ok) return got;
        return std::nullopt;
    });
    return res;
}

// Suites reachable from the command line.
inline const std::vector<std::string>& cli_suites() {
    static const std::vector<std::string> names{"fripertinger", "fixedpoints", "gl2", "diagram-z", "diagram-h", "subexp"};
    return names;
}

inline Result run_suite(const std::string& name, const Options& opt) {
    if (name == "fripertinger") return fripertinger(opt);
    if (name == "fixedpoints") return fixedpoints(opt);
    if (name == "gl2") return gl2(opt);
    if (name == "diagram-z") return diagram_z(opt);
    if (name == "diagram-h") return diagram_h(opt);
    if (name == "subexp") return subexp(opt);
    throw domain_error("unknown suite '" + name + "'");
}

}  // namespace metacomm::verify

#pragma once

// Seeded generators for sweep inputs. Each case draws from its own stream
// derived from (seed, case index), so results do not depend on scheduling.

#include <cstdint>
#include <random>

#include "fq.hpp"
#include "fqmat.hpp"
#include "hurwitz.hpp"
#include "zmat.hpp"

namespace metacomm {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : g_(splitmix64(seed ^ splitmix64(stream + 1))) {}

    // Uniform-ish in [0, n); mt19937_64 output is fixed by the standard.
    std::uint64_t below(std::uint64_t n) { return g_() % n; }
    std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 g_;
};

inline MatFq random_matrix(const Field& f, std::size_t m, Rng& rng) {
    MatFq out(f, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out.at(i, j) = FieldElem{static_cast<std::uint32_t>(rng.below(f.q()))};
    return out;
}

inline MatFq random_gl(const Field& f, std::size_t m, Rng& rng) {
    while (true) {
        MatFq a = random_matrix(f, m, rng);
        if (is_invertible(a)) return a;
    }
}

// Every m x m matrix over F_q, in code order.
template <class Fn>
void for_each_matrix(const Field& f, std::size_t m, Fn&& fn) {
    const std::uint64_t total = ipow(f.q(), static_cast<unsigned>(m * m));
    for (std::uint64_t t = 0; t < total; ++t) {
        MatFq a(f, m);
        std::uint64_t r = t;
        for (std::size_t i = m * m; i-- > 0;) {
            a.at(i / m, i % m) = FieldElem{static_cast<std::uint32_t>(r % f.q())};
            r /= f.q();
        }
        fn(a);
    }
}

inline std::vector<MatFq> all_gl(const Field& f, std::size_t m) {
    std::vector<MatFq> out;
    for_each_matrix(f, m, [&](const MatFq& a) {
        if (is_invertible(a)) out.push_back(a);
    });
    return out;
}

// Product of random elementary row operations and a random sign.
inline MatZ random_unimodular(std::size_t n, Rng& rng) {
    MatZ u = MatZ::identity(n);
    if (n < 2) return rng.below(2) ? u : u.scale(-1);
    for (std::size_t step = 0; step < 3 * n; ++step) {
        const std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) ++j;
        const std::int64_t t = rng.range(-2, 2);
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) += t * u(j, c);
    }
    if (rng.below(2))
        for (std::size_t c = 0; c < n; ++c) u.at(0, c) = -u(0, c);
    return u;
}

// U H with H a uniformly chosen HNF of determinant p.
inline MatZ random_prime_matrix(std::size_t n, std::uint64_t p, Rng& rng) {
    const auto ideals = prime_ideals_z(n, p);
    return random_unimodular(n, rng) * ideals[rng.below(ideals.size())];
}

// Small-entry matrix with nonzero determinant coprime to p.
inline MatZ random_coprime_matrix(std::size_t n, std::uint64_t p, Rng& rng, std::int64_t bound = 4) {
    while (true) {
        MatZ w(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w.at(i, j) = rng.range(-bound, bound);
        const BigInt d = det(w);
        if (d != 0 && boost::multiprecision::gcd(d, BigInt(p)) == 1) return w;
    }
}

inline HQuat random_hquat(Rng& rng, std::int64_t bound = 4) {
    return {rng.range(-bound, bound), rng.range(-bound, bound), rng.range(-bound, bound), rng.range(-bound, bound)};
}

// Nonzero quaternion with reduced norm coprime to p.
inline HQuat random_coprime_hquat(std::uint64_t p, Rng& rng, std::int64_t bound = 4) {
    while (true) {
        const HQuat w = random_hquat(rng, bound);
        if (!w.is_zero() && std::gcd(nrd(w), static_cast<std::int64_t>(p)) == 1) return w;
    }
}

}  // namespace metacomm

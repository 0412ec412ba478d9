#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "metacomm/fqmat.hpp"
#include "metacomm/projperm.hpp"
#include "metacomm/random.hpp"

using namespace metacomm;

namespace {

MatFq M(const Field& f, std::vector<std::vector<std::int64_t>> rows) { return MatFq::from_ints(f, rows); }
Poly P(const Field& f, std::vector<std::int64_t> cs) { return Poly::from_ints(f, cs); }

// det by Laplace expansion along the first row, entries in F_q[x].
Poly laplace_det(const std::vector<std::vector<Poly>>& a) {
    const std::size_t n = a.size();
    const Field& f = a[0][0].field();
    if (n == 1) return a[0][0];
    Poly total(f);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(std::move(row));
        }
        const Poly term = a[0][c] * laplace_det(minor);
        total = (c % 2 == 0) ? total + term : total - term;
    }
    return total;
}

Poly charpoly_oracle(const MatFq& a) {
    const Field& f = a.field();
    std::vector<std::vector<Poly>> xm(a.dim(), std::vector<Poly>(a.dim(), Poly(f)));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            xm[i][j] = Poly::constant(f, f.neg(a(i, j)));
            if (i == j) xm[i][j] = xm[i][j] + Poly::x(f);
        }
    return laplace_det(xm);
}

bool is_zero(const MatFq& a) {
    for (auto e : a.entries())
        if (e.code != 0) return false;
    return true;
}

}  // namespace

TEST(Rref, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3);
    EXPECT_EQ(rref_rank(MatFq::identity(f2, 3)).rank, 3u);
    auto r = rref_rank(M(f3, {{1, 1}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.rref, M(f3, {{1, 1}, {0, 0}}));
    r = rref_rank(M(f3, {{1, 1}, {2, 2}}));
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.rref, M(f3, {{1, 1}, {0, 0}}));
    EXPECT_EQ(rank(MatFq(f3, 3)), 0u);
}

TEST(KernelPoint, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3);
    EXPECT_EQ(point_to_string(f3, kernel_point(M(f3, {{1, 1}, {0, 0}}))), "(1:2)");
    EXPECT_EQ(point_to_string(f2, kernel_point(M(f2, {{0, 1}, {0, 0}}))), "(1:0)");
    EXPECT_EQ(point_to_string(f3, kernel_point(M(f3, {{1, 2}, {0, 0}}))), "(1:1)");
}

TEST(KernelPoint, WrongRankReportsRank) {
    const Field f3 = fq_make(3);
    try {
        kernel_point(MatFq::identity(f3, 2));
        FAIL() << "expected domain_error";
    } catch (const domain_error& e) {
        EXPECT_NE(std::string(e.what()).find('2'), std::string::npos) << e.what();
    }
    EXPECT_THROW(kernel_point(MatFq(f3, 2)), domain_error);
}

TEST(Inverse, RoundTrip) {
    for (std::uint64_t q : {2u, 3u, 4u, 9u}) {
        const Field f = Field::of_order(q);
        Rng rng(1, q);
        for (int t = 0; t < 50; ++t) {
            const MatFq a = random_gl(f, 1 + rng.below(4), rng);
            EXPECT_EQ(a * inverse(a), MatFq::identity(f, a.dim()));
            EXPECT_EQ(inverse(a) * a, MatFq::identity(f, a.dim()));
        }
    }
    EXPECT_THROW(inverse(M(fq_make(3), {{1, 1}, {1, 1}})), domain_error);
}

TEST(Charpoly, Examples) {
    const Field f3 = fq_make(3);
    EXPECT_EQ(charpoly(MatFq::identity(f3, 2)), P(f3, {1, -2, 1}));
    EXPECT_EQ(charpoly(M(f3, {{0, 2}, {1, 0}})), P(f3, {1, 0, 1}));
    EXPECT_EQ(charpoly(M(f3, {{1, 0}, {0, 2}})), P(f3, {-1, 1}) * P(f3, {-2, 1}));
}

TEST(Charpoly, MatchesLaplaceExpansion) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u}) {
        const Field f = Field::of_order(q);
        Rng rng(2, q);
        for (int t = 0; t < 60; ++t) {
            const MatFq a = random_matrix(f, 1 + rng.below(5), rng);
            EXPECT_EQ(charpoly(a), charpoly_oracle(a)) << a.to_string();
        }
    }
}

TEST(Charpoly, CayleyHamilton) {
    for (std::uint64_t q : {2u, 3u, 4u, 7u}) {
        const Field f = Field::of_order(q);
        Rng rng(3, q);
        for (int t = 0; t < 60; ++t) {
            const MatFq a = random_matrix(f, 1 + rng.below(5), rng);
            EXPECT_TRUE(is_zero(eval_at(charpoly(a), a))) << a.to_string();
        }
    }
}

TEST(Minpoly, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3);
    EXPECT_EQ(minpoly(MatFq::identity(f3, 2)), P(f3, {-1, 1}));
    EXPECT_EQ(minpoly(M(f2, {{1, 0}, {1, 1}})), P(f2, {1, 0, 1}));
    EXPECT_EQ(minpoly(M(f3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), P(f3, {-1, 1}) * P(f3, {-2, 1}));
}

TEST(Minpoly, DividesCharpolyAndIsMinimal) {
    for (std::uint64_t q : {2u, 3u, 4u}) {
        const Field f = Field::of_order(q);
        Rng rng(4, q);
        for (int t = 0; t < 60; ++t) {
            const MatFq a = random_matrix(f, 1 + rng.below(4), rng);
            const Poly mp = minpoly(a);
            EXPECT_TRUE(mp.is_monic());
            EXPECT_TRUE((charpoly(a) % mp).is_zero());
            EXPECT_TRUE(is_zero(eval_at(mp, a)));
            // no proper monic divisor annihilates a
            for (const auto& [phi, k] : poly_factor(mp)) EXPECT_FALSE(is_zero(eval_at(mp / phi, a))) << a.to_string();
        }
    }
}

TEST(ElementaryDivisors, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3);
    auto ed = elementary_divisors(MatFq::identity(f3, 2));
    ASSERT_EQ(ed.size(), 2u);
    EXPECT_EQ(ed[0].phi, P(f3, {-1, 1}));
    EXPECT_EQ(ed[0].k, 1);
    EXPECT_EQ(ed[1].k, 1);
    ed = elementary_divisors(M(f2, {{1, 0}, {1, 1}}));
    ASSERT_EQ(ed.size(), 1u);
    EXPECT_EQ(ed[0].phi, P(f2, {1, 1}));
    EXPECT_EQ(ed[0].k, 2);
    ed = elementary_divisors(M(f3, {{0, 2}, {1, 0}}));
    ASSERT_EQ(ed.size(), 1u);
    EXPECT_EQ(ed[0].phi, P(f3, {1, 0, 1}));
    EXPECT_EQ(ed[0].k, 1);
}

TEST(ElementaryDivisors, ProductAndLcmExhaustive) {
    for (std::uint32_t q : {2u, 3u}) {
        const Field f = fq_make(q);
        for (const auto& a : all_gl(f, 2)) {
            Poly prod = Poly::constant(f, f.one()), lcm = Poly::constant(f, f.one());
            for (const auto& ed : elementary_divisors(a)) {
                prod = prod * ed.phi.pow(static_cast<std::uint64_t>(ed.k));
                lcm = poly_lcm(lcm, ed.phi.pow(static_cast<std::uint64_t>(ed.k)));
            }
            EXPECT_EQ(prod, charpoly(a)) << a.to_string();
            EXPECT_EQ(lcm, minpoly(a)) << a.to_string();
        }
    }
}

TEST(Companion, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3), f5 = fq_make(5);
    EXPECT_EQ(companion(P(f3, {1, 0, 1})), M(f3, {{0, 2}, {1, 0}}));
    EXPECT_EQ(companion(P(f5, {-1, 1})), M(f5, {{1}}));
    EXPECT_EQ(companion(P(f2, {1, 1, 0, 1})), M(f2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}));
    EXPECT_THROW(companion(P(f3, {1, 2})), domain_error);
}

TEST(Companion, CharpolyIsPhi) {
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::size_t d = 1; d <= 3; ++d)
            for (const auto& phi : monic_polys(Field::of_order(q), d)) EXPECT_EQ(charpoly(companion(phi)), phi);
}

TEST(Hypercompanion, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3);
    EXPECT_EQ(hypercompanion(P(f2, {1, 1}), 2), M(f2, {{1, 0}, {1, 1}}));
    const Poly phi = P(f3, {1, 0, 1});
    EXPECT_EQ(hypercompanion(phi, 1), companion(phi));
    EXPECT_EQ(hypercompanion(phi, 2), M(f3, {{0, 2, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}}));
    EXPECT_THROW(hypercompanion(P(f3, {-1, 0, 1}), 1), domain_error);
    EXPECT_THROW(hypercompanion(phi, 0), domain_error);
}

TEST(Hypercompanion, CharpolyEqualsMinpolyEqualsPower) {
    for (std::uint64_t q : {2u, 3u, 4u})
        for (std::size_t d = 1; d <= 2; ++d)
            for (const auto& phi : irreducible_polys(Field::of_order(q), d))
                for (int k = 1; d * static_cast<std::size_t>(k) <= 4; ++k) {
                    const MatFq h = hypercompanion(phi, k);
                    EXPECT_EQ(charpoly(h), phi.pow(static_cast<std::uint64_t>(k)));
                    EXPECT_EQ(minpoly(h), phi.pow(static_cast<std::uint64_t>(k)));
                }
}

namespace {

void expect_block_form_agrees(const MatFq& a) {
    const MatFq h = hypercompanion_form(a);
    EXPECT_EQ(charpoly(h), charpoly(a)) << a.to_string();
    EXPECT_EQ(minpoly(h), minpoly(a)) << a.to_string();
    EXPECT_TRUE(cycle_type(tau_permutation(h)) == cycle_type(tau_permutation(a))) << a.to_string();
}

}  // namespace

TEST(BlockDiagonalForm, ExhaustiveGL2F3) {
    for (const auto& a : all_gl(fq_make(3), 2)) expect_block_form_agrees(a);
}

TEST(BlockDiagonalForm, SampledGL3F2AndGL2F5) {
    const Field f2 = fq_make(2), f5 = fq_make(5);
    for (std::size_t i = 0; i < 200; ++i) {
        Rng rng(0, i);
        expect_block_form_agrees(i % 2 == 0 ? random_gl(f2, 3, rng) : random_gl(f5, 2, rng));
    }
}

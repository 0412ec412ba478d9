#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "metacomm/cyclelaw.hpp"
#include "metacomm/random.hpp"

using namespace metacomm;

namespace {

using Cycles = std::map<std::size_t, std::size_t>;

MatFq M(const Field& f, std::vector<std::vector<std::int64_t>> rows) { return MatFq::from_ints(f, rows); }
Poly P(const Field& f, std::vector<std::int64_t> cs) { return Poly::from_ints(f, cs); }

// Points v with Qv a multiple of v, by scanning all scalars.
std::size_t eigen_points(const MatFq& q) {
    const Field& f = q.field();
    std::size_t n = 0;
    for (const auto& v : enumerate_projective(f, q.dim())) {
        const auto w = q.apply(v.coords);
        for (std::uint32_t c = 1; c < f.q(); ++c) {
            std::vector<FieldElem> cv;
            for (auto x : v.coords) cv.push_back(f.mul(FieldElem{c}, x));
            if (cv == w) {
                ++n;
                break;
            }
        }
    }
    return n;
}

// Least l with Q^l scalar, by plain repeated multiplication.
std::uint64_t scalar_order_oracle(const MatFq& q) {
    MatFq pw = q;
    for (std::uint64_t l = 1;; ++l) {
        bool scalar = true;
        for (std::size_t i = 0; i < q.dim(); ++i)
            for (std::size_t j = 0; j < q.dim(); ++j)
                if ((i != j && pw(i, j).code != 0) || (i == j && pw(i, i) != pw(0, 0))) scalar = false;
        if (scalar) return l;
        pw = pw * q;
    }
}

}  // namespace

TEST(FixedPoints, Examples) {
    const Field f3 = fq_make(3);
    EXPECT_EQ(fixed_point_count(MatFq::identity(f3, 2)), 4u);
    EXPECT_EQ(fixed_point_count(M(f3, {{1, 0}, {0, 2}})), 2u);
    EXPECT_EQ(fixed_point_count(M(f3, {{0, 2}, {1, 0}})), 0u);
    EXPECT_THROW(fixed_point_count(M(f3, {{1, 1}, {1, 1}})), domain_error);
    EXPECT_THROW(fixed_point_count(M(f3, {{1}})), domain_error);
}

TEST(FixedPoints, BreakdownRecordsBothMultiplicities) {
    const Field f2 = fq_make(2);
    const auto b = fixed_point_breakdown(M(f2, {{1, 0}, {1, 1}}));
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].geometric, 1u);
    EXPECT_EQ(b[0].algebraic, 2u);
    EXPECT_EQ(b[0].points, 1u);
}

TEST(FixedPoints, MatchEigenvectorScanExhaustive) {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}})
        for (const auto& a : all_gl(Field::of_order(q), m)) EXPECT_EQ(fixed_point_count(a), eigen_points(a)) << a.to_string();
}

TEST(FixedPoints, MatchEigenvectorScanSampled) {
    for (auto [q, m] : std::vector<std::pair<std::uint64_t, std::size_t>>{{5, 2}, {2, 3}, {3, 3}, {8, 2}, {9, 2}}) {
        const Field f = Field::of_order(q);
        for (std::size_t i = 0; i < 500 / 5; ++i) {
            Rng rng(1, q * 100 + i);
            const MatFq a = random_gl(f, m, rng);
            EXPECT_EQ(fixed_point_count(a), eigen_points(a)) << a.to_string();
        }
    }
}

TEST(SingleBlock, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3), f5 = fq_make(5);
    EXPECT_EQ(single_block_cycle_counts(P(f2, {1, 1}), 2).cycles, (Cycles{{1, 1}, {2, 1}}));
    EXPECT_EQ(single_block_cycle_counts(P(f3, {1, 0, 1}), 1).cycles, (Cycles{{2, 2}}));
    EXPECT_EQ(cycle_type(tau_permutation(M(f3, {{0, 2}, {1, 0}}))).cycles, (Cycles{{2, 2}}));
    EXPECT_EQ(single_block_cycle_counts(P(f5, {-1, 1}), 1).cycles, (Cycles{{1, 1}}));
    EXPECT_THROW(single_block_cycle_counts(P(f3, {-1, 0, 1}), 1), domain_error);
    EXPECT_THROW(single_block_cycle_counts(P(f3, {1, 1}), 0), domain_error);
}

TEST(SingleBlock, MatchesEnumerationIncludingF4AndF8) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u})
        for (std::size_t d = 1; d <= 3; ++d)
            for (const auto& phi : irreducible_polys(Field::of_order(q), d)) {
                if (phi[0].code == 0) continue;
                for (int k = 1; d * static_cast<std::size_t>(k) <= 3; ++k) {
                    const CycleType formula = single_block_cycle_counts(phi, k);
                    EXPECT_TRUE(formula == cycle_type(tau_permutation(hypercompanion(phi, k)))) << "q=" << q << " " << phi.to_string() << "^" << k;
                    EXPECT_EQ(formula.domain_size(), projective_size(q, static_cast<unsigned>(d) * static_cast<unsigned>(k)));
                }
            }
}

TEST(FjFast, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3);
    EXPECT_EQ(fj_fast(P(f2, {1, 1}), 2), 2u);
    EXPECT_EQ(fj_fast(P(f3, {1, 0, 1}), 1), poly_subexp(P(f3, {1, 0, 1})));
    EXPECT_EQ(fj_fast(P(f3, {1, 1}), 2), 3u);
    EXPECT_EQ(poly_subexp(P(f3, {1, 1}).pow(2)), 3u);
    EXPECT_THROW(fj_fast(P(f3, {1, 1}), 0), domain_error);
}

TEST(FjFast, MatchesSubexpOfPowers) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 9u})
        for (std::size_t d = 1; d <= 3; ++d) {
            if (ipow(q, static_cast<unsigned>(d)) > 1000) continue;
            for (const auto& phi : irreducible_polys(Field::of_order(q), d)) {
                if (phi[0].code == 0) continue;
                for (std::uint64_t j = 1; j <= 4; ++j) EXPECT_EQ(fj_fast(phi, j), poly_subexp(phi.pow(j))) << "q=" << q << " " << phi.to_string() << " j=" << j;
            }
        }
}

TEST(PglOrder, Examples) {
    const Field f2 = fq_make(2), f3 = fq_make(3), f5 = fq_make(5);
    EXPECT_EQ(pgl_order(MatFq::scalar(f5, 3, FieldElem{2})), 1u);
    EXPECT_EQ(pgl_order(M(f3, {{0, 2}, {1, 0}})), 2u);
    EXPECT_EQ(pgl_order(M(f2, {{1, 0}, {1, 1}})), 2u);
    EXPECT_THROW(pgl_order(M(f3, {{0, 0}, {1, 0}})), domain_error);
}

TEST(PglOrder, MatchesRepeatedMultiplication) {
    for (std::uint64_t q : {3u, 4u, 7u}) {
        const Field f = Field::of_order(q);
        Rng rng(2, q);
        for (int t = 0; t < 50; ++t) {
            const MatFq a = random_gl(f, 2 + rng.below(2), rng);
            EXPECT_EQ(pgl_order(a), scalar_order_oracle(a));
        }
    }
}

TEST(Gl2, Examples) {
    const Field f3 = fq_make(3), f5 = fq_make(5);
    auto r = gl2_cycle_structure(M(f3, {{0, 2}, {1, 0}}));
    EXPECT_EQ(r.type.cycles, (Cycles{{2, 2}}));
    EXPECT_EQ(r.ell, 2u);
    EXPECT_EQ(r.fixed_points(), 0u);
    EXPECT_EQ(r.source, CycleSource::formula_gl2);
    r = gl2_cycle_structure(MatFq::identity(f5, 2));
    EXPECT_EQ(r.type.cycles, (Cycles{{1, 6}}));
    EXPECT_EQ(r.ell, 1u);
    r = gl2_cycle_structure(M(f3, {{1, 0}, {0, 2}}));
    EXPECT_EQ(r.type.cycles, (Cycles{{1, 2}, {2, 1}}));
    EXPECT_EQ(r.ell, 2u);
    EXPECT_THROW(gl2_cycle_structure(MatFq::identity(f3, 3)), domain_error);
}

TEST(Gl2, ExhaustiveAgainstEnumeration) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
        for (const auto& a : all_gl(Field::of_order(q), 2)) {
            const CycleType brute = cycle_type(tau_permutation(a));
            EXPECT_TRUE(gl2_cycle_structure(a).type == brute) << a.to_string();
            std::size_t lengths = 0;
            for (auto [len, count] : brute.cycles) lengths += len > 1;
            EXPECT_LE(lengths, 1u);
        }
}

TEST(Uniform, Examples) {
    const Field f7 = fq_make(7), f5 = fq_make(5);
    auto r = uniform_cycle_check(M(f7, {{1, 0, 0}, {0, 2, 0}, {0, 0, 4}}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->ell, 3u);
    EXPECT_EQ(r->type.cycles, (Cycles{{1, 3}, {3, 18}}));
    EXPECT_EQ(r->source, CycleSource::formula_diagonalizable);
    r = uniform_cycle_check(MatFq::scalar(f5, 3, FieldElem{3}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->ell, 1u);
    EXPECT_EQ(r->type.cycles, (Cycles{{1, 31}}));
    r = uniform_cycle_check(M(f7, {{1, 0}, {0, 2}}));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->ell, 3u);
    EXPECT_FALSE(uniform_cycle_check(M(f5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})));
}

TEST(Uniform, NonDiagonalizableIsAnErrorNotAbsent) {
    EXPECT_THROW(uniform_cycle_check(M(fq_make(3), {{1, 0}, {1, 1}})), domain_error);
}

TEST(Uniform, IrreducibleCharpolyNeedsExtension) {
    // x^2 + 1 over F_3: eigenvalues live in F_9
    const Field f3 = fq_make(3);
    auto r = uniform_cycle_check(M(f3, {{0, 2}, {1, 0}}));
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->type == cycle_type(tau_permutation(M(f3, {{0, 2}, {1, 0}}))));
}

TEST(Uniform, EmbeddingIsARingMap) {
    const Field f4 = fq_make(2, 2), f16 = fq_make(2, 4);
    const auto img = embed_field(f4, f16);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            EXPECT_EQ(img[f4.mul({a}, {b}).code], f16.mul(img[a], img[b]));
            EXPECT_EQ(img[f4.add({a}, {b}).code], f16.add(img[a], img[b]));
        }
    EXPECT_THROW(embed_field(f4, fq_make(2, 3)), domain_error);
}

TEST(Dispatcher, Examples) {
    const Field f2 = fq_make(2), f5 = fq_make(5);
    auto r = cycle_structure(M(f2, {{1, 0}, {1, 1}}), true);
    EXPECT_EQ(r.source, CycleSource::formula_single_block);
    EXPECT_EQ(r.type.cycles, (Cycles{{1, 1}, {2, 1}}));
    r = cycle_structure(M(f5, {{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), true);
    EXPECT_EQ(r.source, CycleSource::brute_force);
    EXPECT_EQ(r.type.domain_size(), 31u);
    for (std::size_t m = 1; m <= 3; ++m) {
        r = cycle_structure(MatFq::identity(f5, m), true);
        EXPECT_EQ(r.type.cycles, (Cycles{{1, projective_size(5, static_cast<unsigned>(m))}}));
    }
    EXPECT_THROW(cycle_structure(MatFq(f5, 2)), domain_error);
}

TEST(Dispatcher, CrossCheckedOnRandomMatrices) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const Field f = Field::of_order(q);
        Rng rng(3, q);
        for (int t = 0; t < 40; ++t) {
            const MatFq a = random_gl(f, 2 + rng.below(2), rng);
            const CycleReport r = cycle_structure(a, true);
            EXPECT_EQ(r.type.domain_size(), projective_size(q, static_cast<unsigned>(a.dim())));
        }
    }
}

TEST(Mutation, FormulasChangeUnderFault) {
    const Field f3 = fq_make(3);
    const Mutation on{true};
    EXPECT_NE(fixed_point_count(MatFq::identity(f3, 2), on), 4u);
    const Field f2 = fq_make(2);
    EXPECT_FALSE(single_block_cycle_counts(P(f2, {1, 1}), 2, on) == single_block_cycle_counts(P(f2, {1, 1}), 2));
}

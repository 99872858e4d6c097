#include "cutglue/lorentz.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cutglue;

namespace {
Vector random_spacelike(std::mt19937_64& rng, std::size_t rank, int bound, const QuadraticForm& f) {
    std::uniform_int_distribution<int> c(-bound, bound);
    while (true) {
        Vector w;
        for (std::size_t i = 0; i < rank; ++i) w.emplace_back(c(rng));
        if (norm(f, w).sign() > 0) return w;
    }
}
} // namespace

TEST(Inner, Examples) {
    auto f = QuadraticForm::standard(6);
    auto v = make_vector({0, 1, 0, 0, 0, 0});
    auto w = make_vector({1, 2, 0, 0, 0, 0});
    EXPECT_EQ(inner(f, v, v), QuadFieldElement(1));
    EXPECT_EQ(inner(f, v, w), QuadFieldElement(2));
    EXPECT_EQ(inner(f, w, w), QuadFieldElement(3));
    EXPECT_THROW(inner(f, v, make_vector({1, 2})), std::invalid_argument);
}

TEST(Inner, BilinearAndSymmetric) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> c(-30, 30);
    auto f = QuadraticForm::sqrt_twisted(5, 3);
    for (int i = 0; i < 200; ++i) {
        Vector x, y, z;
        for (int k = 0; k < 5; ++k) {
            x.emplace_back(c(rng));
            y.emplace_back(Rational(c(rng), 7));
            z.push_back(QuadFieldElement(Rational(c(rng)), Rational(c(rng)), Integer(3)));
        }
        QuadFieldElement a(c(rng));
        Vector ax_plus_z;
        for (int k = 0; k < 5; ++k) ax_plus_z.push_back(a * x[k] + z[k]);
        EXPECT_EQ(inner(f, x, y), inner(f, y, x));
        EXPECT_EQ(inner(f, ax_plus_z, y), a * inner(f, x, y) + inner(f, z, y));
    }
}

TEST(Signature, Examples) {
    EXPECT_EQ(signature(QuadraticForm::standard(6), Embedding::principal), (Signature{5, 1}));
    auto twisted = QuadraticForm::sqrt_twisted(6, 2);
    EXPECT_EQ(signature(twisted, Embedding::conjugate), (Signature{6, 0}));
    EXPECT_EQ(signature(twisted, Embedding::principal), (Signature{5, 1}));
}

TEST(Admissibility, Examples) {
    for (std::size_t r = 5; r <= 9; ++r) EXPECT_TRUE(is_admissible(QuadraticForm::standard(r)).verified());
    EXPECT_TRUE(is_admissible(QuadraticForm::sqrt_twisted(6, 2)).verified());
    std::vector<QuadFieldElement> c(6, QuadFieldElement(1));
    c[0] = QuadFieldElement::sqrt_of(2);
    auto cert = is_admissible(QuadraticForm(c));
    EXPECT_EQ(cert.verdict, Verdict::failed);
    EXPECT_EQ(cert.at("principal_positives"), QuadFieldElement(6));
    EXPECT_THROW(is_admissible(QuadraticForm::standard(4)), std::invalid_argument);
}

TEST(QuadraticForm, RejectsNonDiagonalGram) {
    SquareMatrix g = SquareMatrix::identity(3);
    EXPECT_NO_THROW(QuadraticForm::from_gram(g));
    g(0, 1) = QuadFieldElement(1);
    EXPECT_THROW(QuadraticForm::from_gram(g), std::invalid_argument);
    EXPECT_THROW(QuadraticForm({QuadFieldElement(1), QuadFieldElement(0)}), std::invalid_argument);
}

TEST(Reflection, Examples) {
    auto f6 = QuadraticForm::standard(6);
    auto rv = reflection(f6, make_vector({0, 1, 0, 0, 0, 0}));
    std::vector<QuadFieldElement> diag{1, -1, 1, 1, 1, 1};
    EXPECT_EQ(rv, SquareMatrix::diagonal(diag));

    auto rw = reflection(f6, make_vector({1, 2, 0, 0, 0, 0}));
    EXPECT_EQ(rw(0, 0), QuadFieldElement(Rational(5, 3)));
    EXPECT_EQ(rw(0, 1), QuadFieldElement(Rational(-4, 3)));
    EXPECT_EQ(rw(1, 0), QuadFieldElement(Rational(4, 3)));
    EXPECT_EQ(rw(1, 1), QuadFieldElement(Rational(-5, 3)));
    for (std::size_t i = 2; i < 6; ++i) EXPECT_EQ(rw(i, i), QuadFieldElement(1));

    auto f5 = QuadraticForm::standard(5);
    auto r5 = reflection(f5, make_vector({1, 3, 0, 0, 0}));
    EXPECT_EQ(r5(0, 0), QuadFieldElement(Rational(5, 4)));
    EXPECT_EQ(r5(0, 1), QuadFieldElement(Rational(-3, 4)));
    EXPECT_EQ(r5(1, 0), QuadFieldElement(Rational(3, 4)));
    EXPECT_EQ(r5(1, 1), QuadFieldElement(Rational(-5, 4)));
    EXPECT_EQ(r5 * r5, SquareMatrix::identity(5));

    EXPECT_THROW(reflection(f5, make_vector({1, 1, 0, 0, 0})), std::invalid_argument);
}

TEST(Reflection, InvariantsOnRandomSpacelikeVectors) {
    std::mt19937_64 rng(17);
    int count = 0;
    for (std::size_t r = 3; r <= 9; ++r) {
        auto f = QuadraticForm::standard(r);
        for (int i = 0; i < 150; ++i, ++count) {
            auto w = random_spacelike(rng, r, 50, f);
            auto rho = reflection(f, w);
            ASSERT_EQ(rho * rho, SquareMatrix::identity(r));
            ASSERT_TRUE(is_f_orthogonal(f, rho));
            ASSERT_EQ(determinant(rho), QuadFieldElement(-1));
            auto rw = rho * std::span<const QuadFieldElement>(w);
            for (std::size_t k = 0; k < r; ++k) ASSERT_EQ(rw[k], -w[k]);
            // fixes a vector orthogonal to w: x = <w,e_j> e_i - <w,e_i> e_j
            Vector x(r);
            x[0] = w[1] * f.coefficient(1);
            x[1] = -(w[0] * f.coefficient(0));
            ASSERT_TRUE(inner(f, x, w).is_zero());
            auto rx = rho * std::span<const QuadFieldElement>(x);
            ASSERT_EQ(rx, x);
        }
    }
    EXPECT_GE(count, 1000);
}

TEST(Orthogonality, Examples) {
    auto f = QuadraticForm::standard(6);
    EXPECT_TRUE(is_f_orthogonal(f, SquareMatrix::identity(6)));
    auto rw = reflection(f, make_vector({1, 2, 0, 0, 0, 0}));
    auto check = is_f_orthogonal(f, rw);
    EXPECT_TRUE(check);
    EXPECT_EQ(check.g00_sign, 1);
    std::vector<QuadFieldElement> diag{2, 1, 1, 1, 1, 1};
    EXPECT_FALSE(is_f_orthogonal(f, SquareMatrix::diagonal(diag)));
}

TEST(Disjointness, Examples) {
    auto f = QuadraticForm::standard(6);
    auto v = make_vector({0, 1, 0, 0, 0, 0});
    auto w = make_vector({1, 2, 0, 0, 0, 0});
    auto d = hyperplanes_disjoint(f, v, w);
    EXPECT_EQ(d.relation, HyperplaneRelation::disjoint);
    EXPECT_FALSE(d.tangent);
    EXPECT_EQ(hyperplanes_disjoint(f, v, v).relation, HyperplaneRelation::equal);
    EXPECT_EQ(hyperplanes_disjoint(f, v, make_vector({0, 1, 1, 0, 0, 0})).relation, HyperplaneRelation::intersecting);
    EXPECT_THROW(hyperplanes_disjoint(f, v, make_vector({1, 0, 0, 0, 0, 0})), std::invalid_argument);

    // <v,w>^2 = <v,v><w,w> = 1 with w = (1,1,1,0,...): tangent at infinity
    auto t = hyperplanes_disjoint(f, v, make_vector({1, 1, 1, 0, 0, 0}));
    EXPECT_EQ(t.relation, HyperplaneRelation::disjoint);
    EXPECT_TRUE(t.tangent);
}

TEST(Distance, Examples) {
    auto f = QuadraticForm::standard(6);
    auto v = make_vector({0, 1, 0, 0, 0, 0});
    EXPECT_EQ(hyperplane_distance(f, v, v), 0.0);
    EXPECT_NEAR(hyperplane_distance(f, v, make_vector({1, 2, 0, 0, 0, 0})), std::acosh(2 / std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(hyperplane_distance(f, v, make_vector({1, 2, 0, 0, 0, 0})), 0.5493, 1e-4);
    EXPECT_EQ(hyperplane_distance(f, v, make_vector({1, 1, 1, 0, 0, 0})), 0.0);
    EXPECT_THROW(hyperplane_distance(f, v, make_vector({0, 1, 1, 0, 0, 0})), std::invalid_argument);
}

TEST(Disjointness, ScaleInvariantAndConsistentWithDistance) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> s(1, 9);
    for (std::size_t r = 3; r <= 7; ++r) {
        auto f = QuadraticForm::standard(r);
        for (int i = 0; i < 100; ++i) {
            auto v = random_spacelike(rng, r, 4, f);
            auto w = random_spacelike(rng, r, 4, f);
            auto base = hyperplanes_disjoint(f, v, w);
            Vector sv = v, sw = w;
            QuadFieldElement a(s(rng)), b(-s(rng));
            for (auto& e : sv) e *= a;
            for (auto& e : sw) e *= b;
            auto scaled = hyperplanes_disjoint(f, sv, sw);
            EXPECT_EQ(base.relation, scaled.relation);
            EXPECT_EQ(base.tangent, scaled.tangent);
            EXPECT_EQ(base.relation == HyperplaneRelation::equal, proportional(v, w));
            if (base.relation == HyperplaneRelation::disjoint && !base.tangent) {
                EXPECT_GT(hyperplane_distance(f, v, w), 0.0);
            }
        }
    }
}

TEST(DenominatorRing, Examples) {
    auto f6 = QuadraticForm::standard(6);
    std::vector<SquareMatrix> id{SquareMatrix::identity(6)};
    EXPECT_EQ(denominator_ring(id), SubringOfQ());

    std::vector<SquareMatrix> both{reflection(f6, make_vector({0, 1, 0, 0, 0, 0})),
                                   reflection(f6, make_vector({1, 2, 0, 0, 0, 0}))};
    EXPECT_EQ(denominator_ring(both), SubringOfQ(3));

    auto f5 = QuadraticForm::standard(5);
    std::vector<SquareMatrix> r5{reflection(f5, make_vector({1, 3, 0, 0, 0}))};
    EXPECT_EQ(denominator_ring(r5), SubringOfQ(2));

    auto twisted = QuadraticForm::sqrt_twisted(6, 5);
    std::vector<SquareMatrix> irr{reflection(twisted, make_vector({1, 2, 0, 0, 0, 0}))};
    EXPECT_THROW(denominator_ring(irr), std::invalid_argument);
}

TEST(DenominatorRing, MonotoneUnderInclusion) {
    std::mt19937_64 rng(31);
    auto f = QuadraticForm::standard(5);
    for (int i = 0; i < 50; ++i) {
        std::vector<SquareMatrix> one{reflection(f, random_spacelike(rng, 5, 12, f))};
        auto two = one;
        two.push_back(reflection(f, random_spacelike(rng, 5, 12, f)));
        EXPECT_TRUE(denominator_ring(two).contains(denominator_ring(one)));
    }
}

#include "cutglue/quadratic_field.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace cutglue;

namespace {
QuadFieldElement q(Rational x, Rational y, int d) { return {std::move(x), std::move(y), Integer(d)}; }
} // namespace

TEST(QuadField, TraceNorm) {
    auto [t1, n1] = field_trace_norm(q(2, 0, 5), 5);
    EXPECT_EQ(t1, 4);
    EXPECT_EQ(n1, 4);
    auto [t2, n2] = field_trace_norm(q(0, 1, 5));
    EXPECT_EQ(t2, 0);
    EXPECT_EQ(n2, -5);
    auto [t3, n3] = field_trace_norm(q(Rational(256, 11), Rational(64, 11), 5));
    EXPECT_EQ(t3, Rational(512, 11));
    EXPECT_EQ(n3, Rational(45056, 121));
}

TEST(QuadField, RationalsCollapseToDegenerateField) {
    auto s = QuadFieldElement::sqrt_of(5);
    auto two = s * s - QuadFieldElement(3);
    EXPECT_TRUE(two.is_rational());
    EXPECT_EQ(two, QuadFieldElement(2));
    EXPECT_EQ(two.d(), 1);
}

TEST(QuadField, RejectsBadFields) {
    EXPECT_THROW(q(1, 1, 12), std::invalid_argument);
    EXPECT_THROW(q(1, 1, 1), std::invalid_argument);
    EXPECT_THROW(QuadFieldElement::sqrt_of(2) + QuadFieldElement::sqrt_of(3), std::domain_error);
    EXPECT_THROW(QuadFieldElement(1) / QuadFieldElement(0), std::domain_error);
}

TEST(QuadField, Division) {
    auto x = q(4, -1, 5);  // 4 - sqrt5, norm 11
    auto inv = QuadFieldElement(1) / x;
    EXPECT_EQ(inv, q(Rational(4, 11), Rational(1, 11), 5));
    EXPECT_EQ(inv * x, QuadFieldElement(1));
}

TEST(QuadField, ExactSigns) {
    EXPECT_EQ(q(-1, 0, 2).sign(), -1);
    EXPECT_EQ(QuadFieldElement::sqrt_of(2).sign(Embedding::conjugate), -1);
    EXPECT_EQ(q(2, -1, 2).sign(), 1);    // 2 - 1.414
    EXPECT_EQ(q(1, -1, 2).sign(), -1);   // 1 - 1.414
    EXPECT_EQ(q(1, -1, 2).sign(Embedding::conjugate), 1);
    EXPECT_EQ(q(-3, 2, 2).sign(), -1);   // -3 + 2.83
    EXPECT_EQ(QuadFieldElement().sign(), 0);
}

TEST(QuadField, AlgebraicIntegers) {
    EXPECT_FALSE(is_algebraic_integer(QuadFieldElement(Rational(22, 3))));
    EXPECT_TRUE(is_algebraic_integer(q(Rational(1, 2), Rational(1, 2), 5)));   // golden ratio
    EXPECT_FALSE(is_algebraic_integer(q(Rational(1, 2), Rational(1, 2), 3)));  // d = 3 mod 4
    EXPECT_TRUE(is_algebraic_integer(q(16, 8, 2)));                              // 8(2 + sqrt2)
    EXPECT_TRUE(is_algebraic_integer(QuadFieldElement(-7)));
}

TEST(QuadField, EmbeddingsAreHomomorphisms) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> h(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1'000);
    for (int d : {2, 3, 5, 7, 11, 30}) {
        for (int i = 0; i < 500; ++i) {
            auto a = q(Rational(h(rng), den(rng)), Rational(h(rng), den(rng)), d);
            auto b = q(Rational(h(rng), den(rng)), Rational(h(rng), den(rng)), d);
            for (auto e : {Embedding::principal, Embedding::conjugate}) {
                double sum = (a + b).to_double(e), prod = (a * b).to_double(e);
                double fa = a.to_double(e), fb = b.to_double(e);
                double scale_sum = std::abs(fa) + std::abs(fb) + 1e-300;
                double scale_prod = std::abs(fa * fb) + 1e-300;
                EXPECT_LE(std::abs(sum - (fa + fb)) / scale_sum, 1e-12);
                // exact product vs float product can suffer cancellation in x*x' + d*y*y'
                double bound = (std::abs(cutglue::to_double(a.x()) * cutglue::to_double(b.x())) +
                                d * std::abs(cutglue::to_double(a.y()) * cutglue::to_double(b.y())) +
                                std::sqrt(d) * (std::abs(cutglue::to_double(a.x()) * cutglue::to_double(b.y())) +
                                                std::abs(cutglue::to_double(a.y()) * cutglue::to_double(b.x()))));
                EXPECT_LE(std::abs(prod - fa * fb), 1e-12 * std::max(bound, scale_prod));
            }
        }
    }
}

TEST(QuadField, NormIsMultiplicative) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> h(-5000, 5000);
    for (int d : {2, 5, 6, 13}) {
        for (int i = 0; i < 300; ++i) {
            auto a = q(Rational(h(rng), 1 + std::abs(h(rng))), h(rng), d);
            auto b = q(h(rng), Rational(h(rng), 1 + std::abs(h(rng))), d);
            EXPECT_EQ(field_trace_norm(a * b, d).norm, field_trace_norm(a, d).norm * field_trace_norm(b, d).norm);
        }
    }
}

TEST(QuadField, Printing) {
    EXPECT_EQ(q(4, -1, 5).str(), "4 - sqrt(5)");
    EXPECT_EQ(q(0, Rational(64, 11), 5).str(), "64/11*sqrt(5)");
    EXPECT_EQ(QuadFieldElement(Rational(-61, 3)).str(), "-61/3");
}

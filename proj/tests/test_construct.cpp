#include "cutglue/construct.hpp"
#include "cutglue/recheck.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cutglue;

namespace {
std::vector<Integer> as_integers(const Vector& v) {
    std::vector<Integer> out;
    for (const auto& e : v) out.push_back(num(e.as_rational()));
    return out;
}
} // namespace

TEST(BuildLevel, Examples) {
    EXPECT_EQ(build_level_b(5, 3), 3);
    EXPECT_EQ(build_level_b(4, 6), 72);
    EXPECT_EQ(build_level_b(4, 2), 8);
    EXPECT_THROW(build_level_b(4, 12), std::invalid_argument);
    EXPECT_THROW(build_level_b(3, 2), std::invalid_argument);
}

TEST(ChooseW1, Examples) {
    EXPECT_EQ(choose_w1(3), 2);
    EXPECT_EQ(choose_w1(72), 11);
    EXPECT_EQ(choose_w1(8), 3);
}

TEST(RepresentByHyperbolic, Examples) {
    EXPECT_EQ(represent_by_hyperbolic(0, 4), (std::vector<Integer>{0, 0, 0, 0}));
    EXPECT_EQ(represent_by_hyperbolic(-49, 4), (std::vector<Integer>{25, 24, 0, 0}));
    EXPECT_EQ(represent_by_hyperbolic(-4, 4), (std::vector<Integer>{3, 2, 1, 0}));
    EXPECT_THROW(represent_by_hyperbolic(5, 2), std::invalid_argument);
}

TEST(RepresentByHyperbolic, SolvesEquationForRandomTargets) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> k(-1'000'000, 1'000'000);
    for (int i = 0; i < 5000; ++i) {
        Integer t = k(rng);
        auto x = represent_by_hyperbolic(t, 3 + i % 5);
        Integer s = -x[0] * x[0];
        for (std::size_t j = 1; j < x.size(); ++j) s += x[j] * x[j];
        ASSERT_EQ(s, t);
        for (const auto& e : x) ASSERT_GE(e, 0);
    }
}

TEST(ConstructGammaD, Examples) {
    auto c53 = construct_gamma_d(5, 3);
    EXPECT_EQ(as_integers(c53.config.w), (std::vector<Integer>{1, 2, 0, 0, 0, 0}));
    EXPECT_EQ(c53.bounds.lower, SubringOfQ(3));

    auto c46 = construct_gamma_d(4, 6);
    EXPECT_EQ(as_integers(c46.config.w), (std::vector<Integer>{25, 11, 24, 0, 0}));
    EXPECT_EQ(c46.config.norm_w, QuadFieldElement(72));
    EXPECT_EQ(c46.bounds.lower, SubringOfQ(6));

    auto c42 = construct_gamma_d(4, 2);
    EXPECT_EQ(as_integers(c42.config.w), (std::vector<Integer>{1, 3, 0, 0, 0}));
    EXPECT_EQ(c42.config.norm_w, QuadFieldElement(8));
    EXPECT_EQ(c42.bounds.lower, SubringOfQ(2));

    EXPECT_THROW(construct_gamma_d(4, 12), std::invalid_argument);
}

TEST(ConstructGammaD, SweepInvariants) {
    for (unsigned n = 4; n <= 8; ++n) {
        std::vector<SubringOfQ> rings;
        for (int d = 2; d <= 30; ++d) {
            if (!is_squarefree(d)) continue;
            auto c = construct_gamma_d(n, d);
            Integer b = c.b;
            Integer w1 = num(c.config.w1.as_rational());
            EXPECT_EQ(c.config.norm_w, QuadFieldElement(b));
            EXPECT_EQ(gcd(w1, b), 1);
            EXPECT_GT(w1 * w1, b);
            EXPECT_TRUE(c.bounds.pinched);
            EXPECT_EQ(c.bounds.lower, SubringOfQ(d));
            EXPECT_EQ(canonicalize(Rational(Integer(4 * (n - 1)), b)), SubringOfQ(d));
            EXPECT_EQ(canonicalize(Rational(Integer(2), b)), SubringOfQ(d));
            EXPECT_TRUE(c.all_verified());
            for (const auto& cert : c.certificates) EXPECT_EQ(recheck(cert), cert.verdict);
            for (const auto& r : rings) EXPECT_FALSE(r == c.bounds.lower);
            rings.push_back(c.bounds.lower);
        }
    }
}

TEST(ConstructQuadfield, Examples) {
    auto q = construct_quadfield(5, 5, 2, 0);
    EXPECT_EQ(q.config.norm_w, QuadFieldElement(4) - QuadFieldElement::sqrt_of(5));
    EXPECT_EQ(q.xi, QuadFieldElement(Rational(256, 11), Rational(64, 11), Integer(5)));
    EXPECT_EQ(q.integrality.at("trace"), QuadFieldElement(Rational(512, 11)));
    EXPECT_EQ(q.integrality.verdict, Verdict::verified);

    auto bad = construct_quadfield(5, 2, 1, 1);
    EXPECT_EQ(bad.xi, QuadFieldElement(8) * (QuadFieldElement(2) + QuadFieldElement::sqrt_of(2)));
    EXPECT_EQ(bad.integrality.verdict, Verdict::failed);

    auto q6 = construct_quadfield(6, 2, 2, 1);
    EXPECT_EQ(q6.config.norm_w, QuadFieldElement(5) - QuadFieldElement::sqrt_of(2));
    EXPECT_EQ(field_trace_norm(q6.config.norm_w, 2).norm, 23);
    EXPECT_EQ(q6.xi, QuadFieldElement(Rational(400, 23), Rational(80, 23), Integer(2)));
    EXPECT_EQ(q6.integrality.verdict, Verdict::verified);

    EXPECT_THROW(construct_quadfield(5, 2, 1, 2), std::invalid_argument);  // b >= sqrt d
    EXPECT_THROW(construct_quadfield(5, 5, 1, 0), std::invalid_argument);  // a^2 + b < sqrt d
    EXPECT_THROW(construct_quadfield(4, 5, 2, 0), std::invalid_argument);
    EXPECT_THROW(construct_quadfield(5, 4, 2, 0), std::invalid_argument);
}

TEST(ConstructQuadfield, InvariantsOverSearchRange) {
    for (int d : {2, 3, 5, 6, 7, 10, 11, 13}) {
        for (unsigned n = 5; n <= 7; ++n)
            for (int a = 0; a <= 4; ++a)
                for (int b = 0; b * b < d; ++b) {
                    if ((a * a + b) * (a * a + b) < d) continue;
                    auto q = construct_quadfield(n, d, a, b);
                    EXPECT_TRUE(is_admissible(q.config.form).verified());
                    EXPECT_GT(q.config.norm_w.sign(), 0);
                    EXPECT_GE(compare(q.config.w1 * q.config.w1, q.config.norm_w), 0);
                    EXPECT_EQ(recheck(q.integrality), q.integrality.verdict);
                }
    }
}

TEST(SearchQuadfield, Examples) {
    auto found = search_quadfield(5, 5, 3);
    EXPECT_NE(std::find(found.begin(), found.end(), std::pair<Integer, Integer>{2, 0}), found.end());
    auto two = search_quadfield(5, 2, 1);
    EXPECT_EQ(std::find(two.begin(), two.end(), std::pair<Integer, Integer>{1, 1}), two.end());
    EXPECT_TRUE(search_quadfield(5, 2, 0).empty());
}

#include "cutglue/construct.hpp"
#include "cutglue/recheck.hpp"
#include "cutglue/serialize.hpp"

#include <gtest/gtest.h>

using namespace cutglue;

namespace {
void expect_round_trip(const Certificate& c) {
    json j = to_json(c);
    Certificate back = certificate_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.statement, c.statement);
    EXPECT_EQ(back.verdict, c.verdict);
    EXPECT_EQ(back.method_tags, c.method_tags);
    EXPECT_EQ(back.note, c.note);
    ASSERT_EQ(back.witnesses.size(), c.witnesses.size());
    for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
        EXPECT_EQ(back.witnesses[i].first, c.witnesses[i].first);
        EXPECT_EQ(back.witnesses[i].second, c.witnesses[i].second);
    }
    EXPECT_EQ(recheck(back), c.verdict) << to_string(c.statement) << ": " << j.dump();
}
} // namespace

TEST(Serialize, ExactValues) {
    EXPECT_EQ(to_json(QuadFieldElement(Rational(-7, 3))).dump(), R"({"num":"-7","den":"3"})");
    QuadFieldElement q(Rational(4), Rational(-1), Integer(5));
    EXPECT_EQ(to_json(q).dump(), R"({"x":{"num":"4","den":"1"},"y":{"num":"-1","den":"1"},"d":"5"})");
    EXPECT_EQ(quad_from_json(to_json(q)), q);
    Integer big("123456789012345678901234567890");
    EXPECT_EQ(rational_from_json(to_json(Rational(big, big + 1))), Rational(big, big + 1));
    EXPECT_THROW(rational_from_json(json{{"num", "1"}, {"den", "0"}}), std::invalid_argument);
}

TEST(Serialize, ConstructionCertificatesRoundTripAndRecheck) {
    for (unsigned n = 4; n <= 7; ++n)
        for (int d : {2, 3, 5, 6, 7, 10, 30})
            for (const auto& c : construct_gamma_d(n, d).certificates) expect_round_trip(c);
}

TEST(Serialize, CertifyAndQuadfieldCertificatesRoundTrip) {
    std::vector<std::vector<Integer>> ws{{1, 2, 0, 0, 0, 0, 0, 0}, {3, 4, 1, 1, 1, 0, 0, 0}, {2, 5, 1, 1, 1, 0, 0, 0}};
    for (auto w : ws) {
        auto c = make_rational_configuration(7, w);
        for (const auto& cert : certify_configuration(c)) expect_round_trip(cert);
    }
    for (auto [d, a, b] : {std::tuple{5, 2, 0}, {2, 1, 1}, {2, 2, 1}, {7, 3, 2}, {13, 2, 1}}) {
        auto q = construct_quadfield(6, d, a, b);
        expect_round_trip(q.integrality);
        for (const auto& cert : certify_configuration(q.config)) expect_round_trip(cert);
    }
}

TEST(Serialize, TamperedWitnessChangesRecheck) {
    auto cert = construct_gamma_d(5, 3).certificates;
    for (auto& c : cert) {
        if (c.statement != Statement::nonarithmeticity) continue;
        json j = to_json(c);
        j["witnesses"]["tr_g"] = to_json(QuadFieldElement(7));
        j["witnesses"]["tr_ad"] = to_json(QuadFieldElement(20));
        j["witnesses"]["residue_generator"] = to_json(QuadFieldElement(21));
        for (auto& [k, v] : j["witnesses"].items())
            if (k.rfind("charpoly_c", 0) == 0) v = to_json(QuadFieldElement(1));
        EXPECT_EQ(recheck(certificate_from_json(j)), Verdict::inconclusive);
    }
}

TEST(Serialize, CountResultCarriesMethodAndFlag) {
    auto r = count_orthogonal_mod(std::vector<Integer>{-1, 1, 1}, 9);
    json j = to_json(r);
    EXPECT_EQ(j["value"], "1296");
    EXPECT_EQ(j["method"], "odd-lifting");
    EXPECT_EQ(j["verified"], true);
}

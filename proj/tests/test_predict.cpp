#include <doctest.h>

#include <random>

#include "asnp/minimizers.hpp"
#include "asnp/padic.hpp"
#include "asnp/predict.hpp"
#include "oracles.hpp"

using namespace asnp;

namespace {

mpq_class q_of(long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("predict");

TEST_CASE("prediction dispatch: stated examples") {
    // support {7} over F_2: the p^k - 1 case
    SlopePrediction pred = predict(make_curve_spec(2, 1, {{7, 1}}));
    CHECK(pred.basis == PredictionBasis::PkMinusOne);
    CHECK(*pred.exact_slope == q_of(1, 3));
    CHECK(*pred.multiplicity_exact == 3);

    // support {3} over F_5: strict, since 3 < 5 and 3 does not divide 4
    pred = predict(make_curve_spec(5, 1, {{3, 1}}));
    CHECK(pred.basis == PredictionBasis::UniqueNotSymmetric);
    CHECK(pred.strict);
    CHECK_FALSE(pred.exact_slope.has_value());
    CHECK(pred.lower_bound == q_of(1, 3));

    // support {26, 6} over F_5: two elements of weight 2
    pred = predict(make_curve_spec(5, 1, {{26, 1}, {6, 1}}));
    CHECK(pred.basis == PredictionBasis::NonUniqueMax);
    CHECK(pred.lower_bound == q_of(1, 2));
    CHECK_FALSE(pred.exact_slope.has_value());

    // unique symmetric: x^26 + x^3 over F_5
    pred = predict(make_curve_spec(5, 1, {{26, 1}, {3, 1}}));
    CHECK(pred.basis == PredictionBasis::UniqueSymmetric);
    CHECK(*pred.exact_slope == q_of(1, 2));
    REQUIRE(pred.multiplicity_interval.has_value());
    CHECK(pred.multiplicity_interval->first == (2 - 1) * 4);   // (k-e)(p-1)
    CHECK(pred.multiplicity_interval->second == 26 * 4);       // nu(p-1)
    CHECK(pred.certificate->w == 12);

    // weight divides p-1 fallback fires when the search bound is too small
    pred = predict(make_curve_spec(5, 1, {{4, 1}, {3, 1}}), 0);
    CHECK(pred.basis == PredictionBasis::UniqueSymmetric);  // found within default bound
    CHECK(*pred.exact_slope == q_of(1, 4));

    CHECK_THROWS_AS(predict(normalize(2, 1, {{2, 1}})), std::invalid_argument);  // d < 3
}

TEST_CASE("weight-divides fallback constructs a checkable witness") {
    // detect is bounded away from finding anything with k_max = 1, but
    // s_5(31) = 3 does not divide 4; use nu with weight dividing p-1:
    // s_5(26) = 2 | 4 and the minimal witness needs k = 2 > k_max = 1.
    SlopePrediction pred = predict(make_curve_spec(5, 1, {{26, 1}, {3, 1}}), 1);
    CHECK(pred.basis == PredictionBasis::WeightDividesPminus1);
    CHECK(*pred.exact_slope == q_of(1, 2));
    REQUIRE(pred.certificate.has_value());
    CHECK(check_certificate(*pred.certificate));
    CHECK_FALSE(pred.multiplicity_exact.has_value());
}

TEST_CASE("inconclusive stays inconclusive") {
    // s_3(5) = 3 does not divide 2, 5 > 3: bounded search cannot disprove
    SlopePrediction pred = predict(make_curve_spec(3, 1, {{5, 1}}));
    CHECK(pred.basis == PredictionBasis::LowerBoundOnly);
    CHECK_FALSE(pred.exact_slope.has_value());
    CHECK_FALSE(pred.strict);
}

TEST_CASE("verification: x^7 over F_2 passes every claim") {
    VerificationReport report = verify(make_curve_spec(2, 1, {{7, 1}}));
    CHECK(report.zeta_ran);
    CHECK(report.all_pass());
    auto [slope, mult] = first_slope(*report.polygon);
    CHECK(slope == q_of(1, 3));
    CHECK(mult == 3);
    bool saw_ppp = false;
    for (const auto& c : report.claims) {
        if (c.name == "supersingular-classification") {
            saw_ppp = true;
            CHECK(c.status == "PASS");
        }
    }
    CHECK(saw_ppp);
    CHECK_FALSE(is_supersingular(*report.polygon));
}

TEST_CASE("verification: the supersingular exception (p,k) = (2,2)") {
    VerificationReport report = verify(make_curve_spec(2, 1, {{3, 1}}));
    CHECK(report.all_pass());
    CHECK(is_supersingular(*report.polygon));
    auto [slope, mult] = first_slope(*report.polygon);
    CHECK(slope == q_of(1, 2));
    CHECK(mult == 2);
}

TEST_CASE("verification: strictness for y^5 - y = x^3") {
    VerificationReport report = verify(make_curve_spec(5, 1, {{3, 1}}));
    CHECK(report.zeta_ran);
    CHECK(report.all_pass());
    auto [slope, mult] = first_slope(*report.polygon);
    CHECK(slope > q_of(1, 3));
    (void)mult;
}

TEST_CASE("verification: classical case y^5 - y = x^4") {
    VerificationReport report = verify(make_curve_spec(5, 1, {{4, 1}}));
    CHECK(report.all_pass());
    CHECK(first_slope(*report.polygon).first == q_of(1, 4));
}

TEST_CASE("guard skip keeps the prediction") {
    CurveSpec spec = make_curve_spec(7, 1, {{4, 1}});  // g = 9, 7^9 ~ 4e7
    CountOptions tiny;
    tiny.field_size_guard = 1 << 20;
    VerificationReport report = verify(spec, 0, tiny);
    CHECK_FALSE(report.zeta_ran);
    CHECK(report.prediction.strict);
    CHECK(report.prediction.basis == PredictionBasis::UniqueNotSymmetric);
    REQUIRE(report.claims.size() == 1);
    CHECK(report.claims[0].status == "SKIPPED");
    CHECK(report.all_pass());  // no FAIL entries
}

TEST_CASE("exactness iff symmetry on the desk corpus") {
    struct Row {
        CurveSpec spec;
        bool symmetric;
    };
    std::vector<Row> corpus{
        {make_curve_spec(2, 1, {{5, 1}}), true},          // (101)_2
        {make_curve_spec(2, 1, {{9, 1}, {7, 1}}), true},  // nu = 7
        {make_curve_spec(5, 1, {{3, 1}}), false},
        {make_curve_spec(5, 1, {{4, 1}, {3, 1}}), true},
        {make_curve_spec(3, 1, {{4, 1}}), true},
        {make_curve_spec(7, 1, {{3, 1}}), true},          // 3 | 6
    };
    for (const Row& row : corpus) {
        VerificationReport report = verify(row.spec);
        REQUIRE(report.zeta_ran);
        CHECK(report.all_pass());
        auto [slope, mult] = first_slope(*report.polygon);
        if (row.symmetric) {
            CHECK(slope == report.prediction.lower_bound);
        } else {
            CHECK(slope > report.prediction.lower_bound);
        }
        (void)mult;
    }
}

TEST_CASE("multiplicity containment for symmetric unique-max curves") {
    for (auto spec : {make_curve_spec(2, 1, {{5, 1}}),      // nu = (101)_2
                      make_curve_spec(3, 1, {{10, 1}})}) {  // nu = (101)_3
        VerificationReport report = verify(spec);
        REQUIRE(report.zeta_ran);
        CHECK(report.all_pass());
        REQUIRE(report.prediction.multiplicity_interval.has_value());
        auto [lo, hi] = *report.prediction.multiplicity_interval;
        auto mult = first_slope(*report.polygon).second;
        CHECK(lo <= mult);
        CHECK(mult <= hi);
    }
}

TEST_CASE("the first-slope multiplicity matches (p-1) times the minimizer height") {
    // for nu = p^k - 1 curves, going through the coin set on Supp(f) with a = k
    for (auto [p, k, terms] :
         std::vector<std::tuple<std::uint64_t, std::uint32_t,
                                std::map<std::uint64_t, FieldContext::Elem>>>{
             {2, 2, {{3, 1}}},
             {2, 3, {{7, 1}}},
             {2, 3, {{9, 1}, {7, 1}}},
             {3, 2, {{8, 1}}}}) {
        CurveSpec spec = make_curve_spec(p, 1, terms);
        VerificationReport report = verify(spec);
        REQUIRE(report.zeta_ran);
        std::uint64_t t1 = first_slope(*report.polygon).second;
        CoinSet c = make_coin_set(p, k, spec.support());
        CHECK(t1 == (p - 1) * height(c));
    }
}

TEST_CASE("affine substitution leaves the verified polygon unchanged") {
    std::mt19937_64 rng(59);
    FieldContext f4 = make_field(2, 2);
    std::map<std::uint64_t, FieldContext::Elem> f{{7, 1}, {3, 2}};
    CurveSpec spec = make_curve_spec(2, 2, f);
    VerificationReport base = verify(spec);
    REQUIRE(base.zeta_ran);
    for (int trial = 0; trial < 3; ++trial) {
        FieldContext::Elem alpha = static_cast<FieldContext::Elem>(1 + rng() % 3);
        FieldContext::Elem beta = static_cast<FieldContext::Elem>(rng() % 4);
        auto g = oracles::affine_substitute(f4, f, alpha, beta);
        CurveSpec moved = normalize(2, 2, g);
        VerificationReport other = verify(moved);
        REQUIRE(other.zeta_ran);
        CHECK(other.polygon->slopes == base.polygon->slopes);
        CHECK(other.polygon->vertices == base.polygon->vertices);
    }
}

TEST_SUITE_END();

#include "asnp/predict.hpp"

#include <stdexcept>

#include "asnp/padic.hpp"

namespace asnp {

const char* to_string(PredictionBasis basis) {
    switch (basis) {
        case PredictionBasis::LowerBoundOnly: return "LowerBoundOnly";
        case PredictionBasis::UniqueSymmetric: return "UniqueSymmetric";
        case PredictionBasis::UniqueNotSymmetric: return "UniqueNotSymmetric";
        case PredictionBasis::PkMinusOne: return "PkMinusOne";
        case PredictionBasis::WeightDividesPminus1: return "WeightDividesPminus1";
        case PredictionBasis::NonUniqueMax: return "NonUniqueMax";
    }
    return "?";
}

std::optional<PredictionBasis> basis_from_string(const std::string& s) {
    for (PredictionBasis b :
         {PredictionBasis::LowerBoundOnly, PredictionBasis::UniqueSymmetric,
          PredictionBasis::UniqueNotSymmetric, PredictionBasis::PkMinusOne,
          PredictionBasis::WeightDividesPminus1, PredictionBasis::NonUniqueMax}) {
        if (s == to_string(b)) return b;
    }
    return std::nullopt;
}

namespace {

mpq_class inverse_of(std::uint64_t n) {
    mpq_class r(1, static_cast<unsigned long>(n));
    r.canonicalize();
    return r;
}

// nu = p^k - 1? Returns k.
std::optional<std::uint64_t> power_minus_one(std::uint64_t nu, std::uint64_t p) {
    std::uint64_t v = nu + 1;
    std::uint64_t k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v == 1 && k >= 1) return k;
    return std::nullopt;
}

// The divides-p-minus-1 witness: w = m (1 + p + ... + p^(k-1)) with
// m = (p-1)/s_p(nu) and the smallest k with p^k > ell.
SymmetryCertificate divides_certificate(std::uint64_t nu, std::uint64_t p) {
    std::uint64_t n = weight(nu, p);
    std::uint64_t m = (p - 1) / n;
    std::uint64_t ell = nu * m / (p - 1);
    std::uint64_t k = 1;
    std::uint64_t pk = p;
    while (pk <= ell) {
        pk *= p;
        ++k;
    }
    std::uint64_t w = 0;
    for (std::uint64_t t = 0, pw = 1; t < k; ++t, pw *= p) w += m * pw;
    SymmetryCertificate cert{nu, p, w, k, ell, k - 1, false};
    std::string why;
    if (!check_certificate(cert, why)) {
        throw std::logic_error("weight-divides certificate failed verification: " + why);
    }
    return cert;
}

}  // namespace

SlopePrediction predict(const CurveSpec& spec, std::uint64_t k_max) {
    if (spec.degree() < 3) {
        throw std::invalid_argument("slope prediction requires degree at least 3");
    }
    SupportAnalysis sa = support_analysis(spec);
    SlopePrediction pred;
    pred.p = spec.p;
    pred.support = spec.support();
    pred.max_weight = sa.max_weight;
    pred.lower_bound = inverse_of(sa.max_weight);
    if (!sa.unique) {
        pred.basis = PredictionBasis::NonUniqueMax;
        pred.note = "several exponents attain the maximal weight; only the lower bound applies";
        return pred;
    }
    std::uint64_t nu = *sa.nu;
    std::uint64_t p = spec.p;
    if (auto k = power_minus_one(nu, p)) {
        pred.basis = PredictionBasis::PkMinusOne;
        pred.exact_slope = pred.lower_bound;
        pred.multiplicity_exact = *k * (p - 1);
        pred.certificate = SymmetryCertificate{nu, p, 1, *k, 1, 0, true};
        return pred;
    }
    DetectResult dr = detect(nu, p, k_max == 0 ? default_k_max(nu, p) : k_max);
    if (const auto* cert = std::get_if<SymmetryCertificate>(&dr)) {
        pred.basis = PredictionBasis::UniqueSymmetric;
        pred.exact_slope = pred.lower_bound;
        pred.multiplicity_interval = {(cert->k - cert->shift_factor) * (p - 1), nu * (p - 1)};
        pred.certificate = *cert;
        return pred;
    }
    if ((p - 1) % weight(nu, p) == 0) {
        pred.basis = PredictionBasis::WeightDividesPminus1;
        pred.exact_slope = pred.lower_bound;
        pred.certificate = divides_certificate(nu, p);
        return pred;
    }
    if (nu < p) {
        // nu < p is symmetric exactly when nu | p-1, which failed above.
        pred.basis = PredictionBasis::UniqueNotSymmetric;
        pred.strict = true;
        pred.note = "nu < p does not divide p-1, so the bound cannot be attained";
        return pred;
    }
    pred.basis = PredictionBasis::LowerBoundOnly;
    pred.note = "no witness within k <= " +
                std::to_string(k_max == 0 ? default_k_max(nu, p) : k_max) +
                "; the bound may or may not be attained";
    return pred;
}

bool VerificationReport::all_pass() const {
    for (const ClaimResult& c : claims) {
        if (c.status == "FAIL") return false;
    }
    return true;
}

VerificationReport verify(const CurveSpec& spec, std::uint64_t k_max, const CountOptions& opts) {
    VerificationReport report;
    report.prediction = predict(spec, k_max);
    std::uint64_t g = spec.genus();
    mpz_class largest;
    bool oversized = spec.a * g > 63;
    if (!oversized) {
        mpz_ui_pow_ui(largest.get_mpz_t(), static_cast<unsigned long>(spec.p),
                      static_cast<unsigned long>(spec.a * g));
    }
    if (oversized || largest > opts.field_size_guard) {
        report.zeta_ran = false;
        report.claims.push_back({"zeta-oracle", "SKIPPED"});
        return report;
    }
    report.zeta_ran = true;
    for (std::uint32_t m = 1; m <= g; ++m) {
        report.counts.push_back(count_points(spec, m, opts));
    }
    report.numerator = numerator_from_counts(spec, report.counts);
    report.polygon = newton_polygon(*report.numerator);
    auto [slope, mult] = first_slope(*report.polygon);

    const SlopePrediction& pred = report.prediction;
    auto claim = [&](const std::string& name, bool ok) {
        report.claims.push_back({name, ok ? "PASS" : "FAIL"});
    };
    claim("first-slope-lower-bound", slope >= pred.lower_bound);
    if (pred.exact_slope) {
        claim("first-slope-exact", slope == *pred.exact_slope);
    }
    if (pred.strict) {
        claim("first-slope-strict", slope > pred.lower_bound);
    }
    if (pred.multiplicity_exact) {
        claim("multiplicity-exact", mult == *pred.multiplicity_exact);
    }
    if (pred.multiplicity_interval) {
        claim("multiplicity-interval", pred.multiplicity_interval->first <= mult &&
                                           mult <= pred.multiplicity_interval->second);
    }
    if (pred.basis == PredictionBasis::PkMinusOne) {
        std::uint64_t k = pred.certificate->k;
        bool exceptional = (spec.p == 2 && k == 2) || (spec.p == 3 && k == 1);
        claim("supersingular-classification", is_supersingular(*report.polygon) == exceptional);
    }
    return report;
}

}  // namespace asnp

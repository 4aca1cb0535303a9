#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "asnp/curves.hpp"
#include "asnp/psymmetry.hpp"
#include "asnp/zeta.hpp"

namespace asnp {

enum class PredictionBasis {
    LowerBoundOnly,        // inconclusive: bounded search found no witness
    UniqueSymmetric,       // unique max weight, witness found
    UniqueNotSymmetric,    // unique max weight, provably no witness (nu < p)
    PkMinusOne,            // unique max weight nu = p^k - 1
    WeightDividesPminus1,  // s_p(nu) | p-1 forces a witness beyond the search bound
    NonUniqueMax,          // several maximal-weight exponents
};

const char* to_string(PredictionBasis basis);
std::optional<PredictionBasis> basis_from_string(const std::string& s);

struct SlopePrediction {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> support;
    std::uint64_t max_weight = 0;
    mpq_class lower_bound;                   // 1 / max weight
    std::optional<mpq_class> exact_slope;    // set when a theorem pins the slope
    std::optional<std::uint64_t> multiplicity_exact;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> multiplicity_interval;
    bool strict = false;                     // first slope provably > lower bound
    PredictionBasis basis = PredictionBasis::LowerBoundOnly;
    std::optional<SymmetryCertificate> certificate;
    std::string note;

    bool operator==(const SlopePrediction&) const = default;
};

// Classifies the support and, when the maximal p-adic weight element is
// unique, decides whether the 1/s_p(nu) bound is attained.
SlopePrediction predict(const CurveSpec& spec, std::uint64_t k_max = 0);

struct ClaimResult {
    std::string name;
    std::string status;  // "PASS", "FAIL" or "SKIPPED"
    bool operator==(const ClaimResult&) const = default;
};

struct VerificationReport {
    SlopePrediction prediction;
    bool zeta_ran = false;
    std::vector<PointCountRecord> counts;
    std::optional<ZetaNumerator> numerator;
    std::optional<NewtonPolygonData> polygon;
    std::vector<ClaimResult> claims;

    bool all_pass() const;
};

// Runs predict and the exact zeta oracle, then checks every claim the
// prediction makes against the computed polygon. When the required fields
// exceed the guard, only the prediction is reported.
VerificationReport verify(const CurveSpec& spec, std::uint64_t k_max = 0,
                          const CountOptions& opts = {});

}  // namespace asnp

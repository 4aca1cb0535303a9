#pragma once

#include <json.hpp>

#include "asnp/changemaking.hpp"
#include "asnp/curves.hpp"
#include "asnp/minimizers.hpp"
#include "asnp/padic.hpp"
#include "asnp/predict.hpp"
#include "asnp/psymmetry.hpp"
#include "asnp/zeta.hpp"

// JSON encodings for every report type the CLI can emit. Big integers and
// rationals travel as canonical strings so parse(emit(x)) == x holds
// exactly.

namespace asnp {

using json = nlohmann::json;

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

json to_json(const DigitForm& f);
DigitForm digit_form_from_json(const json& j);

json to_json(const SymmetryCertificate& cert);
SymmetryCertificate certificate_from_json(const json& j);

json to_json(const DetectResult& r);
DetectResult detect_result_from_json(const json& j);

json to_json(const Representation& rep);
Representation representation_from_json(const json& j);

json to_json(const TightnessReport& report);
TightnessReport tightness_report_from_json(const json& j);

json to_json(const MaximalMinimizer& mm);
MaximalMinimizer maximal_minimizer_from_json(const json& j);

json to_json(const PointCountRecord& rec);
PointCountRecord point_count_from_json(const json& j);

json to_json(const ZetaNumerator& num);
ZetaNumerator numerator_from_json(const json& j);

json to_json(const NewtonPolygonData& poly);
NewtonPolygonData polygon_from_json(const json& j);

json to_json(const SlopePrediction& pred);
SlopePrediction prediction_from_json(const json& j);

json to_json(const VerificationReport& report);
VerificationReport verification_report_from_json(const json& j);

}  // namespace asnp

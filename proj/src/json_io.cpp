#include "asnp/json_io.hpp"

#include <stdexcept>

namespace asnp {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

json to_json(const DigitForm& f) {
    return json{{"base", f.base}, {"digits", f.digits}};
}

DigitForm digit_form_from_json(const json& j) {
    DigitForm f;
    f.base = j.at("base").get<std::uint64_t>();
    f.digits = j.at("digits").get<std::vector<std::uint32_t>>();
    return f;
}

json to_json(const SymmetryCertificate& cert) {
    return json{{"nu", cert.nu},
                {"p", cert.p},
                {"w", cert.w},
                {"k", cert.k},
                {"ell", cert.ell},
                {"shift_factor", cert.shift_factor},
                {"minimal", cert.minimal}};
}

SymmetryCertificate certificate_from_json(const json& j) {
    SymmetryCertificate cert;
    cert.nu = j.at("nu").get<std::uint64_t>();
    cert.p = j.at("p").get<std::uint64_t>();
    cert.w = j.at("w").get<std::uint64_t>();
    cert.k = j.at("k").get<std::uint64_t>();
    cert.ell = j.at("ell").get<std::uint64_t>();
    cert.shift_factor = j.at("shift_factor").get<std::uint64_t>();
    cert.minimal = j.at("minimal").get<bool>();
    return cert;
}

json to_json(const DetectResult& r) {
    if (const auto* cert = std::get_if<SymmetryCertificate>(&r)) {
        json j = to_json(*cert);
        j["symmetric"] = true;
        return j;
    }
    return json{{"symmetric", false}, {"not_found_within", std::get<NotFoundWithin>(r).k_max}};
}

DetectResult detect_result_from_json(const json& j) {
    if (j.at("symmetric").get<bool>()) return certificate_from_json(j);
    return NotFoundWithin{j.at("not_found_within").get<std::uint64_t>()};
}

json to_json(const Representation& rep) {
    json coins = json::array();
    for (const auto& [i, jj, t] : rep.coin_multiplicities) {
        coins.push_back(json{{"i", i}, {"j", jj}, {"t", t}});
    }
    return json{{"target", rep.target}, {"size", rep.size}, {"coins", coins}};
}

Representation representation_from_json(const json& j) {
    Representation rep;
    rep.target = j.at("target").get<std::uint64_t>();
    rep.size = j.at("size").get<std::uint64_t>();
    for (const auto& c : j.at("coins")) {
        rep.coin_multiplicities.emplace_back(c.at("i").get<std::uint64_t>(),
                                             c.at("j").get<std::uint32_t>(),
                                             c.at("t").get<std::uint64_t>());
    }
    return rep;
}

json to_json(const TightnessReport& report) {
    json j{{"target", report.target},
           {"feasible", report.feasible},
           {"tight", report.tight},
           {"bound", rational_to_string(report.bound)},
           {"factorization_carryfree", report.factorization_carryfree}};
    if (report.feasible) j["solution_value"] = report.solution_value;
    if (report.witness) {
        j["witness"] = *report.witness;
        j["witness_digits"] = report.witness_digits;
    }
    return j;
}

TightnessReport tightness_report_from_json(const json& j) {
    TightnessReport report;
    report.target = j.at("target").get<std::uint64_t>();
    report.feasible = j.at("feasible").get<bool>();
    report.tight = j.at("tight").get<bool>();
    report.bound = rational_from_string(j.at("bound").get<std::string>());
    report.factorization_carryfree = j.at("factorization_carryfree").get<bool>();
    if (j.contains("solution_value")) report.solution_value = j.at("solution_value").get<std::uint64_t>();
    if (j.contains("witness")) {
        report.witness = j.at("witness").get<std::uint64_t>();
        report.witness_digits = j.at("witness_digits").get<std::vector<std::uint32_t>>();
    }
    return report;
}

json to_json(const MaximalMinimizer& mm) {
    return json{{"cycles", mm.cycles}, {"support", mm.support}, {"height", mm.height}};
}

MaximalMinimizer maximal_minimizer_from_json(const json& j) {
    MaximalMinimizer mm;
    mm.cycles = j.at("cycles").get<std::vector<std::vector<std::uint64_t>>>();
    mm.support = j.at("support").get<std::vector<std::uint64_t>>();
    mm.height = j.at("height").get<std::uint64_t>();
    return mm;
}

json to_json(const PointCountRecord& rec) {
    return json{{"m", rec.m},
                {"field_size", rec.field_size},
                {"zero_trace_count", rec.zero_trace_count},
                {"points", rec.points}};
}

PointCountRecord point_count_from_json(const json& j) {
    PointCountRecord rec;
    rec.m = j.at("m").get<std::uint32_t>();
    rec.field_size = j.at("field_size").get<std::uint64_t>();
    rec.zero_trace_count = j.at("zero_trace_count").get<std::uint64_t>();
    rec.points = j.at("points").get<std::uint64_t>();
    return rec;
}

json to_json(const ZetaNumerator& num) {
    json coeffs = json::array();
    for (const mpz_class& c : num.coefficients) coeffs.push_back(c.get_str());
    return json{{"p", num.p}, {"a", num.a}, {"q", num.q}, {"genus", num.genus},
                {"coefficients", coeffs}};
}

ZetaNumerator numerator_from_json(const json& j) {
    ZetaNumerator num;
    num.p = j.at("p").get<std::uint64_t>();
    num.a = j.at("a").get<std::uint32_t>();
    num.q = j.at("q").get<std::uint64_t>();
    num.genus = j.at("genus").get<std::uint32_t>();
    for (const auto& c : j.at("coefficients")) {
        num.coefficients.emplace_back(c.get<std::string>());
    }
    return num;
}

namespace {

json points_to_json(const std::vector<std::pair<std::uint64_t, mpq_class>>& pts) {
    json out = json::array();
    for (const auto& [i, v] : pts) out.push_back(json{{"i", i}, {"v", rational_to_string(v)}});
    return out;
}

std::vector<std::pair<std::uint64_t, mpq_class>> points_from_json(const json& j) {
    std::vector<std::pair<std::uint64_t, mpq_class>> out;
    for (const auto& e : j) {
        out.emplace_back(e.at("i").get<std::uint64_t>(),
                         rational_from_string(e.at("v").get<std::string>()));
    }
    return out;
}

}  // namespace

json to_json(const NewtonPolygonData& poly) {
    json slopes = json::array();
    for (const auto& [s, m] : poly.slopes) {
        slopes.push_back(json{{"slope", rational_to_string(s)}, {"multiplicity", m}});
    }
    return json{{"genus", poly.genus},
                {"points", points_to_json(poly.points)},
                {"vertices", points_to_json(poly.vertices)},
                {"slopes", slopes}};
}

NewtonPolygonData polygon_from_json(const json& j) {
    NewtonPolygonData poly;
    poly.genus = j.at("genus").get<std::uint32_t>();
    poly.points = points_from_json(j.at("points"));
    poly.vertices = points_from_json(j.at("vertices"));
    for (const auto& e : j.at("slopes")) {
        poly.slopes.emplace_back(rational_from_string(e.at("slope").get<std::string>()),
                                 e.at("multiplicity").get<std::uint64_t>());
    }
    return poly;
}

json to_json(const SlopePrediction& pred) {
    json j{{"p", pred.p},
           {"support", pred.support},
           {"max_weight", pred.max_weight},
           {"lower_bound", rational_to_string(pred.lower_bound)},
           {"strict", pred.strict},
           {"basis", to_string(pred.basis)},
           {"note", pred.note}};
    if (pred.exact_slope) j["exact_slope"] = rational_to_string(*pred.exact_slope);
    if (pred.multiplicity_exact) j["multiplicity"] = *pred.multiplicity_exact;
    if (pred.multiplicity_interval) {
        j["multiplicity_interval"] =
            json::array({pred.multiplicity_interval->first, pred.multiplicity_interval->second});
    }
    if (pred.certificate) j["certificate"] = to_json(*pred.certificate);
    return j;
}

SlopePrediction prediction_from_json(const json& j) {
    SlopePrediction pred;
    pred.p = j.at("p").get<std::uint64_t>();
    pred.support = j.at("support").get<std::vector<std::uint64_t>>();
    pred.max_weight = j.at("max_weight").get<std::uint64_t>();
    pred.lower_bound = rational_from_string(j.at("lower_bound").get<std::string>());
    pred.strict = j.at("strict").get<bool>();
    auto basis = basis_from_string(j.at("basis").get<std::string>());
    if (!basis) throw std::invalid_argument("unknown prediction basis");
    pred.basis = *basis;
    pred.note = j.at("note").get<std::string>();
    if (j.contains("exact_slope")) {
        pred.exact_slope = rational_from_string(j.at("exact_slope").get<std::string>());
    }
    if (j.contains("multiplicity")) pred.multiplicity_exact = j.at("multiplicity").get<std::uint64_t>();
    if (j.contains("multiplicity_interval")) {
        pred.multiplicity_interval = {j.at("multiplicity_interval")[0].get<std::uint64_t>(),
                                      j.at("multiplicity_interval")[1].get<std::uint64_t>()};
    }
    if (j.contains("certificate")) pred.certificate = certificate_from_json(j.at("certificate"));
    return pred;
}

json to_json(const VerificationReport& report) {
    json claims = json::array();
    for (const ClaimResult& c : report.claims) {
        claims.push_back(json{{"name", c.name}, {"status", c.status}});
    }
    json j{{"prediction", to_json(report.prediction)},
           {"zeta_ran", report.zeta_ran},
           {"claims", claims},
           {"pass", report.all_pass()}};
    if (!report.counts.empty()) {
        json counts = json::array();
        for (const PointCountRecord& rec : report.counts) counts.push_back(to_json(rec));
        j["counts"] = counts;
    }
    if (report.numerator) j["numerator"] = to_json(*report.numerator);
    if (report.polygon) j["polygon"] = to_json(*report.polygon);
    return j;
}

VerificationReport verification_report_from_json(const json& j) {
    VerificationReport report;
    report.prediction = prediction_from_json(j.at("prediction"));
    report.zeta_ran = j.at("zeta_ran").get<bool>();
    for (const auto& c : j.at("claims")) {
        report.claims.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>()});
    }
    if (j.contains("counts")) {
        for (const auto& rec : j.at("counts")) report.counts.push_back(point_count_from_json(rec));
    }
    if (j.contains("numerator")) report.numerator = numerator_from_json(j.at("numerator"));
    if (j.contains("polygon")) report.polygon = polygon_from_json(j.at("polygon"));
    return report;
}

}  // namespace asnp

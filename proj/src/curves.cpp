#include "asnp/curves.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "asnp/padic.hpp"
#include "asnp/psymmetry.hpp"

namespace asnp {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("power exceeds 64 bits");
        r *= base;
    }
    return r;
}

FieldContext base_field(std::uint64_t p, std::uint32_t a,
                        const std::optional<std::vector<std::uint32_t>>& modulus) {
    return modulus ? FieldContext(p, a, *modulus) : FieldContext(p, a);
}

}  // namespace

std::vector<std::uint64_t> CurveSpec::support() const {
    std::vector<std::uint64_t> s;
    s.reserve(coefficients.size());
    for (const auto& kv : coefficients) s.push_back(kv.first);
    return s;
}

CurveSpec make_curve_spec(std::uint64_t p, std::uint32_t a,
                          std::map<std::uint64_t, FieldContext::Elem> coefficients,
                          std::optional<std::vector<std::uint32_t>> modulus) {
    require_prime(p);
    if (a < 1) throw std::invalid_argument("a must be positive");
    if (coefficients.empty()) throw std::invalid_argument("the polynomial must be nonconstant");
    CurveSpec spec{p, a, base_field(p, a, modulus), {}};
    for (const auto& [e, c] : coefficients) {
        if (e == 0) throw std::invalid_argument("constant term must be removed");
        if (e % p == 0) {
            throw std::invalid_argument("exponent " + std::to_string(e) +
                                        " is divisible by p; normalize the polynomial first");
        }
        if (c == 0) throw std::invalid_argument("coefficients must be nonzero");
        if (c >= spec.base.size()) throw std::invalid_argument("coefficient outside the base field");
    }
    spec.coefficients = std::move(coefficients);
    // genus must be computable
    if (spec.degree() > (1ull << 32)) throw std::invalid_argument("degree too large");
    return spec;
}

CurveSpec normalize(std::uint64_t p, std::uint32_t a,
                    const std::map<std::uint64_t, FieldContext::Elem>& raw,
                    std::optional<std::vector<std::uint32_t>> modulus) {
    require_prime(p);
    FieldContext base = base_field(p, a, modulus);
    // p-th root = inverse Frobenius = c^(p^(a-1))
    std::uint64_t root_exp = checked_pow(p, a >= 1 ? a - 1 : 0);
    std::map<std::uint64_t, FieldContext::Elem> terms;
    for (const auto& [e, c] : raw) {
        if (c >= base.size()) throw std::invalid_argument("coefficient outside the base field");
        if (c != 0 && e != 0) terms[e] = base.add(terms.count(e) ? terms[e] : 0, c);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = terms.begin(); it != terms.end(); ++it) {
            if (it->first % p != 0) continue;
            std::uint64_t e = it->first / p;
            FieldContext::Elem c = base.pow(it->second, root_exp);
            terms.erase(it);
            FieldContext::Elem merged = base.add(terms.count(e) ? terms[e] : 0, c);
            if (merged == 0) {
                terms.erase(e);
            } else {
                terms[e] = merged;
            }
            changed = true;
            break;
        }
    }
    for (auto it = terms.begin(); it != terms.end();) {
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    if (terms.empty()) {
        throw std::invalid_argument("polynomial normalizes to a constant");
    }
    return make_curve_spec(p, a, std::move(terms), modulus);
}

SupportAnalysis analyze_support(std::uint64_t p, const std::vector<std::uint64_t>& support) {
    require_prime(p);
    if (support.empty()) throw std::invalid_argument("support must be nonempty");
    SupportAnalysis out;
    for (std::uint64_t e : support) {
        std::uint64_t w = weight(e, p);
        if (w > out.max_weight) {
            out.max_weight = w;
            out.argmax.clear();
        }
        if (w == out.max_weight) out.argmax.push_back(e);
    }
    std::sort(out.argmax.begin(), out.argmax.end());
    out.unique = out.argmax.size() == 1;
    if (out.unique) out.nu = out.argmax[0];
    return out;
}

SupportAnalysis support_analysis(const CurveSpec& spec) {
    return analyze_support(spec.p, spec.support());
}

CurveSpec build_gv_family(std::uint64_t p, std::uint32_t a, std::uint64_t nu,
                          FieldContext::Elem c_nu,
                          const std::map<std::uint32_t, FieldContext::Elem>& ai_terms,
                          std::uint32_t i_max) {
    require_prime(p);
    if (nu <= 1) throw std::invalid_argument("nu must exceed 1");
    if (c_nu == 0) throw std::invalid_argument("c_nu must be nonzero");
    for (std::uint64_t pi = 1;; pi *= p) {
        if (pi + 1 == nu) throw std::invalid_argument("nu must not be p^i + 1");
        if (pi + 1 > nu) break;
    }
    if (!std::holds_alternative<SymmetryCertificate>(detect(nu, p))) {
        throw std::invalid_argument("nu must be symmetric (no witness found within the default bound)");
    }
    std::map<std::uint64_t, FieldContext::Elem> raw;
    raw[nu] = c_nu;
    for (const auto& [i, ai] : ai_terms) {
        if (i > i_max) throw std::invalid_argument("family index exceeds i_max");
        if (ai == 0) continue;
        std::uint64_t e = 1 + checked_pow(p, i);
        if (raw.count(e)) throw std::invalid_argument("family exponent collides with nu");
        raw[e] = ai;
    }
    return normalize(p, a, raw);
}

CurveSpec construct_slope_curve(std::uint64_t p, std::uint32_t n, std::uint64_t genus_floor) {
    require_prime(p);
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::uint64_t nu = family_geometric(p, n, 0);  // (p^n - 1)/(p - 1)
    std::map<std::uint64_t, FieldContext::Elem> terms;
    terms[nu] = 1;
    if (genus_floor > 0) {
        std::uint64_t c = (2 * genus_floor + (p - 2)) / (p - 1);  // ceil(2N/(p-1))
        if (c > 40) throw std::invalid_argument("genus floor too large for desk scale");
        std::uint64_t e = 1 + checked_pow(p, c);
        terms[e] = 1;
    }
    CurveSpec spec = make_curve_spec(p, 1, std::move(terms));
    if (spec.genus() < genus_floor) throw std::logic_error("genus floor not met");
    return spec;
}

CurveSpec construct_small_genus_curve(std::uint64_t p, std::uint32_t n) {
    require_prime(p);
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::uint64_t nu = family_geometric(p, n, 0);
    CurveSpec spec = make_curve_spec(p, 1, {{nu, 1}});
    if (spec.genus() > (checked_pow(p, n) - p) / 2) {
        throw std::logic_error("small-genus bound not met");
    }
    return spec;
}

std::string curve_to_string(const CurveSpec& spec) {
    std::ostringstream out;
    out << "p " << spec.p << "\n";
    out << "a " << spec.a << "\n";
    if (spec.base.modulus() != smallest_irreducible(spec.p, spec.a)) {
        out << "modulus";
        for (std::uint32_t c : spec.base.modulus()) out << ' ' << c;
        out << "\n";
    }
    for (const auto& [e, c] : spec.coefficients) {
        out << "term " << e;
        if (spec.a == 1) {
            out << ' ' << c;
        } else {
            for (std::uint32_t d : spec.base.coeffs(c)) out << ' ' << d;
        }
        out << "\n";
    }
    return out.str();
}

CurveSpec parse_curve_text(const std::string& text) {
    std::istringstream in(text);
    std::optional<std::uint64_t> p;
    std::uint32_t a = 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> raw_terms;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error("curve file line " + std::to_string(line_no) + ": " + msg);
        };
        if (key == "p") {
            std::uint64_t v;
            if (!(ls >> v)) fail("expected a prime after 'p'");
            p = v;
        } else if (key == "a") {
            if (!(ls >> a)) fail("expected a degree after 'a'");
        } else if (key == "modulus") {
            std::vector<std::uint32_t> mod;
            std::uint32_t c;
            while (ls >> c) mod.push_back(c);
            if (mod.empty()) fail("empty modulus");
            modulus = std::move(mod);
        } else if (key == "term") {
            std::uint64_t e;
            if (!(ls >> e)) fail("expected an exponent after 'term'");
            std::vector<std::uint32_t> cs;
            std::uint32_t c;
            while (ls >> c) cs.push_back(c);
            if (cs.empty()) fail("term needs a coefficient");
            raw_terms.emplace_back(e, std::move(cs));
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!p) throw std::runtime_error("curve file: missing 'p' line");
    FieldContext base = base_field(*p, a, modulus);
    std::map<std::uint64_t, FieldContext::Elem> coeffs;
    for (auto& [e, cs] : raw_terms) {
        FieldContext::Elem c;
        if (cs.size() == 1) {
            c = base.from_int(cs[0]);
        } else if (cs.size() == a) {
            c = base.from_coeffs(cs);
        } else {
            throw std::runtime_error("curve file: term " + std::to_string(e) +
                                     " needs 1 or a coefficients");
        }
        if (coeffs.count(e)) throw std::runtime_error("curve file: duplicate exponent");
        coeffs[e] = c;
    }
    return make_curve_spec(*p, a, std::move(coeffs), modulus);
}

CurveSpec load_curve_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_text(buf.str());
}

void save_curve_file(const CurveSpec& spec, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write curve file: " + path.string());
    out << curve_to_string(spec);
}

}  // namespace asnp

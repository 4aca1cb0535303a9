#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "asnp/finitefield.hpp"

namespace asnp {

// The curve y^p - y = f(x) over F_{p^a}, with f supported on exponents
// coprime to p and without constant term.
struct CurveSpec {
    std::uint64_t p = 2;
    std::uint32_t a = 1;
    FieldContext base;  // degree a
    std::map<std::uint64_t, FieldContext::Elem> coefficients;  // exponent -> nonzero element

    std::uint64_t degree() const { return coefficients.rbegin()->first; }
    std::uint64_t genus() const { return (p - 1) * (degree() - 1) / 2; }
    std::vector<std::uint64_t> support() const;
};

// Validates and assembles a spec from already-coprime terms.
CurveSpec make_curve_spec(std::uint64_t p, std::uint32_t a,
                          std::map<std::uint64_t, FieldContext::Elem> coefficients,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

// Drops the constant term and folds every term c*x^(p*j) into c^(1/p)*x^j
// (p-th roots through the inverse Frobenius) until all exponents are coprime
// to p. The result presents an isomorphic curve.
CurveSpec normalize(std::uint64_t p, std::uint32_t a,
                    const std::map<std::uint64_t, FieldContext::Elem>& raw,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

struct SupportAnalysis {
    std::uint64_t max_weight = 0;
    std::vector<std::uint64_t> argmax;  // sorted
    bool unique = false;
    std::optional<std::uint64_t> nu;    // set iff unique
};

SupportAnalysis analyze_support(std::uint64_t p, const std::vector<std::uint64_t>& support);
SupportAnalysis support_analysis(const CurveSpec& spec);

// c_nu * x^nu + sum_i a_i x^(1+p^i): the family extending the supersingular
// fiber-product construction with one dominant symmetric exponent.
CurveSpec build_gv_family(std::uint64_t p, std::uint32_t a, std::uint64_t nu,
                          FieldContext::Elem c_nu,
                          const std::map<std::uint32_t, FieldContext::Elem>& ai_terms,
                          std::uint32_t i_max);

// A curve over F_p with unique maximal-weight symmetric exponent of weight n
// and genus at least genus_floor; first slope 1/n for n >= 3.
CurveSpec construct_slope_curve(std::uint64_t p, std::uint32_t n, std::uint64_t genus_floor);

// The single-term curve for nu = (p^n - 1)/(p - 1): genus <= (p^n - p)/2
// with first slope 1/n.
CurveSpec construct_small_genus_curve(std::uint64_t p, std::uint32_t n);

// Text format: "p P", "a A", optional "modulus c0 ... cA", and one
// "term E C..." line per exponent (single integer = prime-subfield value,
// else exactly a coefficients low-to-high). '#' starts a comment.
CurveSpec load_curve_file(const std::filesystem::path& path);
void save_curve_file(const CurveSpec& spec, const std::filesystem::path& path);
std::string curve_to_string(const CurveSpec& spec);
CurveSpec parse_curve_text(const std::string& text);

}  // namespace asnp

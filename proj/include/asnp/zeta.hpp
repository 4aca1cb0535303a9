#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "asnp/curves.hpp"
#include "asnp/finitefield.hpp"

namespace asnp {

struct CountOptions {
    std::uint64_t field_size_guard = 1ull << 26;
    std::uint32_t threads = 0;  // 0 = hardware concurrency
};

// Raised when a requested enumeration would exceed the field-size guard.
struct FieldSizeGuardError : std::runtime_error {
    std::uint64_t requested;
    std::uint64_t guard;
    FieldSizeGuardError(std::uint64_t req, std::uint64_t g)
        : std::runtime_error("field of size " + std::to_string(req) +
                             " exceeds the guard of " + std::to_string(g)),
          requested(req),
          guard(g) {}
};

struct PointCountRecord {
    std::uint32_t m = 1;
    std::uint64_t field_size = 0;        // q^m
    std::uint64_t zero_trace_count = 0;  // #{x : Tr(f(x)) = 0}
    std::uint64_t points = 0;            // p * zero_trace_count + 1

    bool operator==(const PointCountRecord&) const = default;
};

// Exact #X(F_{q^m}) for the smooth projective model: each x with vanishing
// absolute trace of f(x) carries p affine points, plus one point at infinity.
PointCountRecord count_points(const CurveSpec& spec, std::uint32_t m,
                              const CountOptions& opts = {});

// Same count for a raw polynomial (exponents need not be coprime to p);
// used to confirm that normalization preserves the zeta function.
PointCountRecord count_points_raw(std::uint64_t p, std::uint32_t a, const FieldContext& base,
                                  const std::map<std::uint64_t, FieldContext::Elem>& coeffs,
                                  std::uint32_t m, const CountOptions& opts = {});

// P(s) = prod (1 - alpha_i s), the integer numerator of the zeta function.
struct ZetaNumerator {
    std::uint64_t p = 2;
    std::uint32_t a = 1;
    std::uint64_t q = 2;   // p^a
    std::uint32_t genus = 0;
    std::vector<mpz_class> coefficients;  // c_0..c_{2g}, c_0 = 1

    bool operator==(const ZetaNumerator&) const = default;
};

// Reconstructs the numerator from counts for m = 1..g via Newton's
// identities and the functional equation c_{2g-i} = q^{g-i} c_i.
ZetaNumerator numerator_from_counts(const CurveSpec& spec,
                                    std::span<const PointCountRecord> counts);

// Power sums sum alpha_i^m for m = 1..up_to, from the numerator.
std::vector<mpz_class> power_sums(const ZetaNumerator& num, std::uint32_t up_to);

// Point counts N_m = q^m + 1 - ps_m predicted by the numerator.
std::vector<mpz_class> predicted_counts(const ZetaNumerator& num, std::uint32_t up_to);

struct NewtonPolygonData {
    std::uint32_t genus = 0;
    // (i, v_q(c_i)) for the nonzero coefficients; zero coefficients are
    // omitted (infinite valuation).
    std::vector<std::pair<std::uint64_t, mpq_class>> points;
    std::vector<std::pair<std::uint64_t, mpq_class>> vertices;  // lower hull
    std::vector<std::pair<mpq_class, std::uint64_t>> slopes;    // (slope, multiplicity), increasing

    bool operator==(const NewtonPolygonData&) const = default;
};

NewtonPolygonData newton_polygon(const ZetaNumerator& num);

// Smallest slope and the horizontal length of its hull segment.
std::pair<mpq_class, std::uint64_t> first_slope(const NewtonPolygonData& polygon);

// True iff every slope equals 1/2.
bool is_supersingular(const NewtonPolygonData& polygon);

}  // namespace asnp

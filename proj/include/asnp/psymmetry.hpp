#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace asnp {

// Witness that nu * w = (p^k - 1) * ell is a carry-free product with
// ell < p^k. shift_factor is the index of the leading base-p digit of w.
struct SymmetryCertificate {
    std::uint64_t nu = 0;
    std::uint64_t p = 2;
    std::uint64_t w = 0;
    std::uint64_t k = 0;
    std::uint64_t ell = 0;
    std::uint64_t shift_factor = 0;
    bool minimal = false;

    bool operator==(const SymmetryCertificate&) const = default;
};

// Verifies every certificate invariant by direct computation.
bool check_certificate(const SymmetryCertificate& cert);
// Same check, reporting the first violated invariant.
bool check_certificate(const SymmetryCertificate& cert, std::string& why);

struct NotFoundWithin {
    std::uint64_t k_max = 0;
    bool operator==(const NotFoundWithin&) const = default;
};

using DetectResult = std::variant<SymmetryCertificate, NotFoundWithin>;

// Default search bound: twice the base-p digit length of nu, plus four.
std::uint64_t default_k_max(std::uint64_t nu, std::uint64_t p);

// Searches k <= k_max for a carry-free factorization nu * w = (p^k - 1) ell,
// returning the certificate with the smallest witness w found. The result is
// marked minimal when no factorization with k > k_max could beat it.
DetectResult detect(std::uint64_t nu, std::uint64_t p, std::uint64_t k_max = 0);

// The (w, k, ell) triple of the minimal certificate, or nullopt.
std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>
minimal_factorization(std::uint64_t nu, std::uint64_t p, std::uint64_t k_max = 0);

// All symmetric numbers coprime to p with exactly digit_count base-p digits,
// in increasing order, searched up to k_max.
std::vector<std::uint64_t> census(std::uint64_t p, std::uint32_t digit_count,
                                  std::uint64_t k_max = 0);

// nu = 1 + p^(m+1) + p^(2(m+1)) + ... + p^((n-1)(m+1)), a symmetric number of
// weight n and shift factor m, witnessed by w = p^(m+1) - 1 and k = n(m+1).
std::uint64_t family_geometric(std::uint64_t p, std::uint32_t n, std::uint32_t m);

// nu = (p^b - 1) / w for a divisor w of p - 1; shift factor 0.
std::uint64_t family_divisor(std::uint64_t p, std::uint32_t b, std::uint64_t w);

// From a valid certificate for nu, the certificate for
// nu' = nu * (1 + p^k + ... + p^((b-1)k}) against p^(kb) - 1.
SymmetryCertificate family_replicate(const SymmetryCertificate& cert, std::uint32_t b);

}  // namespace asnp

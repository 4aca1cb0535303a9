#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace asnp {

// The coin system {i * p^j : i in support, 0 <= j < a}.
struct CoinSet {
    std::uint64_t p = 2;
    std::uint32_t a = 1;
    std::vector<std::uint64_t> support;  // the set of i's, sorted, coprime to p
    std::vector<std::uint64_t> coins;    // all i*p^j, sorted ascending
    std::vector<std::uint64_t> coin_i;   // coin_i[k], coin_j[k]: index pair of coins[k]
    std::vector<std::uint32_t> coin_j;
    std::uint64_t nu = 0;        // designated max-weight element of support
    bool nu_unique = false;      // true iff the maximum weight is attained once

    std::uint64_t q() const;     // p^a
    std::uint64_t nu_weight() const;
};

CoinSet make_coin_set(std::uint64_t p, std::uint32_t a, std::vector<std::uint64_t> support);

// Minimal coin counts for every target in [0, max_n]. kNoRepresentation
// marks targets with no representation at all.
inline constexpr std::uint32_t kNoRepresentation = 0xffffffffu;
std::vector<std::uint32_t> solution_table(const CoinSet& c, std::uint64_t max_n);

// M_C(n): the least number of coins summing to n; nullopt when infeasible.
std::optional<std::uint64_t> solution_value(const CoinSet& c, std::uint64_t n);

struct Representation {
    // (i, j, t_ij) with t_ij > 0.
    std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>> coin_multiplicities;
    std::uint64_t target = 0;
    std::uint64_t size = 0;
};

// All representations attaining M_C(n); empty iff n is infeasible.
std::vector<Representation> solve(const CoinSet& c, std::uint64_t n,
                                  std::size_t limit = 200000);

// s_p(n) / s_p(nu) as an exact rational.
mpq_class weight_lower_bound(const CoinSet& c, std::uint64_t n);

struct TightnessReport {
    std::uint64_t target = 0;
    bool feasible = false;
    bool tight = false;                      // M_C(n) == s_p(n)/s_p(nu)
    std::uint64_t solution_value = 0;        // valid when feasible
    mpq_class bound;                         // s_p(n)/s_p(nu)
    std::optional<std::uint64_t> witness;    // w with n = nu * w, when nu_unique and tight
    std::vector<std::uint32_t> witness_digits;  // t_{nu j}, base-p digits of w
    bool factorization_carryfree = false;
};

// Reports whether the weight lower bound is attained, extracting the
// factorization witness when the maximum-weight coin is unique.
TightnessReport is_tight(const CoinSet& c, std::uint64_t n);

}  // namespace asnp

#pragma once

// Independent reference implementations used only by tests. Each oracle
// takes a different computational route than the library code it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "asnp/changemaking.hpp"
#include "asnp/finitefield.hpp"

namespace oracles {

// Digits most-significant-first by greedy subtraction of powers, then
// reversed; avoids the library's divmod loop.
inline std::vector<std::uint32_t> digits_greedy(mpz_class n, std::uint64_t p) {
    std::vector<mpz_class> powers{1};
    while (powers.back() * p <= n) powers.push_back(powers.back() * p);
    std::vector<std::uint32_t> digits;
    if (n == 0) return digits;
    for (std::size_t i = powers.size(); i-- > 0;) {
        std::uint32_t d = 0;
        while (n >= powers[i]) {
            n -= powers[i];
            ++d;
        }
        digits.push_back(d);
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

inline std::uint64_t weight_greedy(const mpz_class& n, std::uint64_t p) {
    std::uint64_t s = 0;
    for (std::uint32_t d : digits_greedy(n, p)) s += d;
    return s;
}

// Full enumeration of every representation of n over the coin set,
// returning the minimum size and all minimum-size representations as
// multisets of coin values. No dynamic programming involved.
struct EnumerationResult {
    std::optional<std::uint64_t> min_size;
    std::vector<std::vector<std::uint64_t>> optimal;  // coin values, sorted
};

inline void enumerate_reps(const std::vector<std::uint64_t>& coins, std::size_t idx,
                           std::uint64_t rest, std::vector<std::uint64_t>& chosen,
                           EnumerationResult& out) {
    if (rest == 0) {
        std::uint64_t size = chosen.size();
        if (!out.min_size || size < *out.min_size) {
            out.min_size = size;
            out.optimal.clear();
        }
        if (size == *out.min_size) out.optimal.push_back(chosen);
        return;
    }
    if (idx == coins.size()) return;
    std::uint64_t c = coins[idx];
    std::uint64_t max_t = rest / c;
    for (std::uint64_t t = 0; t <= max_t; ++t) {
        for (std::uint64_t u = 0; u < t; ++u) chosen.push_back(c);
        enumerate_reps(coins, idx + 1, rest - t * c, chosen, out);
        for (std::uint64_t u = 0; u < t; ++u) chosen.pop_back();
    }
}

inline EnumerationResult enumerate_all(const asnp::CoinSet& c, std::uint64_t n) {
    EnumerationResult out;
    std::vector<std::uint64_t> chosen;
    enumerate_reps(c.coins, 0, n, chosen, out);
    for (auto& rep : out.optimal) std::sort(rep.begin(), rep.end());
    std::sort(out.optimal.begin(), out.optimal.end());
    return out;
}

// Top-down memoized search over (coin index, remaining target); a different
// traversal than the library's bottom-up table.
inline std::uint32_t solve_recursive(const std::vector<std::uint64_t>& coins,
                                     std::vector<std::uint32_t>& memo, std::uint64_t rest) {
    if (rest == 0) return 0;
    if (memo[rest] != 0xfffffffeu) return memo[rest];
    std::uint32_t best = 0xffffffffu;
    for (std::uint64_t c : coins) {
        if (c > rest) continue;
        std::uint32_t sub = solve_recursive(coins, memo, rest - c);
        if (sub != 0xffffffffu && sub + 1 < best) best = sub + 1;
    }
    return memo[rest] = best;
}

inline std::optional<std::uint64_t> solution_value_recursive(const asnp::CoinSet& c,
                                                             std::uint64_t n) {
    std::vector<std::uint32_t> memo(n + 1, 0xfffffffeu);
    std::uint32_t v = solve_recursive(c.coins, memo, n);
    if (v == 0xffffffffu) return std::nullopt;
    return v;
}

// Carry-freeness of a product via the weight identity rather than digit
// convolution: s_p(nm) == s_p(n) s_p(m).
inline bool carryfree_mul_by_weight(const mpz_class& n, const mpz_class& m, std::uint64_t p) {
    return weight_greedy(n * m, p) == weight_greedy(n, p) * weight_greedy(m, p);
}

// Unrestricted witness search: scan the full range ell < p^k for every
// k <= k_max and report the smallest valid w. Exponential in k_max; only for
// small instances.
struct WitnessHit {
    std::uint64_t w, k, ell;
};

inline std::optional<WitnessHit> smallest_witness_full_scan(std::uint64_t nu, std::uint64_t p,
                                                            std::uint64_t k_max) {
    std::optional<WitnessHit> best;
    mpz_class pk = 1;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        pk *= p;
        mpz_class base = pk - 1;
        for (mpz_class ell = 1; ell < pk; ++ell) {
            mpz_class prod = base * ell;
            if (prod % nu != 0) continue;
            mpz_class w = prod / nu;
            if (best && w >= best->w) continue;
            if (!carryfree_mul_by_weight(nu, w, p)) continue;
            best = WitnessHit{w.get_ui(), k, ell.get_ui()};
        }
    }
    return best;
}

// Naive powering by repeated multiplication.
inline asnp::FieldContext::Elem pow_naive(const asnp::FieldContext& F,
                                          asnp::FieldContext::Elem x, std::uint64_t e) {
    asnp::FieldContext::Elem r = F.one();
    for (std::uint64_t i = 0; i < e; ++i) r = F.mul(r, x);
    return r;
}

// f(alpha*x + beta) expanded term by term with naive polynomial products
// over the field.
inline std::map<std::uint64_t, asnp::FieldContext::Elem> affine_substitute(
    const asnp::FieldContext& F, const std::map<std::uint64_t, asnp::FieldContext::Elem>& f,
    asnp::FieldContext::Elem alpha, asnp::FieldContext::Elem beta) {
    std::map<std::uint64_t, asnp::FieldContext::Elem> out;
    for (const auto& [e, c] : f) {
        // (alpha x + beta)^e by repeated multiplication
        std::vector<asnp::FieldContext::Elem> poly{F.one()};  // coefficients low-to-high
        for (std::uint64_t t = 0; t < e; ++t) {
            std::vector<asnp::FieldContext::Elem> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] = F.add(next[i], F.mul(poly[i], beta));
                next[i + 1] = F.add(next[i + 1], F.mul(poly[i], alpha));
            }
            poly = std::move(next);
        }
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0) continue;
            auto it = out.find(i);
            asnp::FieldContext::Elem merged = F.add(it == out.end() ? 0 : it->second,
                                                    F.mul(c, poly[i]));
            if (merged == 0) {
                if (it != out.end()) out.erase(it);
            } else {
                out[i] = merged;
            }
        }
    }
    out.erase(0);  // constant term does not affect the curve
    return out;
}

}  // namespace oracles

#include "asnp/changemaking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "asnp/padic.hpp"

namespace asnp {

namespace {

constexpr std::uint64_t kMaxDpTarget = 100'000'000;  // dense table guard

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("power exceeds 64 bits");
        r *= base;
    }
    return r;
}

}  // namespace

std::uint64_t CoinSet::q() const { return checked_pow(p, a); }

std::uint64_t CoinSet::nu_weight() const { return weight(nu, p); }

CoinSet make_coin_set(std::uint64_t p, std::uint32_t a, std::vector<std::uint64_t> support) {
    require_prime(p);
    if (a < 1) throw std::invalid_argument("a must be positive");
    if (support.empty()) throw std::invalid_argument("support must be nonempty");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (std::uint64_t i : support) {
        if (i == 0 || i % p == 0) {
            throw std::invalid_argument("support elements must be positive and coprime to p");
        }
    }
    CoinSet c;
    c.p = p;
    c.a = a;
    c.support = std::move(support);
    std::uint64_t best = 0;
    std::size_t hits = 0;
    for (std::uint64_t i : c.support) {
        std::uint64_t w = weight(i, p);
        if (w > best) {
            best = w;
            c.nu = i;
            hits = 1;
        } else if (w == best) {
            ++hits;
        }
    }
    c.nu_unique = hits == 1;
    std::uint64_t pj = 1;
    for (std::uint32_t j = 0; j < a; ++j) {
        for (std::uint64_t i : c.support) {
            if (i > UINT64_MAX / pj) throw std::overflow_error("coin value exceeds 64 bits");
            c.coins.push_back(i * pj);
            c.coin_i.push_back(i);
            c.coin_j.push_back(j);
        }
        if (j + 1 < a) pj *= p;
    }
    // sort coins with their index pairs
    std::vector<std::size_t> order(c.coins.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return c.coins[x] < c.coins[y]; });
    CoinSet sorted = c;
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted.coins[k] = c.coins[order[k]];
        sorted.coin_i[k] = c.coin_i[order[k]];
        sorted.coin_j[k] = c.coin_j[order[k]];
    }
    return sorted;
}

std::vector<std::uint32_t> solution_table(const CoinSet& c, std::uint64_t max_n) {
    if (max_n > kMaxDpTarget) {
        throw std::invalid_argument("target too large for the dense solution table");
    }
    std::vector<std::uint32_t> dp(max_n + 1, kNoRepresentation);
    dp[0] = 0;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        std::uint32_t best = kNoRepresentation;
        for (std::uint64_t coin : c.coins) {
            if (coin > n) break;
            std::uint32_t prev = dp[n - coin];
            if (prev != kNoRepresentation && prev + 1 < best) best = prev + 1;
        }
        dp[n] = best;
    }
    return dp;
}

std::optional<std::uint64_t> solution_value(const CoinSet& c, std::uint64_t n) {
    std::vector<std::uint32_t> dp = solution_table(c, n);
    if (dp[n] == kNoRepresentation) return std::nullopt;
    return dp[n];
}

namespace {

void enumerate_optimal(const CoinSet& c, const std::vector<std::uint32_t>& dp,
                       std::uint64_t n, std::size_t min_coin_index,
                       std::vector<std::size_t>& chosen,
                       std::vector<Representation>& out, std::size_t limit,
                       std::uint64_t target) {
    if (n == 0) {
        if (out.size() >= limit) {
            throw std::runtime_error("too many optimal representations to enumerate");
        }
        Representation rep;
        rep.target = target;
        rep.size = chosen.size();
        // collapse chosen coin indices into multiplicities
        for (std::size_t k = 0; k < chosen.size();) {
            std::size_t run = k;
            while (run < chosen.size() && chosen[run] == chosen[k]) ++run;
            rep.coin_multiplicities.emplace_back(c.coin_i[chosen[k]], c.coin_j[chosen[k]],
                                                 run - k);
            k = run;
        }
        out.push_back(std::move(rep));
        return;
    }
    for (std::size_t k = min_coin_index; k < c.coins.size(); ++k) {
        std::uint64_t coin = c.coins[k];
        if (coin > n) break;
        if (dp[n - coin] != kNoRepresentation && dp[n - coin] + 1 == dp[n]) {
            chosen.push_back(k);
            enumerate_optimal(c, dp, n - coin, k, chosen, out, limit, target);
            chosen.pop_back();
        }
    }
}

}  // namespace

std::vector<Representation> solve(const CoinSet& c, std::uint64_t n, std::size_t limit) {
    std::vector<std::uint32_t> dp = solution_table(c, n);
    std::vector<Representation> out;
    if (dp[n] == kNoRepresentation) return out;
    std::vector<std::size_t> chosen;
    enumerate_optimal(c, dp, n, 0, chosen, out, limit, n);
    return out;
}

mpq_class weight_lower_bound(const CoinSet& c, std::uint64_t n) {
    mpq_class r(static_cast<unsigned long>(weight(n, c.p)),
                static_cast<unsigned long>(c.nu_weight()));
    r.canonicalize();
    return r;
}

TightnessReport is_tight(const CoinSet& c, std::uint64_t n) {
    TightnessReport report;
    report.target = n;
    report.bound = weight_lower_bound(c, n);
    std::optional<std::uint64_t> m = solution_value(c, n);
    if (!m) return report;
    report.feasible = true;
    report.solution_value = *m;
    // tight iff M * s_p(nu) == s_p(n) exactly
    report.tight = *m * c.nu_weight() == weight(n, c.p);
    if (!report.tight || !c.nu_unique) return report;
    if (n == 0) {
        report.witness = 0;
        report.factorization_carryfree = true;
        return report;
    }
    std::vector<Representation> reps = solve(c, n);
    if (reps.size() != 1) {
        throw std::logic_error("tight target under a unique maximum must have a unique solution");
    }
    std::uint64_t w = 0;
    std::vector<std::uint32_t> digits(c.a, 0);
    for (const auto& [i, j, t] : reps[0].coin_multiplicities) {
        if (i != c.nu) {
            throw std::logic_error("tight solution uses a coin outside the nu family");
        }
        if (t >= c.p) {
            throw std::logic_error("tight solution multiplicity is not a base-p digit");
        }
        digits[j] = static_cast<std::uint32_t>(t);
        w += t * checked_pow(c.p, j);
    }
    report.witness = w;
    report.witness_digits = std::move(digits);
    report.factorization_carryfree = is_carryfree_mul(c.nu, w, c.p) && c.nu * mpz_class(w) == n;
    if (!report.factorization_carryfree) {
        throw std::logic_error("extracted witness does not give a carry-free factorization");
    }
    return report;
}

}  // namespace asnp

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "asnp/changemaking.hpp"

namespace asnp {

// A permutation sigma of a finite support set, stored as a map. The support
// is the key set.
struct MinimizerPair {
    std::map<std::uint64_t, std::uint64_t> sigma;
};

// True iff M_C(q*l - sigma(l)) attains s_p(q*l - sigma(l)) / s_p(nu) for
// every l in the support, with all targets positive and feasible.
bool is_minimizer(const MinimizerPair& pair, const CoinSet& c);

// Directed graph on {1..nu}: edge l -> l' iff the target q*l - l' is
// positive, feasible, and tight. Requires a unique maximal-weight element.
struct TightnessGraph {
    std::uint64_t nu = 0;
    std::vector<std::vector<bool>> adj;  // adj[l-1][l'-1]

    bool edge(std::uint64_t l, std::uint64_t lp) const { return adj[l - 1][lp - 1]; }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const;
};

TightnessGraph tightness_graph(const CoinSet& c);

// The union of all vertex-disjoint cycles of the tightness graph, i.e. the
// unique maximal minimizer. Cycles are listed with their smallest vertex
// first; height is the total vertex count.
struct MaximalMinimizer {
    std::vector<std::vector<std::uint64_t>> cycles;
    std::vector<std::uint64_t> support;  // sorted
    std::uint64_t height = 0;
};

std::optional<MaximalMinimizer> maximal_minimizer(const CoinSet& c);

// #(support of the maximal minimizer); 0 when there is none.
std::uint64_t height(const CoinSet& c);

}  // namespace asnp

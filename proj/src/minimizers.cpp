#include "asnp/minimizers.hpp"

#include <algorithm>
#include <stdexcept>

#include "asnp/padic.hpp"

namespace asnp {

namespace {

bool target_tight(const CoinSet& c, const std::vector<std::uint32_t>& dp, std::uint64_t n) {
    if (n >= dp.size() || dp[n] == kNoRepresentation) return false;
    return static_cast<std::uint64_t>(dp[n]) * c.nu_weight() == weight(n, c.p);
}

}  // namespace

bool is_minimizer(const MinimizerPair& pair, const CoinSet& c) {
    if (pair.sigma.empty()) throw std::invalid_argument("support must be nonempty");
    std::uint64_t q = c.q();
    std::uint64_t max_target = 0;
    for (const auto& [l, sl] : pair.sigma) {
        if (l == 0 || sl == 0) throw std::invalid_argument("support elements must be positive");
        if (pair.sigma.find(sl) == pair.sigma.end()) {
            throw std::invalid_argument("sigma must map the support onto itself");
        }
        if (q * l <= sl) return false;  // nonpositive target
        max_target = std::max(max_target, q * l - sl);
    }
    // bijectivity: values must be pairwise distinct
    {
        std::vector<std::uint64_t> vals;
        for (const auto& kv : pair.sigma) vals.push_back(kv.second);
        std::sort(vals.begin(), vals.end());
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) {
            throw std::invalid_argument("sigma is not a bijection");
        }
    }
    std::vector<std::uint32_t> dp = solution_table(c, max_target);
    for (const auto& [l, sl] : pair.sigma) {
        if (!target_tight(c, dp, q * l - sl)) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> TightnessGraph::edges() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t l = 1; l <= nu; ++l) {
        for (std::uint64_t lp = 1; lp <= nu; ++lp) {
            if (edge(l, lp)) out.emplace_back(l, lp);
        }
    }
    return out;
}

TightnessGraph tightness_graph(const CoinSet& c) {
    if (!c.nu_unique) {
        throw std::invalid_argument("tightness graph requires a unique maximal-weight element");
    }
    TightnessGraph g;
    g.nu = c.nu;
    std::uint64_t q = c.q();
    std::vector<std::uint32_t> dp = solution_table(c, q * c.nu);
    g.adj.assign(c.nu, std::vector<bool>(c.nu, false));
    for (std::uint64_t l = 1; l <= c.nu; ++l) {
        for (std::uint64_t lp = 1; lp <= c.nu; ++lp) {
            if (q * l <= lp) continue;
            g.adj[l - 1][lp - 1] = target_tight(c, dp, q * l - lp);
        }
    }
    return g;
}

namespace {

// Tarjan strongly connected components, iterative.
std::vector<std::vector<std::uint64_t>> strongly_connected(const TightnessGraph& g) {
    std::uint64_t n = g.nu;
    std::vector<int> index(n + 1, -1), low(n + 1, 0);
    std::vector<bool> on_stack(n + 1, false);
    std::vector<std::uint64_t> stack;
    std::vector<std::vector<std::uint64_t>> sccs;
    int next_index = 0;

    struct Frame {
        std::uint64_t v;
        std::uint64_t next_child;
    };
    for (std::uint64_t root = 1; root <= n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 1}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            bool descended = false;
            while (f.next_child <= n) {
                std::uint64_t w = f.next_child++;
                if (!g.edge(f.v, w)) continue;
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 1});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
            }
            if (descended) continue;
            if (low[f.v] == index[f.v]) {
                std::vector<std::uint64_t> comp;
                std::uint64_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != f.v);
                sccs.push_back(std::move(comp));
            }
            std::uint64_t v = f.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
    }
    return sccs;
}

}  // namespace

std::optional<MaximalMinimizer> maximal_minimizer(const CoinSet& c) {
    TightnessGraph g = tightness_graph(c);
    MaximalMinimizer mm;
    for (auto& comp : strongly_connected(g)) {
        if (comp.size() == 1) {
            std::uint64_t v = comp[0];
            if (g.edge(v, v)) mm.cycles.push_back({v});
            continue;
        }
        // Distinct cyclic minimizers are disjoint, so a nontrivial strongly
        // connected component must be a single simple cycle. Verify rather
        // than assume.
        std::sort(comp.begin(), comp.end());
        std::uint64_t start = comp[0];
        std::vector<std::uint64_t> cycle{start};
        std::uint64_t cur = start;
        while (true) {
            std::optional<std::uint64_t> next;
            for (std::uint64_t w : comp) {
                if (!g.edge(cur, w)) continue;
                if (next) {
                    throw std::logic_error(
                        "cycle disjointness violated: vertex with two tight successors "
                        "inside one component");
                }
                next = w;
            }
            if (!next) {
                throw std::logic_error("strongly connected component without a successor");
            }
            if (*next == start) break;
            cycle.push_back(*next);
            cur = *next;
        }
        if (cycle.size() != comp.size()) {
            throw std::logic_error("cycle disjointness violated: component is not a single cycle");
        }
        mm.cycles.push_back(std::move(cycle));
    }
    if (mm.cycles.empty()) return std::nullopt;
    for (const auto& cyc : mm.cycles) {
        mm.support.insert(mm.support.end(), cyc.begin(), cyc.end());
    }
    std::sort(mm.support.begin(), mm.support.end());
    mm.height = mm.support.size();
    std::sort(mm.cycles.begin(), mm.cycles.end());
    return mm;
}

std::uint64_t height(const CoinSet& c) {
    std::optional<MaximalMinimizer> mm = maximal_minimizer(c);
    return mm ? mm->height : 0;
}

}  // namespace asnp

#pragma once

// Exact computation of the weighted Davenport and EGZ constants (and their
// classical A = {1} cases) by depth-first search over canonical multisets.
//
// A sequence is visited once, as its non-decreasing index tuple.  Both
// defining predicates are hereditary downward (a subsequence of a zero-sum
// free / selection-free sequence is again free), so the search extends only
// nodes that still fail the predicate and the deepest node determines the
// constant: value = 1 + max length of a failing sequence.
//
// The search never assumes the theorems it is used to test: termination is
// enforced by explicit length and node budgets, and running into either one
// yields an inconclusive result carrying the best bound found, never a
// silently wrong value.

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

#include "zsum/profile.hpp"

namespace zsum {

struct SearchBudget {
    int max_length = 0;                   // 0: derive 4*|G| + 16 at call time
    long long max_nodes = 1'000'000'000;  // per root branch
    bool allow_unit_pruning = true;
};

enum class SearchStatus { conclusive, inconclusive };

enum class ConstantKind { weighted_davenport, weighted_egz, davenport, egz };

struct ConstantResult {
    ConstantKind kind;
    GroupSpec group;
    std::optional<WeightSet> weights;  // absent for the classical kinds
    // The constant when status is conclusive; otherwise the best proven
    // lower bound (a failing sequence of length value-1 was found).
    int value = 1;
    Sequence witness;  // extremal sequence of length value-1
    unsigned long long nodes = 0;
    std::chrono::milliseconds elapsed{0};
    SearchStatus status = SearchStatus::conclusive;

    bool conclusive() const { return status == SearchStatus::conclusive; }
};

/// Least element of { u*x : u unit of Z/n }.
inline int unit_orbit_min(int x, int n) { return x == 0 ? 0 : std::gcd(x, n); }

namespace detail {

struct BranchOutcome {
    int best_len = 0;
    std::vector<int> witness;
    unsigned long long nodes = 0;
    bool truncated = false;  // node budget hit
    bool ceiling = false;    // a live node sat at the length cap
};

// Explores all canonical sequences starting with `root`.  `extend` mutates a
// state by one appended entry; `alive` tests whether the node still fails
// the defining predicate and may be extended.  Level buffers are reused
// across siblings, so the steady state allocates nothing.
template <class State, class Extend, class Alive>
BranchOutcome explore_root(const GroupSpec& G, const State& init, int root, int max_len,
                           long long max_nodes, Extend extend, Alive alive) {
    BranchOutcome out;
    std::vector<State> lvl(static_cast<std::size_t>(max_len) + 1, init);
    std::vector<int> path;
    path.reserve(max_len);

    ++out.nodes;
    extend(lvl[1], root);
    if (!alive(lvl[1])) return out;
    path.push_back(root);
    out.best_len = 1;
    out.witness = path;

    const int order = G.order();
    auto rec = [&](auto&& self, int depth, int last) -> bool {
        if (depth == max_len) {
            out.ceiling = true;
            return true;
        }
        for (int x = last; x < order; ++x) {
            if (out.nodes >= static_cast<unsigned long long>(max_nodes)) {
                out.truncated = true;
                return false;
            }
            ++out.nodes;
            lvl[depth + 1] = lvl[depth];
            extend(lvl[depth + 1], x);
            if (alive(lvl[depth + 1])) {
                path.push_back(x);
                if (depth + 1 > out.best_len) {
                    out.best_len = depth + 1;  // first hit at a depth is lex-least
                    out.witness = path;
                }
                const bool keep_going = self(self, depth + 1, x);
                path.pop_back();
                if (!keep_going) return false;
            }
        }
        return true;
    };
    rec(rec, 1, root);
    return out;
}

struct SearchSummary {
    int best_len = 0;
    std::vector<int> witness;
    unsigned long long nodes = 0;
    bool conclusive = true;
};

template <class State, class Extend, class Alive>
SearchSummary run_search(const GroupSpec& G, const State& init, int max_len, long long max_nodes,
                         bool unit_pruning, int jobs, Extend extend, Alive alive) {
    if (max_len < 1) throw std::invalid_argument("search length cap must be >= 1");
    if (max_nodes < 1) throw std::invalid_argument("search node cap must be >= 1");

    std::vector<int> roots;
    for (int x = 0; x < G.order(); ++x) {
        if (unit_pruning && G.is_cyclic() && unit_orbit_min(x, G.order()) != x) continue;
        roots.push_back(x);
    }

    std::vector<BranchOutcome> outcomes(roots.size());
    auto work = [&](std::size_t i) {
        outcomes[i] =
            explore_root(G, init, roots[i], max_len, max_nodes, extend, alive);
    };
    if (jobs <= 1 || roots.size() <= 1) {
        for (std::size_t i = 0; i < roots.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1))
                work(i);
        };
        std::vector<std::thread> pool;
        const std::size_t nworkers = std::min<std::size_t>(jobs, roots.size());
        pool.reserve(nworkers);
        for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Merge in root order; branches are disjoint lex ranges, so the first
    // branch attaining the maximum holds the lexicographically least witness.
    SearchSummary sum;
    for (const auto& o : outcomes) {
        sum.nodes += o.nodes;
        if (o.truncated || o.ceiling) sum.conclusive = false;
        if (o.best_len > sum.best_len) {
            sum.best_len = o.best_len;
            sum.witness = o.witness;
        }
    }
    return sum;
}

inline int resolved_length_cap(const SearchBudget& b, const GroupSpec& G) {
    return b.max_length > 0 ? b.max_length : 4 * G.order() + 16;
}

inline std::chrono::milliseconds since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0);
}

}  // namespace detail

/// D_A(G): one plus the maximal length of an A-zero-sum-free sequence.
/// The witness is the lexicographically least canonical free sequence of
/// maximal length.  If 0 is a weight the constant is 1 outright.
inline ConstantResult weighted_davenport_constant(const GroupSpec& G, const WeightSet& A,
                                                  SearchBudget budget = {}, int jobs = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    ConstantResult res{ConstantKind::weighted_davenport, G, A};
    if (A.contains_zero()) {
        res.elapsed = detail::since(t0);
        return res;  // value 1, empty witness
    }
    const auto sum = detail::run_search(
        G, ReachableSums(G), detail::resolved_length_cap(budget, G), budget.max_nodes,
        budget.allow_unit_pruning, jobs,
        [&A](ReachableSums& st, int x) { st.extend_in_place(x, A); },
        [](const ReachableSums& st) { return !st.zero_reachable(); });
    res.value = sum.best_len + 1;
    res.witness = Sequence::from_indices(sum.witness, G);
    res.nodes = sum.nodes;
    res.status = sum.conclusive ? SearchStatus::conclusive : SearchStatus::inconclusive;
    res.elapsed = detail::since(t0);
    return res;
}

/// E_A(G) with selections of length exactly n = |G|: one plus the maximal
/// length of a sequence admitting no weighted zero-sum selection over n
/// distinct positions.  Computed by search, never from the D_A identity.
inline ConstantResult weighted_egz_constant(const GroupSpec& G, const WeightSet& A, int n,
                                            SearchBudget budget = {}, int jobs = 1) {
    if (n != G.order())
        throw std::invalid_argument("EGZ constant is defined for selections of length |G|");
    const auto t0 = std::chrono::steady_clock::now();
    ConstantResult res{ConstantKind::weighted_egz, G, A};
    if (A.contains_zero()) {
        // Weight 0 everywhere turns any n positions into a zero-sum selection,
        // and no shorter sequence offers n positions at all.
        res.value = n;
        res.witness = Sequence::from_indices(std::vector<int>(n - 1, 0), G);
        res.elapsed = detail::since(t0);
        return res;
    }
    const auto sum = detail::run_search(
        G, SumProfile(G, n), detail::resolved_length_cap(budget, G), budget.max_nodes,
        budget.allow_unit_pruning, jobs,
        [&A](SumProfile& st, int x) { st.extend_in_place(x, A); },
        [n](const SumProfile& st) { return !st.contains(n, 0); });
    res.value = sum.best_len + 1;
    res.witness = Sequence::from_indices(sum.witness, G);
    res.nodes = sum.nodes;
    res.status = sum.conclusive ? SearchStatus::conclusive : SearchStatus::inconclusive;
    res.elapsed = detail::since(t0);
    return res;
}

/// Classical D(G) and E(G) as the A = {1} case.
inline std::pair<ConstantResult, ConstantResult> classical_constants(const GroupSpec& G,
                                                                     SearchBudget budget = {},
                                                                     int jobs = 1) {
    const WeightSet one({1}, G);
    ConstantResult d = weighted_davenport_constant(G, one, budget, jobs);
    d.kind = ConstantKind::davenport;
    d.weights.reset();
    ConstantResult e = weighted_egz_constant(G, one, G.order(), budget, jobs);
    e.kind = ConstantKind::egz;
    e.weights.reset();
    return {std::move(d), std::move(e)};
}

/// The standard lower-bound construction behind E_A >= D_A + n - 1: n-1
/// zeros prepended to an A-zero-sum-free base W.  Any selection over n
/// positions would have to take at least one entry of W, and the zeros
/// contribute nothing, so the result has no weighted zero-sum selection of
/// length n; that postcondition is checked, not assumed.
inline Sequence lower_bound_witness(const GroupSpec& G, const WeightSet& A, const Sequence& W) {
    if (has_weighted_zero_sum(W, A, G))
        throw std::invalid_argument("lower_bound_witness: base sequence is not A-zero-sum-free");
    const int n = G.order();
    std::vector<int> idx(static_cast<std::size_t>(n) - 1, 0);
    for (int i : W.indices(G)) idx.push_back(i);
    Sequence out = Sequence::from_indices(idx, G);
    if (has_exact_length_weighted_zero_sum(out, A, G, n))
        throw std::logic_error("lower_bound_witness: postcondition violated");
    return out;
}

}  // namespace zsum

#pragma once

// Brute-force reference implementations, used by the test and acceptance
// suites as independent oracles.  Nothing here shares code with the DP
// profile or the search: every subset of positions and every weight
// assignment is enumerated explicitly.

#include "zsum/profile.hpp"

namespace zsum {

struct OracleLimits {
    int max_length = 14;
    int max_weights = 4;
};

namespace detail {
inline void oracle_walk(const std::vector<int>& xs, const std::vector<int>& weights,
                        const GroupSpec& G, std::size_t i, int picked, int sum,
                        std::vector<IndexSet>& rows) {
    if (i == xs.size()) {
        rows[picked].set(sum);
        return;
    }
    oracle_walk(xs, weights, G, i + 1, picked, sum, rows);  // skip position i
    for (int a : weights)
        oracle_walk(xs, weights, G, i + 1, picked + 1, G.add_idx(sum, G.scale_idx(a, xs[i])),
                    rows);
}
}  // namespace detail

/// Same contract as sum_profile (rows 0..|S|), computed by explicit
/// enumeration.  Refuses inputs above the enumeration limits.
inline SumProfile oracle_weighted_sums(const Sequence& S, const WeightSet& A, const GroupSpec& G,
                                       OracleLimits limits = {}) {
    if (S.length() > limits.max_length)
        throw std::length_error("oracle refuses sequences longer than " +
                                std::to_string(limits.max_length));
    if (A.size() > limits.max_weights)
        throw std::length_error("oracle refuses weight sets larger than " +
                                std::to_string(limits.max_weights));
    std::vector<IndexSet> rows(static_cast<std::size_t>(S.length()) + 1, IndexSet(G.order()));
    detail::oracle_walk(S.indices(G), A.residues(), G, 0, 0, 0, rows);
    return SumProfile::from_rows(G, std::move(rows));
}

inline bool oracle_has_weighted_zero_sum(const Sequence& S, const WeightSet& A,
                                         const GroupSpec& G, OracleLimits limits = {}) {
    const SumProfile p = oracle_weighted_sums(S, A, G, limits);
    for (int k = 1; k <= S.length(); ++k)
        if (p.contains(k, 0)) return true;
    return false;
}

namespace detail {
// Enumerates canonical (non-decreasing) index tuples of the given length and
// reports whether any A-zero-sum-free one exists.
inline bool any_free_of_length(const GroupSpec& G, const WeightSet& A, int len,
                               OracleLimits limits) {
    std::vector<int> tuple;
    auto rec = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(tuple.size()) == len)
            return !oracle_has_weighted_zero_sum(Sequence::from_indices(tuple, G), A, G, limits);
        for (int x = from; x < G.order(); ++x) {
            tuple.push_back(x);
            const bool hit = self(self, x);
            tuple.pop_back();
            if (hit) return true;
        }
        return false;
    };
    return rec(rec, 0);
}
}  // namespace detail

/// Weighted Davenport constant by pure enumeration: the least k for which no
/// A-zero-sum-free sequence of length k exists.  Freeness is hereditary, so
/// stopping at the first empty level is sound.  length_cap guards runaway
/// inputs and throws if reached.
inline int oracle_davenport_constant(const GroupSpec& G, const WeightSet& A, int length_cap,
                                     OracleLimits limits = {}) {
    if (A.contains_zero()) return 1;
    for (int k = 1; k <= length_cap; ++k)
        if (!detail::any_free_of_length(G, A, k, limits)) return k;
    throw std::length_error("oracle davenport search exceeded its length cap");
}

}  // namespace zsum

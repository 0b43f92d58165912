#pragma once

// Weighted subsequence-sum reachability.
//
// SumProfile holds the boolean table (k, g): g is a sum of weighted picks
// over exactly k distinct entry positions.  ReachableSums collapses the
// length dimension for the any-length zero-sum predicate; it is the hot
// state of the Davenport search.  Both store their rows in one flat word
// block so a search node copy is a single memcpy.

#include "zsum/bitset.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

inline constexpr long long kDefaultCellBudget = 1LL << 28;

class SumProfile {
  public:
    SumProfile(const GroupSpec& G, int max_len, long long cell_budget = kDefaultCellBudget)
        : group_(G), max_len_(max_len), words_((G.order() + 63) / 64) {
        if (max_len < 0) throw std::invalid_argument("sum profile length must be >= 0");
        const long long cells = static_cast<long long>(G.order()) * (max_len + 1LL);
        if (cells > cell_budget)
            throw std::length_error("sum profile exceeds table budget of " +
                                    std::to_string(cell_budget) + " cells");
        data_.assign(static_cast<std::size_t>(max_len + 1) * words_, 0);
        data_[0] = 1;  // the empty selection sums to 0
    }

    static SumProfile from_rows(const GroupSpec& G, const std::vector<IndexSet>& rows) {
        SumProfile p(G, static_cast<int>(rows.size()) - 1);
        for (int k = 0; k <= p.max_len_; ++k) {
            p.row_mut(k)[0] = 0;
            for (int g : rows[k].to_indices()) p.row_mut(k)[g >> 6] |= uint64_t{1} << (g & 63);
        }
        return p;
    }

    const GroupSpec& group() const { return group_; }
    int max_len() const { return max_len_; }

    bool contains(int k, int g_idx) const {
        if (k < 0 || k > max_len_) return false;
        return (row(k)[g_idx >> 6] >> (g_idx & 63)) & 1;
    }

    IndexSet row_set(int k) const {
        IndexSet s(group_.order());
        for (int g = 0; g < group_.order(); ++g)
            if (contains(k, g)) s.set(g);
        return s;
    }

    /// New profile with one more sequence entry folded in.
    SumProfile extended(int x_idx, const WeightSet& A) const {
        SumProfile out(*this);
        out.extend_in_place(x_idx, A);
        return out;
    }

    /// Rows are updated top-down so the entry contributes to each selection
    /// at most once.
    void extend_in_place(int x_idx, const WeightSet& A) {
        shifts_.clear();
        for (int a : A.residues()) shifts_.push_back(group_.scale_idx(a, x_idx));
        for (int k = max_len_; k >= 1; --k)
            for (int e : shifts_)
                detail::words_or_shifted(row_mut(k), row(k - 1), words_, group_.order(), e,
                                         group_);
    }

    bool operator==(const SumProfile& o) const {
        return group_ == o.group_ && max_len_ == o.max_len_ && data_ == o.data_;
    }

  private:
    const uint64_t* row(int k) const { return data_.data() + static_cast<std::size_t>(k) * words_; }
    uint64_t* row_mut(int k) { return data_.data() + static_cast<std::size_t>(k) * words_; }

    GroupSpec group_;
    int max_len_ = 0;
    int words_ = 0;
    std::vector<uint64_t> data_;
    std::vector<int> shifts_;  // scratch, not part of the value
};

inline SumProfile sum_profile(const Sequence& S, const WeightSet& A, const GroupSpec& G,
                              int max_len, long long cell_budget = kDefaultCellBudget) {
    SumProfile p(G, max_len, cell_budget);
    for (int i : S.indices(G)) p.extend_in_place(i, A);
    return p;
}

/// Length-collapsed profile: the set of sums of nonempty weighted selections.
class ReachableSums {
  public:
    explicit ReachableSums(const GroupSpec& G)
        : group_(G), words_((G.order() + 63) / 64), data_(words_, 0) {}

    ReachableSums extended(int x_idx, const WeightSet& A) const {
        ReachableSums out(*this);
        out.extend_in_place(x_idx, A);
        return out;
    }

    void extend_in_place(int x_idx, const WeightSet& A) {
        old_ = data_;
        for (int a : A.residues()) {
            const int e = group_.scale_idx(a, x_idx);
            detail::words_or_shifted(data_.data(), old_.data(), words_, group_.order(), e,
                                     group_);
            data_[e >> 6] |= uint64_t{1} << (e & 63);  // x alone
        }
    }

    bool zero_reachable() const { return data_[0] & 1; }

    IndexSet sums() const {
        IndexSet s(group_.order());
        for (int g = 0; g < group_.order(); ++g)
            if ((data_[g >> 6] >> (g & 63)) & 1) s.set(g);
        return s;
    }

  private:
    GroupSpec group_;
    int words_ = 0;
    std::vector<uint64_t> data_;
    std::vector<uint64_t> old_;  // scratch snapshot
};

/// True iff some nonempty weighted selection of S sums to zero.  A sequence
/// for which this is false is A-zero-sum-free.
inline bool has_weighted_zero_sum(const Sequence& S, const WeightSet& A, const GroupSpec& G) {
    ReachableSums r(G);
    for (int i : S.indices(G)) {
        r.extend_in_place(i, A);
        if (r.zero_reachable()) return true;
    }
    return r.zero_reachable();
}

/// True iff some weighted selection over exactly n distinct positions sums
/// to zero.  Always false when |S| < n.
inline bool has_exact_length_weighted_zero_sum(const Sequence& S, const WeightSet& A,
                                               const GroupSpec& G, int n) {
    if (n < 1) throw std::invalid_argument("selection length must be >= 1");
    if (S.length() < n) return false;
    const SumProfile p = sum_profile(S, A, G, n);
    return p.contains(n, 0);
}

}  // namespace zsum

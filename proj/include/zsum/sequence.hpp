#pragma once

// Sequences (finite multisets of group elements) and weight sets.
//
// A sequence is stored sorted, so two sequences with the same multiset
// content compare equal and every traversal of it is deterministic.

#include <map>
#include <set>
#include <span>

#include "zsum/group.hpp"

namespace zsum {

class Sequence {
  public:
    Sequence() = default;

    Sequence(std::vector<GroupElement> entries, const GroupSpec& G)
        : entries_(std::move(entries)) {
        for (const auto& g : entries_)
            if (!G.valid(g)) throw std::invalid_argument("sequence entry not in group");
        std::sort(entries_.begin(), entries_.end());
    }

    static Sequence from_indices(std::span<const int> idx, const GroupSpec& G) {
        std::vector<GroupElement> e;
        e.reserve(idx.size());
        for (int i : idx) e.push_back(G.element_at(i));
        return Sequence(std::move(e), G);
    }

    int length() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    const std::vector<GroupElement>& entries() const { return entries_; }

    std::vector<int> indices(const GroupSpec& G) const {
        std::vector<int> idx;
        idx.reserve(entries_.size());
        for (const auto& g : entries_) idx.push_back(G.index_of(g));
        return idx;
    }

    int multiplicity(const GroupElement& g) const {
        auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), g);
        return static_cast<int>(hi - lo);
    }

    int max_multiplicity() const {
        int best = 0, run = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            run = (i > 0 && entries_[i] == entries_[i - 1]) ? run + 1 : 1;
            best = std::max(best, run);
        }
        return best;
    }

    std::vector<GroupElement> support() const {
        std::vector<GroupElement> s;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (i == 0 || !(entries_[i] == entries_[i - 1])) s.push_back(entries_[i]);
        return s;
    }

    GroupElement total(const GroupSpec& G) const {
        int acc = 0;
        for (const auto& g : entries_) acc = G.add_idx(acc, G.index_of(g));
        return G.element_at(acc);
    }

    /// True iff every entry of this sequence occurs in `other` at least as often.
    bool subsequence_of(const Sequence& other) const {
        std::size_t j = 0;
        for (const auto& g : entries_) {
            while (j < other.entries_.size() && other.entries_[j] < g) ++j;
            if (j == other.entries_.size() || !(other.entries_[j] == g)) return false;
            ++j;
        }
        return true;
    }

    bool operator==(const Sequence& o) const = default;
    auto operator<=>(const Sequence& o) const = default;

  private:
    std::vector<GroupElement> entries_;  // sorted
};

/// Nonempty weight set, stored as distinct residues modulo the group exponent.
/// Negative raw weights are accepted and reduced (e.g. -1 becomes exponent-1).
class WeightSet {
  public:
    WeightSet(std::span<const long long> raw, const GroupSpec& G) {
        if (raw.empty()) throw std::invalid_argument("weight set must be nonempty");
        const int m = G.exponent();
        std::set<int> reduced;
        for (long long a : raw) {
            long long r = a % m;
            if (r < 0) r += m;
            reduced.insert(static_cast<int>(r));
        }
        residues_.assign(reduced.begin(), reduced.end());
        has_zero_ = residues_.front() == 0;
    }

    WeightSet(std::initializer_list<long long> raw, const GroupSpec& G)
        : WeightSet(std::span<const long long>(raw.begin(), raw.size()), G) {}

    static WeightSet units(const GroupSpec& G) {
        if (!G.is_cyclic()) throw std::invalid_argument("units weight family needs a cyclic group");
        std::vector<long long> u;
        for (int x : units_of(G.order())) u.push_back(x);
        return WeightSet(u, G);
    }

    const std::vector<int>& residues() const { return residues_; }
    int size() const { return static_cast<int>(residues_.size()); }
    bool contains_zero() const { return has_zero_; }

    bool operator==(const WeightSet& o) const { return residues_ == o.residues_; }
    bool operator<(const WeightSet& o) const { return residues_ < o.residues_; }

  private:
    std::vector<int> residues_;  // sorted, distinct, in [0, exponent)
    bool has_zero_ = false;
};

/// The set { a*x : a in A }, duplicates collapsed.
inline std::vector<GroupElement> weighted_orbit(const GroupElement& x, const WeightSet& A,
                                                const GroupSpec& G) {
    std::set<int> out;
    const int xi = G.index_of(x);
    for (int a : A.residues()) out.insert(G.scale_idx(a, xi));
    std::vector<GroupElement> res;
    for (int i : out) res.push_back(G.element_at(i));
    return res;
}

/// Least sequence (entry-wise lexicographic on the sorted form) among
/// { u*S : u a unit of Z/n }.  Identity on non-cyclic groups.  Unit scaling
/// preserves weighted zero-sum structure for every weight set, which is what
/// makes this usable as a search symmetry reduction.
inline Sequence canonicalize_under_units(const Sequence& S, const GroupSpec& G) {
    if (!G.is_cyclic() || S.empty()) return S;
    const int n = G.order();
    const std::vector<int> base = S.indices(G);
    std::vector<int> best = base;
    std::vector<int> cur(base.size());
    for (int u : units_of(n)) {
        if (u == 1) continue;
        for (std::size_t i = 0; i < base.size(); ++i)
            cur[i] = static_cast<int>((static_cast<long long>(u) * base[i]) % n);
        std::sort(cur.begin(), cur.end());
        if (cur < best) best = cur;
    }
    return Sequence::from_indices(best, G);
}

}  // namespace zsum

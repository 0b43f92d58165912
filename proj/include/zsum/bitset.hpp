#pragma once

// Dense bit sets over group-element indices.  The single-word case (order
// <= 64) is the engineered path: every profile update there is a handful
// of rotate-and-OR word operations.

#include <bit>
#include <cstdint>

#include "zsum/group.hpp"

namespace zsum {
namespace detail {

/// dst |= { g + e : g in src }, addition in G.  Raw-word kernel shared by
/// IndexSet and the profile rows; dst and src must not alias.
inline void words_or_shifted(uint64_t* dst, const uint64_t* src, int nwords, int nbits, int e,
                             const GroupSpec& G) {
    if (G.is_cyclic() && nbits <= 64) {
        const uint64_t s = src[0];
        const int r = e % nbits;
        uint64_t rot = (r == 0) ? s : ((s << r) | (s >> (nbits - r)));
        if (nbits < 64) rot &= (uint64_t{1} << nbits) - 1;
        dst[0] |= rot;
        return;
    }
    const bool cyclic = G.is_cyclic();
    for (int k = 0; k < nwords; ++k) {
        uint64_t w = src[k];
        while (w) {
            const int j = (k << 6) + std::countr_zero(w);
            const int t = cyclic ? static_cast<int>((static_cast<long long>(j) + e) % nbits)
                                 : G.add_idx(j, e);
            dst[t >> 6] |= uint64_t{1} << (t & 63);
            w &= w - 1;
        }
    }
}

}  // namespace detail

class IndexSet {
  public:
    IndexSet() = default;
    explicit IndexSet(int size) : size_(size), w_((size + 63) / 64, 0) {}

    int universe() const { return size_; }
    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    void or_with(const IndexSet& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    }

    /// True iff every bit of this set is also set in `o`.
    bool subset_of(const IndexSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    bool intersects(const IndexSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    /// this |= { g + e : g in src }.  Aliasing src with *this is allowed.
    void or_shifted(const IndexSet& src, int e, const GroupSpec& G) {
        if (&src == this) {
            const std::vector<uint64_t> snap = w_;
            detail::words_or_shifted(w_.data(), snap.data(), static_cast<int>(w_.size()), size_,
                                     e, G);
            return;
        }
        detail::words_or_shifted(w_.data(), src.w_.data(), static_cast<int>(w_.size()), size_, e,
                                 G);
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            uint64_t w = w_[k];
            while (w) {
                out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    bool operator==(const IndexSet& o) const = default;

  private:
    int size_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace zsum

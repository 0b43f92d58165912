#pragma once

// Finite abelian groups as direct products of cyclic factors, with both a
// tuple-of-residues element view and a flat index view (0..order-1, mixed
// radix, first factor most significant).  The index view keeps the hot
// paths (bitset rows indexed by group element) allocation-free.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsum {

struct GroupElement {
    std::vector<int> residues;

    GroupElement() = default;
    explicit GroupElement(std::vector<int> r) : residues(std::move(r)) {}
    static GroupElement cyclic(int r) { return GroupElement{{r}}; }

    bool operator==(const GroupElement& o) const = default;
    auto operator<=>(const GroupElement& o) const = default;
};

class GroupSpec {
  public:
    explicit GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
        if (orders_.empty())
            throw std::invalid_argument("group must have at least one cyclic factor");
        long long ord = 1;
        long long exp = 1;
        for (int f : orders_) {
            if (f < 1)
                throw std::invalid_argument("cyclic factor order must be >= 1");
            ord *= f;
            if (ord > INT32_MAX)
                throw std::invalid_argument("group order exceeds supported range");
            exp = std::lcm(exp, static_cast<long long>(f));
        }
        order_ = static_cast<int>(ord);
        exponent_ = static_cast<int>(exp);
        place_.assign(orders_.size(), 1);
        for (int k = static_cast<int>(orders_.size()) - 2; k >= 0; --k)
            place_[k] = place_[k + 1] * orders_[k + 1];
    }

    static GroupSpec cyclic(int n) { return GroupSpec(std::vector<int>{n}); }

    const std::vector<int>& orders() const { return orders_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    int order() const { return order_; }
    int exponent() const { return exponent_; }
    bool is_cyclic() const { return orders_.size() == 1; }

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }

    bool valid(const GroupElement& g) const {
        if (static_cast<int>(g.residues.size()) != rank()) return false;
        for (int k = 0; k < rank(); ++k)
            if (g.residues[k] < 0 || g.residues[k] >= orders_[k]) return false;
        return true;
    }

    GroupElement zero() const { return GroupElement(std::vector<int>(orders_.size(), 0)); }

    // ---- flat index view -------------------------------------------------

    int index_of(const GroupElement& g) const {
        require(g);
        long long idx = 0;
        for (int k = 0; k < rank(); ++k) idx += static_cast<long long>(g.residues[k]) * place_[k];
        return static_cast<int>(idx);
    }

    GroupElement element_at(int idx) const {
        if (idx < 0 || idx >= order_) throw std::out_of_range("group element index");
        std::vector<int> r(orders_.size());
        for (int k = 0; k < rank(); ++k) r[k] = static_cast<int>((idx / place_[k]) % orders_[k]);
        return GroupElement(std::move(r));
    }

    int add_idx(int i, int j) const {
        if (orders_.size() == 1) return static_cast<int>((static_cast<long long>(i) + j) % order_);
        long long out = 0;
        for (int k = 0; k < rank(); ++k) {
            const long long o = orders_[k];
            const long long a = (i / place_[k]) % o;
            const long long b = (j / place_[k]) % o;
            out += ((a + b) % o) * place_[k];
        }
        return static_cast<int>(out);
    }

    int neg_idx(int i) const {
        if (orders_.size() == 1) return static_cast<int>((order_ - static_cast<long long>(i)) % order_);
        long long out = 0;
        for (int k = 0; k < rank(); ++k) {
            const long long o = orders_[k];
            const long long a = (i / place_[k]) % o;
            out += ((o - a) % o) * place_[k];
        }
        return static_cast<int>(out);
    }

    // a may be any integer; the result only depends on a mod exponent.
    int scale_idx(long long a, int i) const {
        long long am = a % exponent_;
        if (am < 0) am += exponent_;
        long long out = 0;
        for (int k = 0; k < rank(); ++k) {
            const long long o = orders_[k];
            const long long r = (i / place_[k]) % o;
            out += ((am * r) % o) * place_[k];
        }
        return static_cast<int>(out);
    }

  private:
    void require(const GroupElement& g) const {
        if (!valid(g)) throw std::invalid_argument("element does not belong to this group");
    }

    std::vector<int> orders_;
    std::vector<long long> place_;
    int order_ = 1;
    int exponent_ = 1;
};

inline GroupElement add(const GroupElement& g, const GroupElement& h, const GroupSpec& G) {
    return G.element_at(G.add_idx(G.index_of(g), G.index_of(h)));
}

inline GroupElement negate(const GroupElement& g, const GroupSpec& G) {
    return G.element_at(G.neg_idx(G.index_of(g)));
}

inline GroupElement scale(long long a, const GroupElement& g, const GroupSpec& G) {
    return G.element_at(G.scale_idx(a, G.index_of(g)));
}

/// Residues of Z/n coprime to n, ascending.  units_of(1) == {0}.
inline std::vector<int> units_of(int n) {
    if (n < 1) throw std::invalid_argument("units_of: n must be >= 1");
    if (n == 1) return {0};
    std::vector<int> u;
    for (int x = 1; x < n; ++x)
        if (std::gcd(x, n) == 1) u.push_back(x);
    return u;
}

}  // namespace zsum

#pragma once

// Executable checkers for the two imported theorems used by the main
// identity: the DeVos–Goddyn–Mohar sumset lower bound and the Yuan–Zeng
// subsequence theorem.  These certify concrete instances; a failing
// instance is either an implementation bug or (far more interesting) a
// falsifying input, and is always surfaced loudly by the callers.

#include <optional>

#include "zsum/profile.hpp"

namespace zsum {

/// Ordered list of nonempty subsets of G (the blocks one element is drawn
/// from when forming a sumset of l terms over distinct indices).
struct SetSequence {
    std::vector<std::vector<GroupElement>> sets;

    int size() const { return static_cast<int>(sets.size()); }
};

namespace detail {

inline std::vector<IndexSet> setseq_masks(const SetSequence& A, const GroupSpec& G) {
    std::vector<IndexSet> masks;
    masks.reserve(A.sets.size());
    for (const auto& s : A.sets) {
        if (s.empty()) throw std::invalid_argument("set sequence members must be nonempty");
        IndexSet m(G.order());
        for (const auto& g : s) m.set(G.index_of(g));
        masks.push_back(std::move(m));
    }
    return masks;
}

/// Rows 0..l_max of the distinct-index sumset DP: row c after processing
/// all sets is Sigma_c(A).
inline std::vector<IndexSet> setseq_rows(const std::vector<IndexSet>& masks, int l_max,
                                         const GroupSpec& G) {
    std::vector<IndexSet> rows(static_cast<std::size_t>(l_max) + 1, IndexSet(G.order()));
    rows[0].set(0);
    int seen = 0;
    for (const auto& m : masks) {
        ++seen;
        const auto elems = m.to_indices();
        for (int c = std::min(seen, l_max); c >= 1; --c)
            for (int e : elems) rows[c].or_shifted(rows[c - 1], e, G);
    }
    return rows;
}

inline IndexSet shifted(const IndexSet& X, int e, const GroupSpec& G) {
    IndexSet out(X.universe());
    out.or_shifted(X, e, G);
    return out;
}

inline IndexSet stabilizer_mask(const IndexSet& X, const GroupSpec& G) {
    IndexSet H(G.order());
    if (!X.any()) {  // stab of the empty set: everything (vacuous)
        for (int h = 0; h < G.order(); ++h) H.set(h);
        return H;
    }
    for (int h = 0; h < G.order(); ++h)
        if (shifted(X, h, G) == X) H.set(h);
    return H;
}

inline std::vector<GroupElement> mask_elements(const IndexSet& m, const GroupSpec& G) {
    std::vector<GroupElement> out;
    for (int i : m.to_indices()) out.push_back(G.element_at(i));
    return out;
}

}  // namespace detail

/// Sigma_l(A): all sums of l terms taken from distinct members of A.
/// l == 0 gives {0}; l beyond the number of sets gives the empty set.
inline std::vector<GroupElement> setseq_sum(int l, const SetSequence& A, const GroupSpec& G) {
    if (l < 0) throw std::invalid_argument("sumset term count must be >= 0");
    if (l > A.size()) return {};
    const auto rows = detail::setseq_rows(detail::setseq_masks(A, G), l, G);
    return detail::mask_elements(rows[l], G);
}

/// stab(X) = { h : h + X = X }, always a subgroup; stab of the empty set is
/// the whole group by convention.
inline std::vector<GroupElement> stabilizer(const std::vector<GroupElement>& X,
                                            const GroupSpec& G) {
    IndexSet m(G.order());
    for (const auto& g : X) m.set(G.index_of(g));
    return detail::mask_elements(detail::stabilizer_mask(m, G), G);
}

struct BoundReport {
    int l = 0;
    long long sumset_size = 0;
    std::vector<GroupElement> stabilizer;
    long long bound = 0;
    bool holds = true;
};

/// Evaluates the DGM lower bound |Sigma_l(A)| >= |H| (1 - l + sum over
/// cosets Q of H of min(l, #{i : A_i meets Q})) with H = stab(Sigma_l(A)).
/// An empty Sigma_l falls outside the theorem's hypothesis and reports
/// holds = true with bound 0.
inline BoundReport dgm_bound_check(int l, const SetSequence& A, const GroupSpec& G) {
    const auto masks = detail::setseq_masks(A, G);
    BoundReport rep;
    rep.l = l;
    if (l < 0) throw std::invalid_argument("sumset term count must be >= 0");
    if (l > A.size()) {
        rep.stabilizer = detail::mask_elements(detail::stabilizer_mask(IndexSet(G.order()), G), G);
        return rep;  // vacuous: empty sumset
    }
    const auto rows = detail::setseq_rows(masks, l, G);
    const IndexSet& X = rows[l];
    const IndexSet H = detail::stabilizer_mask(X, G);
    rep.sumset_size = X.count();
    rep.stabilizer = detail::mask_elements(H, G);

    // Walk the cosets of H via least unvisited representatives.
    long long acc = 0;
    IndexSet visited(G.order());
    for (int g = 0; g < G.order(); ++g) {
        if (visited.test(g)) continue;
        const IndexSet coset = detail::shifted(H, g, G);
        visited.or_with(coset);
        int hit = 0;
        for (const auto& m : masks)
            if (m.intersects(coset)) ++hit;
        acc += std::min(static_cast<long long>(l), static_cast<long long>(hit));
    }
    rep.bound = static_cast<long long>(H.count()) * (1 - l + acc);
    rep.holds = rep.sumset_size >= rep.bound;
    return rep;
}

/// Checks Sigma_l(A_1 - c, ..., A_m - c) == Sigma_l(A) - l*c elementwise.
inline bool translation_shift_check(int l, const SetSequence& A, const GroupElement& c,
                                    const GroupSpec& G) {
    const auto masks = detail::setseq_masks(A, G);
    const int ci = G.index_of(c);
    std::vector<IndexSet> shifted_masks;
    shifted_masks.reserve(masks.size());
    for (const auto& m : masks) shifted_masks.push_back(detail::shifted(m, G.neg_idx(ci), G));
    if (l > static_cast<int>(masks.size())) return true;  // both sides empty
    const IndexSet lhs = detail::setseq_rows(shifted_masks, l, G)[l];
    const IndexSet rhs = detail::shifted(detail::setseq_rows(masks, l, G)[l],
                                         G.neg_idx(G.scale_idx(l, ci)), G);
    return lhs == rhs;
}

/// Yuan–Zeng witness search: a subsequence S1 of S with |S1| >= |S|+1-D(G)
/// and 0 in Sigma_k(S1) for every 1 <= k <= |S1|.  Hypotheses (maximal
/// multiplicity attained by 0, |S| >= |G|+D(G)-1) are checked, not assumed;
/// `davenport` is taken from the extremal search and trusted here.
///
/// Candidates are tried by decreasing length and, within a length, in
/// lexicographic order; the first valid one is returned.  Lengths above the
/// first k with 0 not in Sigma_k(S) are skipped: Sigma_k of a subsequence
/// is contained in Sigma_k(S), so no witness exists up there.  An empty
/// return value is an absence report - it would falsify the theorem.
inline std::optional<Sequence> yz_find_subsequence(const Sequence& S, const GroupSpec& G,
                                                   int davenport) {
    if (davenport < 1) throw std::invalid_argument("D(G) must be >= 1");
    const int t = S.length();
    if (S.multiplicity(G.zero()) != S.max_multiplicity())
        throw std::invalid_argument(
            "YZ hypothesis violated: maximal multiplicity not attained by 0");
    if (t < G.order() + davenport - 1)
        throw std::invalid_argument("YZ hypothesis violated: |S| < |G| + D(G) - 1");

    const WeightSet one({1}, G);
    const SumProfile full = sum_profile(S, one, G, t);
    int lstar = 0;
    while (lstar < t && full.contains(lstar + 1, 0)) ++lstar;
    const int need = t + 1 - davenport;
    if (lstar < need) return std::nullopt;

    std::vector<int> sup, mult;
    for (const auto& g : S.support()) {
        sup.push_back(G.index_of(g));
        mult.push_back(S.multiplicity(g));
    }
    const int nsup = static_cast<int>(sup.size());
    std::vector<int> rest(nsup + 1, 0);  // capacity left at and after support slot i
    for (int i = nsup - 1; i >= 0; --i) rest[i] = rest[i + 1] + mult[i];

    for (int len = lstar; len >= need; --len) {
        std::vector<SumProfile> lvl(static_cast<std::size_t>(nsup) + 1, SumProfile(G, len));
        std::vector<int> chosen(nsup, 0);
        auto rec = [&](auto&& self, int i, int rem) -> bool {
            if (i == nsup) {
                for (int k = 1; k <= len; ++k)
                    if (!lvl[nsup].contains(k, 0)) return false;
                return true;
            }
            const int hi = std::min(mult[i], rem);
            const int lo = std::max(0, rem - rest[i + 1]);
            // More copies of the smaller element first: lexicographic order.
            for (int w = hi; w >= lo; --w) {
                lvl[i + 1] = lvl[i];
                for (int c = 0; c < w; ++c) lvl[i + 1].extend_in_place(sup[i], one);
                chosen[i] = w;
                if (self(self, i + 1, rem - w)) return true;
            }
            chosen[i] = 0;
            return false;
        };
        if (rec(rec, 0, len)) {
            std::vector<int> idx;
            for (int i = 0; i < nsup; ++i) idx.insert(idx.end(), chosen[i], sup[i]);
            return Sequence::from_indices(idx, G);
        }
    }
    return std::nullopt;
}

/// The YZ corollary: for |S| >= |G| + D(G) - 1, 0 lies in Sigma_{k*m}(S)
/// for every 1 <= k <= (|S|+1-D(G))/m, m the exponent of G.
inline bool yz_corollary_check(const Sequence& S, const GroupSpec& G, int davenport) {
    const int t = S.length();
    if (t < G.order() + davenport - 1)
        throw std::invalid_argument("corollary needs |S| >= |G| + D(G) - 1");
    const int m = G.exponent();
    const int kmax = (t + 1 - davenport) / m;
    const SumProfile p = sum_profile(S, WeightSet({1}, G), G, std::min(t, kmax * m));
    for (int k = 1; k <= kmax; ++k)
        if (!p.contains(k * m, 0)) return false;
    return true;
}

}  // namespace zsum

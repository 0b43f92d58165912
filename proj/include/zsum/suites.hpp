#pragma once

// Randomized and exhaustive verification suites over the lemma checkers,
// plus the exhaustive Yuan-Zeng certification grid.  All randomness comes
// from a caller-supplied seed through mt19937_64, whose output stream is
// specified by the standard, so reports are reproducible across platforms.

#include <array>
#include <map>
#include <random>

#include "zsum/lemmas.hpp"
#include "zsum/search.hpp"
#include "zsum/text.hpp"

namespace zsum {

struct SuiteReport {
    std::string name;
    long long instances = 0;
    long long failures = 0;
    unsigned long long seed = 0;
    std::vector<std::string> failure_dumps;  // first 32, full reproduction data

    bool ok() const { return failures == 0; }
};

namespace detail {

inline uint64_t bounded(std::mt19937_64& rng, uint64_t k) { return rng() % k; }

inline void record_failure(SuiteReport& rep, std::string dump) {
    ++rep.failures;
    if (rep.failure_dumps.size() < 32) rep.failure_dumps.push_back(std::move(dump));
}

inline std::string format_set_sequence(const SetSequence& A) {
    std::string out;
    for (std::size_t i = 0; i < A.sets.size(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < A.sets[i].size(); ++j) {
            if (j) out += ',';
            out += format_element(A.sets[i][j]);
        }
    }
    return out;
}

inline SetSequence random_set_sequence(std::mt19937_64& rng, int m, const GroupSpec& G) {
    const int q = G.order();
    SetSequence A;
    for (int i = 0; i < m; ++i) {
        const uint64_t mask = 1 + bounded(rng, (uint64_t{1} << q) - 1);
        std::vector<GroupElement> set;
        for (int g = 0; g < q; ++g)
            if ((mask >> g) & 1) set.push_back(G.element_at(g));
        A.sets.push_back(std::move(set));
    }
    return A;
}

}  // namespace detail

/// Random DGM instances: cyclic groups and 2-factor products of order up to
/// order_max, up to 8 sets each.  Every instance must satisfy the bound.
inline SuiteReport dgm_random_suite(int order_max, long long instances,
                                    unsigned long long seed) {
    if (order_max < 1 || order_max > 36)
        throw std::invalid_argument("dgm random suite supports orders 1..36");
    SuiteReport rep{.name = "dgm-random", .seed = seed};
    std::mt19937_64 rng(seed);
    for (long long it = 0; it < instances; ++it) {
        GroupSpec G = GroupSpec::cyclic(1);
        if (order_max >= 4 && detail::bounded(rng, 2) == 0) {
            const int a = 2 + static_cast<int>(detail::bounded(rng, 5));
            const int bmax = order_max / a;
            if (bmax >= 2) {
                const int b = 2 + static_cast<int>(detail::bounded(rng, bmax - 1));
                G = GroupSpec({a, b});
            } else {
                G = GroupSpec::cyclic(1 + static_cast<int>(detail::bounded(rng, order_max)));
            }
        } else {
            G = GroupSpec::cyclic(1 + static_cast<int>(detail::bounded(rng, order_max)));
        }
        const int m = 1 + static_cast<int>(detail::bounded(rng, 8));
        const int l = 1 + static_cast<int>(detail::bounded(rng, m));
        const SetSequence A = detail::random_set_sequence(rng, m, G);
        ++rep.instances;
        const BoundReport r = dgm_bound_check(l, A, G);
        if (!r.holds)
            detail::record_failure(
                rep, "group=" + format_group(G) + " l=" + std::to_string(l) + " sets=" +
                         detail::format_set_sequence(A) + " size=" +
                         std::to_string(r.sumset_size) + " bound=" + std::to_string(r.bound));
    }
    return rep;
}

namespace detail {

// Exhaustive DGM walker for one small group: every multiset of m <= m_max
// nonempty subsets, every l <= m.  Subset masks fit a word, the sumset DP
// rows are maintained incrementally down the multiset tree, and per-mask
// rotation and stabilizer tables make one bound check a few dozen ops.
// Every cross_check_stride-th instance is re-evaluated through the public
// dgm_bound_check to tie the fast path to the reference one.
inline void dgm_exhaustive_group(const GroupSpec& G, int m_max, SuiteReport& rep,
                                 long long cross_check_stride) {
    const int q = G.order();
    const uint32_t nmasks = uint32_t{1} << q;

    std::vector<std::vector<uint32_t>> rot(q, std::vector<uint32_t>(nmasks));
    for (int e = 0; e < q; ++e) {
        std::vector<uint32_t> single(q);
        for (int j = 0; j < q; ++j) single[j] = uint32_t{1} << G.add_idx(j, e);
        rot[e][0] = 0;
        for (uint32_t m = 1; m < nmasks; ++m)
            rot[e][m] = rot[e][m & (m - 1)] | single[std::countr_zero(m)];
    }
    std::vector<uint32_t> stab(nmasks, 0);
    for (uint32_t x = 1; x < nmasks; ++x)
        for (int h = 0; h < q; ++h)
            if (rot[h][x] == x) stab[x] |= uint32_t{1} << h;

    std::map<uint32_t, std::vector<uint32_t>> coset_cache;
    auto cosets_of = [&](uint32_t H) -> const std::vector<uint32_t>& {
        auto it = coset_cache.find(H);
        if (it != coset_cache.end()) return it->second;
        std::vector<uint32_t> cs;
        uint32_t visited = 0;
        for (int g = 0; g < q; ++g) {
            if ((visited >> g) & 1) continue;
            const uint32_t c = rot[g][H];
            visited |= c;
            cs.push_back(c);
        }
        return coset_cache.emplace(H, std::move(cs)).first->second;
    };

    auto to_set_sequence = [&](const uint32_t* path, int d) {
        SetSequence A;
        for (int i = 0; i < d; ++i) {
            std::vector<GroupElement> set;
            for (int g = 0; g < q; ++g)
                if ((path[i] >> g) & 1) set.push_back(G.element_at(g));
            A.sets.push_back(std::move(set));
        }
        return A;
    };

    std::array<std::array<uint32_t, 9>, 9> rows{};
    std::array<uint32_t, 8> path{};
    std::array<int, 64> cnt{};
    rows[0][0] = 1;

    auto rec = [&](auto&& self, int depth, uint32_t first) -> void {
        for (uint32_t mask = first; mask < nmasks; ++mask) {
            const int d = depth + 1;
            rows[d][0] = 1;
            for (int c = std::min(d, m_max); c >= 1; --c) {
                uint32_t acc = rows[depth][c];
                uint32_t bits = mask;
                while (bits) {
                    acc |= rot[std::countr_zero(bits)][rows[depth][c - 1]];
                    bits &= bits - 1;
                }
                rows[d][c] = acc;
            }
            {
                uint32_t bits = mask;
                while (bits) {
                    ++cnt[std::countr_zero(bits)];
                    bits &= bits - 1;
                }
            }
            path[depth] = mask;

            for (int l = 1; l <= d; ++l) {
                const uint32_t X = rows[d][l];
                const uint32_t H = stab[X];
                long long acc = 0;
                if (H == 1) {
                    for (int g = 0; g < q; ++g) acc += std::min(l, cnt[g]);
                } else {
                    for (uint32_t Q : cosets_of(H)) {
                        int hit = 0;
                        for (int i = 0; i < d; ++i)
                            if (path[i] & Q) ++hit;
                        acc += std::min(l, hit);
                    }
                }
                const long long bound = static_cast<long long>(std::popcount(H)) * (1 - l + acc);
                const int size = std::popcount(X);
                ++rep.instances;
                if (size < bound) {
                    detail::record_failure(
                        rep, "group=" + format_group(G) + " l=" + std::to_string(l) + " sets=" +
                                 detail::format_set_sequence(to_set_sequence(path.data(), d)) +
                                 " size=" + std::to_string(size) + " bound=" +
                                 std::to_string(bound));
                }
                if (rep.instances % cross_check_stride == 0) {
                    const BoundReport ref = dgm_bound_check(l, to_set_sequence(path.data(), d), G);
                    if (ref.bound != bound || ref.sumset_size != size ||
                        ref.holds != (size >= bound))
                        detail::record_failure(
                            rep, "kernel/reference mismatch: group=" + format_group(G) +
                                     " l=" + std::to_string(l) + " sets=" +
                                     detail::format_set_sequence(to_set_sequence(path.data(), d)));
                }
            }

            if (d < m_max) self(self, d, mask);

            uint32_t bits = mask;
            while (bits) {
                --cnt[std::countr_zero(bits)];
                bits &= bits - 1;
            }
        }
    };
    rec(rec, 0, 1);
}

}  // namespace detail

/// Exhaustive DGM grid: all abelian groups of order <= order_max given as
/// one or two cyclic factors, all multisets of up to m_max nonempty subsets
/// (the bound is symmetric in the sets, so orderings are not repeated),
/// all l.  order_max above 10 is refused; the instance count explodes.
inline SuiteReport dgm_exhaustive_suite(int order_max = 8, int m_max = 4,
                                        long long cross_check_stride = 9973) {
    if (order_max < 1 || order_max > 10)
        throw std::invalid_argument("dgm exhaustive grid supports orders 1..10");
    if (m_max < 1 || m_max > 8) throw std::invalid_argument("dgm exhaustive grid needs m in 1..8");
    SuiteReport rep{.name = "dgm-exhaustive"};
    std::vector<GroupSpec> groups;
    for (int n = 1; n <= order_max; ++n) groups.push_back(GroupSpec::cyclic(n));
    for (int a = 2; a * 2 <= order_max; ++a)
        for (int b = a; a * b <= order_max; ++b) groups.push_back(GroupSpec({a, b}));
    for (const auto& G : groups) detail::dgm_exhaustive_group(G, m_max, rep, cross_check_stride);
    return rep;
}

/// Exhaustive Yuan-Zeng grid for cyclic groups: every sequence satisfying
/// the hypotheses (maximal multiplicity attained by 0) with
/// n+D-1 <= |S| <= n+D+1, up to unit-orbit duplicates, must yield a witness
/// subsequence, and the witness is re-validated through a fresh profile.
inline SuiteReport yz_suite(int n_max) {
    SuiteReport rep{.name = "yz-exhaustive"};
    for (int n = 1; n <= n_max; ++n) {
        const GroupSpec G = GroupSpec::cyclic(n);
        const WeightSet one({1}, G);
        const ConstantResult D = weighted_davenport_constant(G, one);
        if (!D.conclusive()) throw std::runtime_error("davenport search inconclusive in YZ suite");
        const int dval = D.value;
        const auto units = units_of(n);

        // sequences as multiplicity vectors, lex-least in their unit orbit
        std::vector<int> v(n, 0), w(n, 0);
        auto unit_canonical = [&]() {
            for (int u : units) {
                if (u == 1) continue;
                for (int g = 0; g < n; ++g) w[(u * g) % n] = v[g];
                // first differing multiplicity decides; more copies of the
                // smaller element means lexicographically smaller sequence
                for (int g = 0; g < n; ++g) {
                    if (w[g] == v[g]) continue;
                    if (w[g] > v[g]) return false;  // image is smaller: not canonical
                    break;
                }
            }
            return true;
        };

        for (int t = n + dval - 1; t <= n + dval + 1; ++t) {
            auto check_leaf = [&]() {
                if (!unit_canonical()) return;
                std::vector<int> idx;
                idx.reserve(t);
                for (int g = 0; g < n; ++g) idx.insert(idx.end(), v[g], g);
                const Sequence S = Sequence::from_indices(idx, G);
                ++rep.instances;
                const auto s1 = yz_find_subsequence(S, G, dval);
                if (!s1) {
                    detail::record_failure(rep, "ABSENCE: n=" + std::to_string(n) + " S=" +
                                                    format_sequence(S) + " D=" +
                                                    std::to_string(dval));
                    return;
                }
                bool valid = s1->length() >= t + 1 - dval && s1->subsequence_of(S);
                if (valid) {
                    const SumProfile p = sum_profile(*s1, one, G, s1->length());
                    for (int k = 1; k <= s1->length() && valid; ++k) valid = p.contains(k, 0);
                }
                if (!valid)
                    detail::record_failure(rep, "INVALID WITNESS: n=" + std::to_string(n) +
                                                    " S=" + format_sequence(S) + " S1=" +
                                                    format_sequence(*s1));
            };
            // v[0] = h(S) is the largest multiplicity by construction
            auto rec = [&](auto&& self, int g, int rem) -> void {
                if (g == n) {
                    if (rem == 0) check_leaf();
                    return;
                }
                const int hi = std::min(v[0], rem);
                const int lo = std::max(0, rem - v[0] * (n - g - 1));
                for (int x = lo; x <= hi; ++x) {
                    v[g] = x;
                    self(self, g + 1, rem - x);
                }
                v[g] = 0;
            };
            for (int v0 = (t + n - 1) / n; v0 <= t; ++v0) {
                v.assign(n, 0);
                v[0] = v0;
                if (n == 1) {
                    if (v0 == t) check_leaf();
                } else {
                    rec(rec, 1, t - v0);
                }
            }
        }
    }
    return rep;
}

/// Random translation-shift instances over one group.
inline SuiteReport shift_suite(const GroupSpec& G, long long instances,
                               unsigned long long seed) {
    if (G.order() > 36) throw std::invalid_argument("shift suite supports orders 1..36");
    SuiteReport rep{.name = "shift-random", .seed = seed};
    std::mt19937_64 rng(seed);
    for (long long it = 0; it < instances; ++it) {
        const int m = 1 + static_cast<int>(detail::bounded(rng, 6));
        const int l = static_cast<int>(detail::bounded(rng, m + 1));
        const SetSequence A = detail::random_set_sequence(rng, m, G);
        const GroupElement c = G.element_at(static_cast<int>(detail::bounded(rng, G.order())));
        ++rep.instances;
        if (!translation_shift_check(l, A, c, G))
            detail::record_failure(rep, "group=" + format_group(G) + " l=" + std::to_string(l) +
                                            " c=" + format_element(c) + " sets=" +
                                            detail::format_set_sequence(A));
    }
    return rep;
}

}  // namespace zsum

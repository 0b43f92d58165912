#pragma once

// Shared enumeration helpers for the test suites.

#include <functional>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum::testutil {

/// Calls fn for every canonical (non-decreasing) index tuple over Z/n of
/// each length in [0, max_len].
inline void for_each_multiset(int n, int max_len,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple;
    auto rec = [&](auto&& self, int from) -> void {
        fn(tuple);
        if (static_cast<int>(tuple.size()) == max_len) return;
        for (int x = from; x < n; ++x) {
            tuple.push_back(x);
            self(self, x);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
}

/// Calls fn for every nonempty A contained in {1, ..., n-1} with at most
/// max_size elements.
inline void for_each_weight_subset(int n, int max_size,
                                   const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> ws;
    auto rec = [&](auto&& self, int from) -> void {
        if (!ws.empty()) fn(ws);
        if (static_cast<int>(ws.size()) == max_size) return;
        for (int a = from; a < n; ++a) {
            ws.push_back(a);
            self(self, a + 1);
            ws.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace zsum::testutil

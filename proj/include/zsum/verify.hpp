#pragma once

// The E_A(n) = D_A(n) + n - 1 verification campaign.
//
// For every cell (n, A) both constants are computed by independent searches;
// the identity is never assumed.  The only flow of information from D_A to
// the E_A search is the length ceiling D_A + n + 2, which sits above the
// predicted extremal length D_A + n - 2, so a counterexample sequence would
// be found (or the cell reported inconclusive), never masked.
//
// Rows are emitted in a fixed order (n ascending, weight set lexicographic)
// and all row content is deterministic, so identical configurations produce
// byte-identical CSV/JSON no matter how many workers run.  elapsed_ms is 0
// unless timings are explicitly requested, because wall-clock values are the
// one thing that would break that reproducibility.

#include <atomic>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "zsum/search.hpp"
#include "zsum/text.hpp"

namespace zsum {

enum class OutputFormat { csv, json };

struct CampaignConfig {
    int n_min = 2;
    int n_max = 6;
    // singleton | pm1 | units | all-subsets | random:K:COUNT | explicit:1,-1
    std::vector<std::string> families;
    SearchBudget budget;
    int jobs = 1;
    unsigned long long seed = 0;
    int all_subsets_max = 8;  // gate for the all-subsets family
    bool timings = false;     // real elapsed_ms (breaks byte-reproducibility)
};

struct VerificationRow {
    int n = 0;
    std::string weights;
    int d_a = 0;
    int e_a = 0;
    int predicted = 0;
    bool equal = false;
    std::string witness_d;
    std::string witness_e;
    unsigned long long nodes = 0;
    long long elapsed_ms = 0;
    std::string status;  // ok | inconclusive | falsified
};

struct CampaignResult {
    std::vector<VerificationRow> rows;
    long long ok = 0;
    long long inconclusive = 0;
    long long falsified = 0;

    int exit_code() const { return falsified ? 3 : (inconclusive ? 2 : 0); }

    std::string summary() const {
        return "cells=" + std::to_string(rows.size()) + " ok=" + std::to_string(ok) +
               " inconclusive=" + std::to_string(inconclusive) +
               " falsified=" + std::to_string(falsified);
    }
};

namespace detail {

inline std::vector<WeightSet> expand_families(const CampaignConfig& cfg, int n,
                                              const GroupSpec& G) {
    std::set<std::vector<int>> seen;
    std::vector<WeightSet> out;
    auto push = [&](const WeightSet& A) {
        if (seen.insert(A.residues()).second) out.push_back(A);
    };
    for (const std::string& fam : cfg.families) {
        if (fam == "singleton") {
            push(WeightSet({1}, G));
        } else if (fam == "pm1") {
            push(WeightSet({1, -1}, G));
        } else if (fam == "units") {
            push(WeightSet::units(G));
        } else if (fam == "all-subsets") {
            if (n > cfg.all_subsets_max || n > 25)
                throw std::invalid_argument(
                    "all-subsets family is gated to n <= " +
                    std::to_string(std::min(cfg.all_subsets_max, 25)) +
                    " (raise --all-subsets-max)");
            for (uint32_t mask = 1; mask < (uint32_t{1} << (n - 1)); ++mask) {
                std::vector<long long> raw;
                for (int i = 0; i < n - 1; ++i)
                    if ((mask >> i) & 1) raw.push_back(i + 1);
                push(WeightSet(raw, G));
            }
        } else if (fam.starts_with("random:")) {
            const auto parts = split(fam, ':');
            if (parts.size() != 3)
                throw std::invalid_argument("random family syntax is random:K:COUNT");
            const int k = static_cast<int>(parse_int(parts[1], "random family subset size"));
            const long long count = parse_int(parts[2], "random family count");
            if (k < 1 || count < 1)
                throw std::invalid_argument("random family needs K >= 1 and COUNT >= 1");
            if (k > n - 1) continue;  // no k-subsets of {1..n-1}
            std::mt19937_64 rng(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (n + 1)));
            for (long long c = 0; c < count; ++c) {
                std::vector<long long> pool;
                for (int i = 1; i < n; ++i) pool.push_back(i);
                for (int i = 0; i < k; ++i)
                    std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
                push(WeightSet(std::vector<long long>(pool.begin(), pool.begin() + k), G));
            }
        } else if (fam.starts_with("explicit:")) {
            push(WeightSet(parse_weight_list(fam.substr(9)), G));
        } else {
            throw std::invalid_argument("unknown weight family '" + fam + "'");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const WeightSet& a, const WeightSet& b) { return a.residues() < b.residues(); });
    return out;
}

}  // namespace detail

/// Computes one campaign cell.  Exposed separately so tests can pin the
/// ceiling-widening invariance directly.
inline VerificationRow verify_cell(int n, const WeightSet& A, const SearchBudget& budget,
                                   bool timings) {
    const auto t0 = std::chrono::steady_clock::now();
    const GroupSpec G = GroupSpec::cyclic(n);
    VerificationRow row;
    row.n = n;
    row.weights = format_weights(A);

    const ConstantResult d = weighted_davenport_constant(G, A, budget);
    SearchBudget eb = budget;
    eb.max_length = d.value + n + 2;
    if (budget.max_length > 0) eb.max_length = std::min(eb.max_length, budget.max_length);
    const ConstantResult e = weighted_egz_constant(G, A, n, eb);

    row.d_a = d.value;
    row.e_a = e.value;
    row.predicted = d.value + n - 1;
    row.witness_d = format_sequence(d.witness);
    row.witness_e = format_sequence(e.witness);
    row.nodes = d.nodes + e.nodes;
    const bool conclusive = d.conclusive() && e.conclusive();
    row.equal = conclusive && e.value == row.predicted;
    row.status = !conclusive ? "inconclusive" : (row.equal ? "ok" : "falsified");
    if (timings) row.elapsed_ms = detail::since(t0).count();
    return row;
}

inline CampaignResult run_verify(const CampaignConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("verify needs 1 <= n_min <= n_max");
    if (cfg.jobs < 1) throw std::invalid_argument("verify needs jobs >= 1");
    if (cfg.families.empty()) throw std::invalid_argument("verify needs at least one family");

    std::vector<std::pair<int, WeightSet>> cells;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const GroupSpec G = GroupSpec::cyclic(n);
        for (const auto& A : detail::expand_families(cfg, n, G)) cells.emplace_back(n, A);
    }

    CampaignResult result;
    result.rows.resize(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
            result.rows[i] = verify_cell(cells[i].first, cells[i].second, cfg.budget,
                                         cfg.timings);
    };
    if (cfg.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const std::size_t nworkers = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(
                                                                         cells.size(), 1));
        for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& row : result.rows) {
        if (row.status == "ok") ++result.ok;
        else if (row.status == "inconclusive") ++result.inconclusive;
        else ++result.falsified;
    }
    return result;
}

inline constexpr const char* kCsvHeader =
    "n,weights,d_a,e_a,predicted,equal,witness_d,witness_e,nodes,elapsed_ms,status";

inline std::string render_csv(const std::vector<VerificationRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += csv_field(r.weights);
        out += ',';
        out += std::to_string(r.d_a);
        out += ',';
        out += std::to_string(r.e_a);
        out += ',';
        out += std::to_string(r.predicted);
        out += ',';
        out += r.equal ? "true" : "false";
        out += ',';
        out += csv_field(r.witness_d);
        out += ',';
        out += csv_field(r.witness_e);
        out += ',';
        out += std::to_string(r.nodes);
        out += ',';
        out += std::to_string(r.elapsed_ms);
        out += ',';
        out += r.status;
        out += '\n';
    }
    return out;
}

inline std::string render_json(const std::vector<VerificationRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"weights", r.weights},
                       {"d_a", r.d_a},
                       {"e_a", r.e_a},
                       {"predicted", r.predicted},
                       {"equal", r.equal},
                       {"witness_d", r.witness_d},
                       {"witness_e", r.witness_e},
                       {"nodes", r.nodes},
                       {"elapsed_ms", r.elapsed_ms},
                       {"status", r.status}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace zsum

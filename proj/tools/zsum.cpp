// zsum - weighted zero-sum constants of finite abelian groups.
//
// Subcommands:
//   dav        weighted Davenport constant D_A
//   egz        weighted EGZ constant E_A (selections of length |G|)
//   constants  classical D(G) and E(G)
//   verify     the E_A(n) = D_A(n) + n - 1 campaign over a grid of (n, A)
//   lemma      dgm / yz / shift checker suites
//   sumset     Sigma_l of a set sequence, its stabilizer and the DGM bound
//
// Exit codes: 0 success / all hold, 2 inconclusive search somewhere,
// 3 falsification candidate or failing lemma instance.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsum/zsum.hpp"

namespace {

struct BudgetFlags {
    long long nodes = 1'000'000'000;
    int len = 0;  // 0 = default 4|G|+16
    bool no_unit_pruning = false;

    zsum::SearchBudget budget() const {
        return {.max_length = len, .max_nodes = nodes, .allow_unit_pruning = !no_unit_pruning};
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& b) {
    cmd->add_option("--budget-nodes", b.nodes, "node cap per search branch");
    cmd->add_option("--budget-len", b.len, "sequence length ceiling (0 = 4|G|+16)");
    cmd->add_flag("--no-unit-pruning", b.no_unit_pruning,
                  "disable unit-orbit root pruning (cyclic groups)");
}

zsum::GroupSpec group_from(const std::string& group, int n) {
    if (!group.empty() && n > 0)
        throw CLI::ValidationError("pass either --group or --n, not both");
    if (!group.empty()) return zsum::parse_group(group);
    if (n > 0) return zsum::GroupSpec::cyclic(n);
    throw CLI::ValidationError("one of --group or --n is required");
}

const char* kind_name(zsum::ConstantKind k) {
    switch (k) {
        case zsum::ConstantKind::weighted_davenport: return "D_A";
        case zsum::ConstantKind::weighted_egz: return "E_A";
        case zsum::ConstantKind::davenport: return "D";
        case zsum::ConstantKind::egz: return "E";
    }
    return "?";
}

int print_constant(const zsum::ConstantResult& r, const std::string& format) {
    const char* status = r.conclusive() ? "conclusive" : "inconclusive";
    if (format == "json") {
        nlohmann::ordered_json j{{"kind", kind_name(r.kind)},
                                 {"group", zsum::format_group(r.group)},
                                 {"value", r.value},
                                 {"witness", zsum::format_sequence(r.witness)},
                                 {"nodes", r.nodes},
                                 {"elapsed_ms", r.elapsed.count()},
                                 {"status", status}};
        if (r.weights) j["weights"] = zsum::format_weights(*r.weights);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << kind_name(r.kind);
        if (r.weights) std::cout << "{" << zsum::format_weights(*r.weights) << "}";
        std::cout << "(" << zsum::format_group(r.group) << ") = " << r.value;
        if (!r.conclusive()) std::cout << "  (lower bound only: search inconclusive)";
        std::cout << "\n"
                  << "witness: " << zsum::format_sequence(r.witness) << "\n"
                  << "nodes: " << r.nodes << "  elapsed_ms: " << r.elapsed.count()
                  << "  status: " << status << "\n";
    }
    return r.conclusive() ? 0 : 2;
}

int print_suite(const zsum::SuiteReport& rep) {
    std::cout << rep.name << ": instances=" << rep.instances << " failures=" << rep.failures
              << " seed=" << rep.seed << "\n";
    for (const auto& dump : rep.failure_dumps) std::cout << "  FAIL " << dump << "\n";
    if (rep.failures > static_cast<long long>(rep.failure_dumps.size()))
        std::cout << "  ... " << rep.failures - rep.failure_dumps.size()
                  << " further failures not shown\n";
    return rep.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted zero-sum constants of finite abelian groups"};
    app.require_subcommand(1);

    std::string group, weights, format = "text";
    int n = 0, jobs = 1;
    BudgetFlags budget;

    // ---- dav / egz / constants -------------------------------------------
    auto* dav = app.add_subcommand("dav", "weighted Davenport constant D_A");
    auto* egz = app.add_subcommand("egz", "weighted EGZ constant E_A");
    auto* constants = app.add_subcommand("constants", "classical D(G) and E(G)");
    for (CLI::App* cmd : {dav, egz, constants}) {
        cmd->add_option("--n", n, "cyclic group order");
        cmd->add_option("--group", group, "group as cyclic factors, e.g. 2x4");
        cmd->add_option("--jobs", jobs, "parallel search workers")->check(CLI::PositiveNumber);
        cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        add_budget_flags(cmd, budget);
    }
    dav->add_option("--weights", weights, "weight set, e.g. 1,-1")->required();
    egz->add_option("--weights", weights, "weight set, e.g. 1,-1")->required();

    // ---- verify -----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "E_A(n) = D_A(n) + n - 1 campaign");
    zsum::CampaignConfig cfg;
    std::string out_path, verify_format = "csv", verify_weights;
    int single_n = 0;
    BudgetFlags verify_budget;
    verify->add_option("--n-min", cfg.n_min, "smallest cyclic order");
    verify->add_option("--n-max", cfg.n_max, "largest cyclic order");
    verify->add_option("--n", single_n, "single cyclic order (overrides --n-min/--n-max)");
    verify->add_option("--family", cfg.families,
                       "singleton | pm1 | units | all-subsets | random:K:COUNT | explicit:...");
    verify->add_option("--weights", verify_weights, "shorthand for --family explicit:...");
    verify->add_option("--jobs", cfg.jobs, "worker count")->check(CLI::PositiveNumber);
    verify->add_option("--seed", cfg.seed, "seed for the random weight family");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", out_path, "write the table here instead of stdout");
    verify->add_option("--all-subsets-max", cfg.all_subsets_max,
                       "gate for the all-subsets family");
    verify->add_flag("--timings", cfg.timings,
                     "emit real elapsed_ms (output is then not byte-reproducible)");
    add_budget_flags(verify, verify_budget);

    // ---- lemma ------------------------------------------------------------
    auto* lemma = app.add_subcommand("lemma", "checker suites for the imported theorems");
    lemma->require_subcommand(1);
    auto* dgm = lemma->add_subcommand("dgm", "DeVos-Goddyn-Mohar sumset bound");
    int order_max = 24, grid_order_max = 8, grid_m_max = 4, yz_n_max = 8, shift_n = 6;
    long long instances = 1000;
    unsigned long long seed = 0;
    bool exhaustive = false;
    dgm->add_option("--order-max", order_max, "largest group order for random instances");
    dgm->add_option("--instances", instances, "random instance count");
    dgm->add_option("--seed", seed, "random seed");
    dgm->add_flag("--exhaustive", exhaustive, "also run the exhaustive small grid");
    dgm->add_option("--grid-order-max", grid_order_max, "exhaustive grid group order cap");
    dgm->add_option("--grid-m-max", grid_m_max, "exhaustive grid set count cap");
    auto* yz = lemma->add_subcommand("yz", "Yuan-Zeng subsequence theorem, exhaustive grid");
    yz->add_option("--n-max", yz_n_max, "largest cyclic order");
    auto* shift = lemma->add_subcommand("shift", "translation shift law, random instances");
    shift->add_option("--n", shift_n, "cyclic group order");
    shift->add_option("--group", group, "group as cyclic factors");
    shift->add_option("--instances", instances, "random instance count");
    shift->add_option("--seed", seed, "random seed");

    // ---- sumset -----------------------------------------------------------
    auto* sumset = app.add_subcommand("sumset", "Sigma_l of a set sequence + DGM bound");
    std::string sets_text;
    int l = 0;
    sumset->add_option("--n", n, "cyclic group order");
    sumset->add_option("--group", group, "group as cyclic factors");
    sumset->add_option("--l", l, "number of terms")->required();
    sumset->add_option("--sets", sets_text, "semicolon-separated sets, e.g. 1,2;0;3")
        ->required();
    sumset->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dav || *egz) {
            const zsum::GroupSpec G = group_from(group, n);
            const zsum::WeightSet A = zsum::parse_weights(weights, G);
            const zsum::ConstantResult r =
                *dav ? zsum::weighted_davenport_constant(G, A, budget.budget(), jobs)
                     : zsum::weighted_egz_constant(G, A, G.order(), budget.budget(), jobs);
            return print_constant(r, format);
        }
        if (*constants) {
            const zsum::GroupSpec G = group_from(group, n);
            const auto [d, e] = zsum::classical_constants(G, budget.budget(), jobs);
            const int rc1 = print_constant(d, format);
            const int rc2 = print_constant(e, format);
            return std::max(rc1, rc2);
        }
        if (*verify) {
            if (single_n > 0) cfg.n_min = cfg.n_max = single_n;
            if (!verify_weights.empty()) cfg.families.push_back("explicit:" + verify_weights);
            if (cfg.families.empty()) cfg.families = {"singleton", "pm1", "units"};
            cfg.budget = verify_budget.budget();
            const zsum::CampaignResult res = zsum::run_verify(cfg);
            const std::string table = verify_format == "json" ? zsum::render_json(res.rows)
                                                              : zsum::render_csv(res.rows);
            if (out_path.empty()) {
                std::cout << table;
                std::cerr << res.summary() << "\n";
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open output file " + out_path);
                f << table;
                std::cout << res.summary() << "\n";
            }
            return res.exit_code();
        }
        if (*dgm) {
            const zsum::SuiteReport rep = zsum::dgm_random_suite(order_max, instances, seed);
            int rc = print_suite(rep);
            if (exhaustive) {
                const zsum::SuiteReport grid =
                    zsum::dgm_exhaustive_suite(grid_order_max, grid_m_max);
                rc = std::max(rc, print_suite(grid));
            }
            return rc;
        }
        if (*yz) return print_suite(zsum::yz_suite(yz_n_max));
        if (*shift) {
            const zsum::GroupSpec G =
                group.empty() ? zsum::GroupSpec::cyclic(shift_n) : zsum::parse_group(group);
            return print_suite(zsum::shift_suite(G, instances, seed));
        }
        if (*sumset) {
            const zsum::GroupSpec G = group_from(group, n);
            const zsum::SetSequence A = zsum::parse_set_sequence(sets_text, G);
            const auto sum = zsum::setseq_sum(l, A, G);
            const zsum::BoundReport rep = zsum::dgm_bound_check(l, A, G);
            if (format == "json") {
                nlohmann::ordered_json j{
                    {"group", zsum::format_group(G)},
                    {"l", l},
                    {"sumset", zsum::format_sequence(zsum::Sequence(sum, G))},
                    {"size", rep.sumset_size},
                    {"stabilizer",
                     zsum::format_sequence(zsum::Sequence(rep.stabilizer, G))},
                    {"bound", rep.bound},
                    {"holds", rep.holds}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "Sigma_" << l << " = {"
                          << zsum::format_sequence(zsum::Sequence(sum, G)) << "}  size "
                          << rep.sumset_size << "\n"
                          << "stabilizer = {"
                          << zsum::format_sequence(zsum::Sequence(rep.stabilizer, G)) << "}\n"
                          << "dgm bound = " << rep.bound << "  holds = "
                          << (rep.holds ? "yes" : "no") << "\n";
            }
            return rep.holds ? 0 : 3;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

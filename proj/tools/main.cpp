// Command-line surface for the exact Hurwitz number library: compute values
// by independent routes, cross-verify them, tabulate, check the generating
// function PDEs, and evaluate the conjectured genus-2 recursion.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/closed_form.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/factorization.hpp"
#include "hurwitz/graph_oracle.hpp"
#include "hurwitz/recursion.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/table.hpp"

namespace {

using hurwitz::BigInt;
using hurwitz::Partition;
using hurwitz::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
    int genus = 0;
    std::string partition_text;
    std::string methods = "";
    std::string format = "text";
    std::uint64_t budget = hurwitz::kDefaultDfsBudget;
    int graph_cap = hurwitz::kDefaultGraphOracleCap;
    std::string cache_path;
};

Rational compute_by_method(const std::string& method, int genus, const Partition& alpha,
                           const ComputeOptions& opt, hurwitz::HurwitzTable& table) {
    if (method == "closed") return hurwitz::hurwitz_closed(genus, alpha);
    if (method == "recursion") return hurwitz::hurwitz_recursive(genus, alpha, table);
    if (method == "conjecture") return hurwitz::genus2_conjecture(alpha.degree(), table);
    if (method == "dfs") {
        return hurwitz::hurwitz_from_factorizations(genus, alpha, hurwitz::OracleMethod::Dfs,
                                                    opt.budget);
    }
    if (method == "sieve") {
        return hurwitz::hurwitz_from_factorizations(genus, alpha, hurwitz::OracleMethod::Sieve);
    }
    if (method == "graph") {
        Rational t = genus == 0 ? Rational(hurwitz::tree_count_oracle(alpha, opt.graph_cap))
                                : hurwitz::genus1_count_oracle(alpha, opt.graph_cap);
        return hurwitz::hurwitz_from_graph_count(genus, alpha, t);
    }
    throw UsageError("unknown method '" + method + "'");
}

void validate_methods(int genus, const Partition& alpha, const std::vector<std::string>& methods) {
    if (methods.empty()) throw UsageError("no methods requested");
    if (genus == 2) {
        if (alpha != hurwitz::ones_partition(alpha.degree())) {
            throw UsageError("genus 2 supports only the identity profile 1,1,...,1");
        }
        for (const auto& m : methods) {
            if (m != "conjecture" && m != "dfs" && m != "sieve") {
                throw UsageError("genus 2 admits only methods conjecture, dfs, sieve");
            }
        }
        return;
    }
    for (const auto& m : methods) {
        if (m == "conjecture") throw UsageError("method conjecture requires --genus 2");
        if (m != "closed" && m != "recursion" && m != "dfs" && m != "sieve" && m != "graph") {
            throw UsageError("unknown method '" + m + "'");
        }
    }
}

int run_compute(const ComputeOptions& opt) {
    Partition alpha = Partition::from_string(opt.partition_text);
    if (opt.genus < 0 || opt.genus > 2) throw UsageError("genus must be 0, 1, or 2");
    std::vector<std::string> methods =
        split_csv(opt.methods.empty() ? (opt.genus == 2 ? "conjecture" : "closed") : opt.methods);
    validate_methods(opt.genus, alpha, methods);

    hurwitz::HurwitzTable table;
    if (!opt.cache_path.empty() && std::filesystem::exists(opt.cache_path)) {
        table = hurwitz::load_table(opt.cache_path);
    }

    std::vector<std::pair<std::string, Rational>> values;
    for (const auto& method : methods) {
        values.emplace_back(method, compute_by_method(method, opt.genus, alpha, opt, table));
    }
    bool agreement = true;
    for (const auto& [name, value] : values) agreement = agreement && value == values.front().second;

    const int r = hurwitz::r_value(opt.genus, alpha);
    const BigInt h = hurwitz::conjugacy_class_size(alpha);
    const BigInt prod = hurwitz::parts_product(alpha);

    if (opt.format == "json") {
        json out;
        out["genus"] = opt.genus;
        out["partition"] = alpha.parts();
        out["r"] = r;
        out["values"] = json::object();
        for (const auto& [name, value] : values) out["values"][name] = hurwitz::to_string(value);
        out["agreement"] = agreement;
        std::cout << out.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "genus,partition,r,method,G,c\n";
        for (const auto& [name, value] : values) {
            std::cout << opt.genus << ",\"" << alpha.to_string() << "\"," << r << ',' << name << ','
                      << hurwitz::to_string(value) << ',' << hurwitz::to_string(value * Rational(prod))
                      << "\n";
        }
    } else {
        std::cout << "genus      " << opt.genus << "\n";
        std::cout << "partition  " << alpha.to_string() << "\n";
        std::cout << "r          " << r << "\n";
        std::cout << "h          " << h.get_str() << "\n";
        for (const auto& [name, value] : values) {
            std::cout << name << std::string(name.size() < 10 ? 11 - name.size() : 1, ' ') << "G = "
                      << hurwitz::to_string(value)
                      << "  c = " << hurwitz::to_string(value * Rational(prod)) << "\n";
        }
        std::cout << "agreement  " << (agreement ? "yes" : "NO") << "\n";
    }

    if (!opt.cache_path.empty()) hurwitz::save_table(table, opt.cache_path);
    return agreement ? kExitOk : kExitMismatch;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
    int dmax = 4;
    std::string suites = "all";
    std::uint64_t budget = 10'000'000;
    int graph_cap = hurwitz::kDefaultGraphOracleCap;
};

struct VerifyTally {
    long checked = 0;
    long skipped = 0;
    long failed = 0;
};

void verify_line(VerifyTally& tally, const std::string& suite, int genus, const Partition& alpha,
                 bool skipped, const std::string& note, bool ok) {
    if (skipped) {
        ++tally.skipped;
        std::cout << "skip " << suite << " g=" << genus << " alpha=" << alpha.to_string() << ' '
                  << note << "\n";
        return;
    }
    ++tally.checked;
    if (!ok) ++tally.failed;
    std::cout << (ok ? "ok   " : "FAIL ") << suite << " g=" << genus
              << " alpha=" << alpha.to_string() << (ok ? "" : " " + note) << "\n";
}

bool dfs_within_budget(const Partition& alpha, int r, std::uint64_t budget) {
    const int d = alpha.degree();
    BigInt leaves = hurwitz::int_pow(BigInt(d * (d - 1) / 2), r);
    return leaves <= BigInt(budget);
}

int run_verify(const VerifyOptions& opt) {
    std::vector<std::string> suites = split_csv(opt.suites);
    auto wants = [&suites](const std::string& name) {
        return std::find(suites.begin(), suites.end(), "all") != suites.end() ||
               std::find(suites.begin(), suites.end(), name) != suites.end();
    };
    for (const auto& s : suites) {
        if (s != "all" && s != "closed-recursion" && s != "closed-dfs" && s != "dfs-sieve" &&
            s != "graph-formula" && s != "conversion") {
            throw UsageError("unknown suite '" + s + "'");
        }
    }

    VerifyTally tally;
    hurwitz::HurwitzTable table;
    hurwitz::FactorizationSieve sieve;

    for (int d = 1; d <= opt.dmax; ++d) {
        for (const Partition& alpha : hurwitz::partitions_of(d)) {
            for (int g = 0; g <= 1; ++g) {
                const Rational closed = hurwitz::hurwitz_closed(g, alpha);
                const int r = hurwitz::r_value(g, alpha);

                if (wants("closed-recursion")) {
                    bool ok = hurwitz::hurwitz_recursive(g, alpha, table) == closed;
                    verify_line(tally, "closed-recursion", g, alpha, false, "recursion != closed", ok);
                }
                if (wants("closed-dfs")) {
                    if (!dfs_within_budget(alpha, r, opt.budget)) {
                        verify_line(tally, "closed-dfs", g, alpha, true,
                                    "(budget " + std::to_string(opt.budget) + ")", true);
                    } else {
                        Rational oracle = hurwitz::hurwitz_from_factorizations(
                            g, alpha, hurwitz::OracleMethod::Dfs, opt.budget);
                        verify_line(tally, "closed-dfs", g, alpha, false, "dfs != closed",
                                    oracle == closed);
                    }
                }
                if (wants("dfs-sieve")) {
                    if (!dfs_within_budget(alpha, r, opt.budget)) {
                        verify_line(tally, "dfs-sieve", g, alpha, true,
                                    "(budget " + std::to_string(opt.budget) + ")", true);
                    } else {
                        bool ok = hurwitz::transitive_factorization_count_dfs(alpha, r, opt.budget) ==
                                  sieve.connected_count(alpha, r);
                        verify_line(tally, "dfs-sieve", g, alpha, false, "dfs != sieve", ok);
                    }
                }
                if (wants("graph-formula")) {
                    if (d > opt.graph_cap) {
                        verify_line(tally, "graph-formula", g, alpha, true,
                                    "(graph cap " + std::to_string(opt.graph_cap) + ")", true);
                    } else {
                        bool ok = g == 0 ? Rational(hurwitz::tree_count_oracle(alpha, opt.graph_cap)) ==
                                               hurwitz::tree_count_genus0(alpha)
                                         : hurwitz::genus1_count_oracle(alpha, opt.graph_cap) ==
                                               hurwitz::graph_count_genus1(alpha);
                        verify_line(tally, "graph-formula", g, alpha, false, "graph oracle != formula",
                                    ok);
                    }
                }
                if (wants("conversion")) {
                    Rational t = g == 0 ? hurwitz::tree_count_genus0(alpha)
                                        : hurwitz::graph_count_genus1(alpha);
                    bool ok = hurwitz::hurwitz_from_graph_count(g, alpha, t) == closed;
                    verify_line(tally, "conversion", g, alpha, false, "conversion != closed", ok);
                }
            }
        }
    }

    std::cout << "verify: " << tally.checked << " checked, " << tally.skipped << " skipped, "
              << tally.failed << " failed\n";
    return tally.failed == 0 ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------------------ table

int run_table(int genus, int dmax, const std::string& format) {
    if (genus != 0 && genus != 1) throw UsageError("table supports genus 0 and 1");
    hurwitz::HurwitzTable table;
    json rows = json::array();

    if (format == "csv") std::cout << "d,partition,r,G,c\n";
    for (int d = 1; d <= dmax; ++d) {
        for (const Partition& alpha : hurwitz::partitions_of(d)) {
            const Rational g_value = hurwitz::hurwitz_recursive(genus, alpha, table);
            const Rational c_value = g_value * Rational(hurwitz::parts_product(alpha));
            const int r = hurwitz::r_value(genus, alpha);
            if (format == "csv") {
                std::cout << d << ",\"" << alpha.to_string() << "\"," << r << ','
                          << hurwitz::to_string(g_value) << ',' << hurwitz::to_string(c_value) << "\n";
            } else if (format == "json") {
                json row;
                row["d"] = d;
                row["partition"] = alpha.parts();
                row["r"] = r;
                row["G"] = hurwitz::to_string(g_value);
                row["c"] = hurwitz::to_string(c_value);
                rows.push_back(row);
            } else {
                std::cout << "d=" << d << " alpha=" << alpha.to_string() << " r=" << r
                          << " G=" << hurwitz::to_string(g_value)
                          << " c=" << hurwitz::to_string(c_value) << "\n";
            }
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

// -------------------------------------------------------------- pde-check

int run_pde_check(int genus, int truncation) {
    hurwitz::PdeReport report = hurwitz::verify_pde(genus, truncation);
    std::cout << "residual: " << report.residual.size() << " monomials\n";
    for (const auto& [monomial, coeff] : report.residual) {
        std::cout << "  " << monomial.to_string() << " -> " << hurwitz::to_string(coeff) << "\n";
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

// ----------------------------------------------------------------- genus2

int run_genus2(int dmax, int sieve_dmax, const std::string& cache_path) {
    hurwitz::HurwitzTable table;
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        table = hurwitz::load_table(cache_path);
    }
    hurwitz::FactorizationSieve sieve;
    bool all_match = true;
    for (int d = 1; d <= dmax; ++d) {
        Rational conjecture = hurwitz::genus2_conjecture(d, table);
        std::cout << "d=" << d << " G2=" << hurwitz::to_string(conjecture);
        if (d <= sieve_dmax) {
            BigInt c2 = sieve.connected_count(hurwitz::ones_partition(d), 2 * d + 2);
            bool match = conjecture == Rational(c2);
            all_match = all_match && match;
            std::cout << " sieve=" << c2.get_str() << (match ? " match" : " MISMATCH");
        } else {
            std::cout << " sieve=- (beyond --sieve-dmax)";
        }
        std::cout << "\n";
    }
    if (!cache_path.empty()) hurwitz::save_table(table, cache_path);
    return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hurwitz numbers: closed forms, boundary recursions, and brute-force oracles"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing,!--no-timing", timing, "append a wall-clock footer");

    ComputeOptions compute_opt;
    CLI::App* compute = app.add_subcommand("compute", "compute G^g_alpha by one or more methods");
    compute->add_option("-g,--genus", compute_opt.genus, "genus (0, 1, or 2)")->required();
    compute->add_option("-p,--partition", compute_opt.partition_text, "partition, e.g. 2,1")
        ->required();
    compute->add_option("--method", compute_opt.methods,
                        "comma list of closed,recursion,dfs,sieve,graph (genus 2: "
                        "conjecture,dfs,sieve)");
    compute->add_option("--format", compute_opt.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    compute->add_option("--budget", compute_opt.budget, "dfs leaf-visit cap");
    compute->add_option("--graph-cap", compute_opt.graph_cap, "graph oracle vertex cap");
    compute->add_option("--cache", compute_opt.cache_path, "memo table file to load and update");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "cross-check the computation routes");
    verify->add_option("--dmax", verify_opt.dmax, "largest degree to check")
        ->required()
        ->check(CLI::Range(1, 10000));
    verify->add_option("--suite", verify_opt.suites,
                       "comma list of closed-recursion,closed-dfs,dfs-sieve,graph-formula,conversion "
                       "or all");
    verify->add_option("--budget", verify_opt.budget, "dfs leaf-visit cap (cells above are skipped)");
    verify->add_option("--graph-cap", verify_opt.graph_cap, "graph oracle vertex cap");

    int table_genus = 0, table_dmax = 1;
    std::string table_format = "csv";
    CLI::App* table_cmd = app.add_subcommand("table", "tabulate G^g for all partitions up to dmax");
    table_cmd->add_option("-g,--genus", table_genus, "genus (0 or 1)")->required();
    table_cmd->add_option("--dmax", table_dmax, "largest degree")->required()->check(CLI::Range(1, 10000));
    table_cmd->add_option("--format", table_format, "csv, text, or json")
        ->check(CLI::IsMember({"csv", "text", "json"}));

    int pde_genus = 0, pde_truncation = 1;
    CLI::App* pde = app.add_subcommand("pde-check", "verify the potential-function PDE");
    pde->add_option("-g,--genus", pde_genus, "genus (0 or 1)")->required()
        ->check(CLI::IsMember({0, 1}));
    pde->add_option("-D,--truncation", pde_truncation, "z-degree truncation (>= 1)")
        ->required()
        ->check(CLI::Range(1, 10000));

    int g2_dmax = 1, g2_sieve_dmax = 8;
    std::string g2_cache;
    CLI::App* genus2 = app.add_subcommand("genus2", "evaluate the conjectured genus-2 recursion");
    genus2->add_option("--dmax", g2_dmax, "largest degree")->required()->check(CLI::Range(1, 10000));
    genus2->add_option("--sieve-dmax", g2_sieve_dmax, "cross-check against the sieve up to here");
    genus2->add_option("--cache", g2_cache, "memo table file to load and update");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    int exit_code = kExitOk;
    try {
        if (compute->parsed()) {
            exit_code = run_compute(compute_opt);
        } else if (verify->parsed()) {
            exit_code = run_verify(verify_opt);
        } else if (table_cmd->parsed()) {
            exit_code = run_table(table_genus, table_dmax, table_format);
        } else if (pde->parsed()) {
            exit_code = run_pde_check(pde_genus, pde_truncation);
        } else if (genus2->parsed()) {
            exit_code = run_genus2(g2_dmax, g2_sieve_dmax, g2_cache);
        }
    } catch (const hurwitz::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hurwitz::TableFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cout << "# elapsed-ms " << ms << "\n";
    }
    return exit_code;
}

// klm: equivariant Kazhdan-Lusztig polynomials of Boolean and uniform
// matroids. Subcommands: compute, table, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// method disagreement.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "eqkl/matroid_kl.hpp"
#include "eqkl/render.hpp"
#include "eqkl/verify.hpp"

namespace {

using namespace eqkl;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisagreement = 3;

int worker_count() {
    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (const char* env = std::getenv("KLM_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed >= 1) threads = static_cast<unsigned>(parsed);
    }
    return static_cast<int>(threads);
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComputeOptions {
    std::string family;
    int m = -1;
    int d = -1;
    int n = -1;
    std::string poly = "P";
    std::string method = "closed";
    std::string format = "text";
};

struct NamedValue {
    std::string method;
    GradedSchurVector graded;  // used unless poly == ordinary-KL
    IntPolynomial ints;
};

std::string poly_label(const std::string& poly) {
    return poly == "ordinary-KL" ? "KL" : poly;
}

// Collects the values of every applicable method, in a deterministic order
// with the canonical (closed-form) value first.
std::vector<NamedValue> compute_values(const ComputeOptions& opt, const MatroidId& id) {
    const bool boolean = opt.family == "boolean";
    const int m = boolean ? 0 : opt.m;
    const int d = id.rank();
    const bool all = opt.method == "all";
    std::vector<NamedValue> values;

    auto want = [&](const std::string& method) { return all || opt.method == method; };

    if (opt.poly == "P") {
        if (want("closed"))
            values.push_back({"closed", boolean ? p_boolean(d) : p_uniform_closed(m, d), {}});
        if (want("recursive"))
            values.push_back(
                {"recursive", boolean ? p_boolean_recursive(d) : p_uniform_recursive(m, d), {}});
        if (opt.method == "skew" || (all && !boolean && m >= 1)) {
            if (boolean || m < 1) throw UsageError("method skew requires a uniform matroid with m >= 1");
            values.push_back({"skew", p_uniform_skew(m, d), {}});
        }
    } else if (opt.poly == "Q") {
        auto sign_free = [&](GradedSchurVector hat) {
            if (d % 2 != 0) hat = -hat;
            return hat;
        };
        if (want("closed"))
            values.push_back({"closed", boolean ? sign_free(q_hat_boolean(d)) : q_uniform_closed(m, d), {}});
        if (want("recursive"))
            values.push_back({"recursive", sign_free(boolean ? q_hat_boolean_recursive(d)
                                                             : q_hat_uniform_recursive(m, d)),
                              {}});
    } else if (opt.poly == "H") {
        if (d < 1) throw UsageError("the characteristic polynomial needs rank >= 1");
        if (!want("closed")) throw UsageError("poly H supports only --method closed or all");
        values.push_back({"closed", boolean ? char_boolean(d) : char_uniform(m, d), {}});
    } else if (opt.poly == "ordinary-KL") {
        if (want("closed")) {
            NamedValue v{"closed", {}, d == 0 ? IntPolynomial::constant(1) : ordinary_kl(m, d)};
            values.push_back(std::move(v));
        }
        if (want("oracle")) {
            NamedValue v{"oracle", {}, d == 0 ? IntPolynomial::constant(1) : ordinary_kl_oracle(m, d)};
            values.push_back(std::move(v));
        }
    }
    if (values.empty())
        throw UsageError("method " + opt.method + " does not apply to poly " + opt.poly);
    return values;
}

int run_compute(const ComputeOptions& opt) {
    const bool boolean = opt.family == "boolean";
    if (boolean && opt.n < 0) throw UsageError("--family boolean requires -n >= 0");
    if (!boolean && (opt.m < 0 || opt.d < 1))
        throw UsageError("--family uniform requires -m >= 0 and -d >= 1");
    const MatroidId id = boolean ? MatroidId::boolean(opt.n) : MatroidId::uniform(opt.m, opt.d);

    const auto values = compute_values(opt, id);
    for (std::size_t i = 1; i < values.size(); ++i) {
        const bool equal = opt.poly == "ordinary-KL" ? values[i].ints == values[0].ints
                                                     : values[i].graded == values[0].graded;
        if (!equal) {
            std::cerr << "method disagreement: " << values[0].method << " vs " << values[i].method
                      << " for " << poly_label(opt.poly) << "[" << id.label() << "]\n";
            return kExitDisagreement;
        }
    }

    const bool integer_poly = opt.poly == "ordinary-KL";
    if (opt.format == "json") {
        nlohmann::json j = integer_poly ? wrap_result(id, opt.poly, values[0].ints)
                                        : wrap_result(id, opt.poly, values[0].graded);
        std::cout << j.dump() << "\n";
    } else {
        const std::string body = integer_poly
                                     ? (opt.format == "latex" ? to_latex(values[0].ints)
                                                              : to_text(values[0].ints))
                                     : (opt.format == "latex" ? to_latex(values[0].graded, "V")
                                                              : to_text(values[0].graded));
        if (opt.method == "all") {
            std::cout << poly_label(opt.poly) << "[" << id.label() << "] = " << body
                      << "  agreement: ok\n";
        } else {
            std::cout << body << "\n";
        }
    }
    return kExitOk;
}

struct TableOptions {
    int max_m = 3;
    int max_d = 6;
    std::string poly = "P";
    std::string format = "text";
};

int run_table(const TableOptions& opt) {
    if (opt.max_m < 1 || opt.max_d < 1) throw UsageError("table bounds must be at least 1");

    struct Cell {
        int m;
        int d;
        GradedSchurVector graded;
        IntPolynomial ints;
    };
    std::vector<Cell> cells;
    for (int m = 0; m <= opt.max_m; ++m) {
        for (int d = 1; d <= opt.max_d; ++d) cells.push_back(Cell{m, d, {}, {}});
    }

    const bool integer_poly = opt.poly == "ordinary-KL";
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;
    auto fill = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            auto& cell = cells[i];
            try {
                if (opt.poly == "P") cell.graded = p_uniform_closed(cell.m, cell.d);
                else if (opt.poly == "Q") cell.graded = q_uniform_closed(cell.m, cell.d);
                else if (opt.poly == "H") cell.graded = char_uniform(cell.m, cell.d);
                else cell.ints = ordinary_kl(cell.m, cell.d);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                error = e.what();
                failed = true;
            }
        }
    };
    const int workers = std::min<int>(worker_count(), static_cast<int>(cells.size()));
    if (workers <= 1) {
        fill();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(fill);
        for (auto& t : pool) t.join();
    }
    if (failed) throw std::runtime_error(error);

    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& cell : cells) {
            const MatroidId id = MatroidId::uniform(cell.m, cell.d);
            out.push_back(integer_poly ? wrap_result(id, opt.poly, cell.ints)
                                       : wrap_result(id, opt.poly, cell.graded));
        }
        std::cout << out.dump() << "\n";
    } else if (opt.format == "latex") {
        std::cout << "\\begin{tabular}{c|" << std::string(static_cast<std::size_t>(opt.max_d), 'l')
                  << "}\n";
        for (int d = 1; d <= opt.max_d; ++d) std::cout << " & $d=" << d << "$";
        std::cout << " \\\\\n\\hline\n";
        std::size_t i = 0;
        for (int m = 0; m <= opt.max_m; ++m) {
            std::cout << "$m=" << m << "$";
            for (int d = 1; d <= opt.max_d; ++d, ++i) {
                const std::string body = integer_poly ? to_latex(cells[i].ints)
                                                      : to_latex(cells[i].graded, "V");
                std::cout << " & $" << body << "$";
            }
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{tabular}\n";
    } else {
        for (const auto& cell : cells) {
            const MatroidId id = MatroidId::uniform(cell.m, cell.d);
            const std::string body = integer_poly ? to_text(cell.ints) : to_text(cell.graded);
            std::cout << poly_label(opt.poly) << "[" << id.label() << "] = " << body << "\n";
        }
    }
    return kExitOk;
}

struct VerifyOptions {
    int max_m = 3;
    int max_d = 6;
    std::vector<std::string> suites{"all"};
};

int run_verify(const VerifyOptions& opt) {
    if (opt.max_m < 1 || opt.max_d < 1) throw UsageError("verify bounds must be at least 1");
    std::vector<std::string> names;
    for (const auto& name : opt.suites) {
        if (name == "all") {
            names = all_suite_names();
            break;
        }
        const auto& known = all_suite_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw UsageError("unknown suite " + name);
        names.push_back(name);
    }

    const auto results = run_suites(names, opt.max_m, opt.max_d, worker_count());
    bool all_passed = true;
    for (const auto& result : results) {
        if (result.passed) {
            std::cout << "suite " << result.name << ": pass (" << result.detail << ")\n";
        } else {
            all_passed = false;
            std::cout << "suite " << result.name << ": FAIL (" << result.detail << ")\n";
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Kazhdan-Lusztig polynomials of Boolean and uniform matroids"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    CLI::App* compute = app.add_subcommand("compute", "Compute one polynomial");
    compute->add_option("--family", compute_opt.family, "boolean or uniform")
        ->required()
        ->check(CLI::IsMember({"boolean", "uniform"}));
    compute->add_option("-m", compute_opt.m, "number of extra elements (uniform)");
    compute->add_option("-d", compute_opt.d, "rank (uniform)");
    compute->add_option("-n", compute_opt.n, "rank = ground-set size (boolean)");
    compute->add_option("--poly", compute_opt.poly, "P, Q, H or ordinary-KL")
        ->check(CLI::IsMember({"P", "Q", "H", "ordinary-KL"}));
    compute->add_option("--method", compute_opt.method, "closed, recursive, skew, oracle or all")
        ->check(CLI::IsMember({"closed", "recursive", "skew", "oracle", "all"}));
    compute->add_option("--format", compute_opt.format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    TableOptions table_opt;
    CLI::App* table = app.add_subcommand("table", "Tabulate polynomials over an (m,d) grid");
    table->add_option("--max-m", table_opt.max_m, "largest m (default 3)");
    table->add_option("--max-d", table_opt.max_d, "largest d (default 6)");
    table->add_option("--poly", table_opt.poly, "P, Q, H or ordinary-KL")
        ->check(CLI::IsMember({"P", "Q", "H", "ordinary-KL"}));
    table->add_option("--format", table_opt.format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--max-m", verify_opt.max_m, "largest m (default 3)");
    verify->add_option("--max-d", verify_opt.max_d, "largest d (default 6)");
    verify->add_option("--suites", verify_opt.suites,
                       "suites to run (default all): lemmas, recursion-vs-closed, orthogonality, "
                       "skew-vs-closed, oracle, nonnegativity, degree-bounds")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(compute_opt);
        if (table->parsed()) return run_table(table_opt);
        if (verify->parsed()) return run_verify(verify_opt);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    }
    return kExitUsage;
}

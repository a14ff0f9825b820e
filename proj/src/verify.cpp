#include "eqkl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "eqkl/matroid_kl.hpp"
#include "eqkl/render.hpp"

namespace eqkl {

namespace {

using Cell = std::pair<int, int>;
using CellCheck = std::function<std::optional<std::string>(int m, int d)>;

std::vector<Cell> sweep_cells(int min_m, int max_m, int max_d) {
    std::vector<Cell> cells;
    for (int m = min_m; m <= max_m; ++m) {
        for (int d = 1; d <= max_d; ++d) cells.emplace_back(m, d);
    }
    return cells;
}

// Runs the check on every cell, fanning out across workers; reports the
// first failing cell in sweep order so output is schedule-independent.
std::optional<std::string> check_cells(const std::vector<Cell>& cells, int threads,
                                       const CellCheck& check) {
    std::vector<std::optional<std::string>> failures(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                failures[i] = check(cells[i].first, cells[i].second);
            } catch (const std::exception& e) {
                failures[i] = std::string("exception: ") + e.what();
            }
        }
    };
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (failures[i]) {
            return "m=" + std::to_string(cells[i].first) + " d=" + std::to_string(cells[i].second) +
                   ": " + *failures[i];
        }
    }
    return std::nullopt;
}

Partition hook_partition(int head, int ones) {
    std::vector<int> parts{head};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition::from_parts(parts);
}

SchurVector schur_of(std::vector<int> parts) {
    return SchurVector(Partition::from_parts(parts));
}

std::optional<std::string> lemma_sweeps() {
    // e_m[tX - (t-1)X] = e_m, expanded over the two alphabets.
    for (int m = 1; m <= 8; ++m) {
        GradedSchurVector sum;
        for (int j = 0; j <= m; ++j) {
            SchurVector ej(Partition::from_parts(std::vector<int>(static_cast<std::size_t>(j), 1)));
            GradedSchurVector lhs = GradedSchurVector::monomial(j, ej);
            GradedSchurVector h = m - j == 0 ? GradedSchurVector::one() : char_boolean(m - j);
            GradedSchurVector term = gproduct(lhs, h);
            if ((m - j) % 2 != 0) term = -term;
            sum += term;
        }
        GradedSchurVector expected = GradedSchurVector::monomial(
            0, SchurVector(Partition::from_parts(std::vector<int>(static_cast<std::size_t>(m), 1))));
        if (sum != expected) return "alphabet-difference identity fails at m=" + std::to_string(m);
    }

    // s_(1^{i+1}) s_(m,1^{j-1}) - s_(1^i) s_(m,1^j)
    //   = s_(m+1,2^i,1^{j-i-1}) + s_(m,2^{i+1},1^{j-i-2}).
    for (int m = 2; m <= 6; ++m) {
        for (int j = 2; j <= 6; ++j) {
            for (int i = 0; i + 2 <= j; ++i) {
                SchurVector lhs = pieri_e(SchurVector(hook_partition(m, j - 1)), i + 1) -
                                  pieri_e(SchurVector(hook_partition(m, j)), i);
                SchurVector rhs;
                rhs.add_term(*compact_partition(m + 1, i, j - i - 1), 1);
                rhs.add_term(*compact_partition(m, i + 1, j - i - 2), 1);
                if (lhs != rhs) {
                    return "two-column identity fails at m=" + std::to_string(m) +
                           " i=" + std::to_string(i) + " j=" + std::to_string(j);
                }
            }
        }
    }

    // Σ_i (-1)^i s_(i) s_(m,2^j,1^{n-i}) = (-1)^n Σ_x s_(m+n-x,2+x,2^{j-1}).
    for (int n = 0; n <= 6; ++n) {
        for (int m = 2; m <= 6; ++m) {
            for (int j = 1; j <= 4; ++j) {
                SchurVector lhs;
                for (int i = 0; i <= n; ++i) {
                    SchurVector term = pieri_h(SchurVector(*compact_partition(m, j, n - i)), i);
                    if (i % 2 != 0) term *= -1;
                    lhs += term;
                }
                SchurVector rhs;
                for (int x = 0; x <= std::min(m - 2, n); ++x) {
                    std::vector<int> parts{m + n - x, 2 + x};
                    parts.insert(parts.end(), static_cast<std::size_t>(j - 1), 2);
                    rhs.add_term(Partition::from_parts(parts), 1);
                }
                if (n % 2 != 0) rhs *= -1;
                if (lhs != rhs) {
                    return "alternating-row identity fails at n=" + std::to_string(n) +
                           " m=" + std::to_string(m) + " j=" + std::to_string(j);
                }
            }
        }
    }

    // Σ_i (-1)^i s_(i) s_(m+1,1^{n-i}) = (-1)^n s_(m+n+1).
    for (int n = 0; n <= 8; ++n) {
        for (int m = 1; m <= 6; ++m) {
            SchurVector lhs;
            for (int i = 0; i <= n; ++i) {
                SchurVector term = pieri_h(SchurVector(hook_partition(m + 1, n - i)), i);
                if (i % 2 != 0) term *= -1;
                lhs += term;
            }
            SchurVector rhs = schur_of({m + n + 1});
            if (n % 2 != 0) rhs *= -1;
            if (lhs != rhs) {
                return "telescoping hook identity fails at n=" + std::to_string(n) +
                       " m=" + std::to_string(m);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> recursion_vs_closed_boolean(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
        if (q_hat_boolean_recursive(n) != q_hat_boolean(n))
            return "inverse polynomial of B(" + std::to_string(n) + "): recursive != closed";
        if (p_boolean_recursive(n) != p_boolean(n))
            return "polynomial of B(" + std::to_string(n) + "): recursive != closed";
    }
    return std::nullopt;
}

std::optional<std::string> recursion_vs_closed_cell(int m, int d) {
    GradedSchurVector expected = q_uniform_closed(m, d);
    if (d % 2 != 0) expected = -expected;
    if (q_hat_uniform_recursive(m, d) != expected) return std::optional<std::string>("Q recursive != closed");
    if (p_uniform_recursive(m, d) != p_uniform_closed(m, d))
        return std::optional<std::string>("P recursive != closed");
    return std::nullopt;
}

std::optional<std::string> orthogonality_cell(int m, int d) {
    GradedSchurVector residue = verify_orthogonality(m, d);
    if (!residue.is_zero())
        return "orthogonality residue " + to_text(residue);
    return std::nullopt;
}

std::optional<std::string> skew_vs_closed_cell(int m, int d) {
    if (p_uniform_skew(m, d) != p_uniform_closed(m, d))
        return std::optional<std::string>("P skew != closed");
    return std::nullopt;
}

std::optional<std::string> oracle_cell(int m, int d) {
    if (ordinary_kl(m, d) != ordinary_kl_oracle(m, d))
        return std::optional<std::string>("ordinary KL != oracle");
    return std::nullopt;
}

std::optional<std::string> nonnegativity_cell(int m, int d) {
    for (const GradedSchurVector& poly : {p_uniform_closed(m, d), q_uniform_closed(m, d)}) {
        for (const auto& [deg, value] : poly.coeffs()) {
            for (const auto& [p, c] : value.terms()) {
                if (c < 0) return "negative coefficient " + std::to_string(c) + " at t^" +
                                  std::to_string(deg) + " " + to_text(p);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> degree_bounds_cell(int m, int d) {
    const int bound = (d - 1) / 2;
    for (const GradedSchurVector& poly :
         {p_uniform_closed(m, d), p_uniform_recursive(m, d), q_uniform_closed(m, d)}) {
        if (poly.degree() > bound)
            return "degree " + std::to_string(poly.degree()) + " exceeds " + std::to_string(bound);
        for (const auto& [deg, value] : poly.coeffs()) {
            for (const auto& [p, c] : value.terms()) {
                if (p.size() != m + d)
                    return "inhomogeneous term " + to_text(p) + " at t^" + std::to_string(deg);
            }
        }
    }
    return std::nullopt;
}

} // namespace

const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names{
        "lemmas",         "recursion-vs-closed", "orthogonality", "skew-vs-closed",
        "oracle",         "nonnegativity",       "degree-bounds"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, int max_m, int max_d,
                                    int threads) {
    if (max_m < 1 || max_d < 1) throw std::invalid_argument("run_suites: bounds must be >= 1");
    for (const auto& name : names) {
        if (std::find(all_suite_names().begin(), all_suite_names().end(), name) ==
            all_suite_names().end())
            throw std::invalid_argument("run_suites: unknown suite " + name);
    }
    auto selected = [&](const std::string& name) {
        return std::find(names.begin(), names.end(), name) != names.end();
    };

    const auto cells = sweep_cells(0, max_m, max_d);
    const auto skew_cells = sweep_cells(1, max_m, max_d);
    const std::string sweep_note = std::to_string(cells.size()) + " cells";

    std::vector<SuiteResult> results;
    auto record = [&](const std::string& name, std::optional<std::string> failure,
                      const std::string& ok_note) {
        results.push_back(SuiteResult{name, !failure.has_value(), failure.value_or(ok_note)});
    };

    for (const auto& name : all_suite_names()) {
        if (!selected(name)) continue;
        if (name == "lemmas") {
            record(name, lemma_sweeps(), "fixed parameter sweeps");
        } else if (name == "recursion-vs-closed") {
            auto failure = recursion_vs_closed_boolean(max_d);
            if (!failure) failure = check_cells(cells, threads, [](int m, int d) {
                return recursion_vs_closed_cell(m, d);
            });
            record(name, failure, sweep_note);
        } else if (name == "orthogonality") {
            record(name, check_cells(cells, threads, orthogonality_cell), sweep_note);
        } else if (name == "skew-vs-closed") {
            record(name, check_cells(skew_cells, threads, skew_vs_closed_cell),
                   std::to_string(skew_cells.size()) + " cells");
        } else if (name == "oracle") {
            record(name, check_cells(cells, threads, oracle_cell), sweep_note);
        } else if (name == "nonnegativity") {
            record(name, check_cells(cells, threads, nonnegativity_cell), sweep_note);
        } else if (name == "degree-bounds") {
            record(name, check_cells(cells, threads, degree_bounds_cell), sweep_note);
        }
    }
    return results;
}

} // namespace eqkl

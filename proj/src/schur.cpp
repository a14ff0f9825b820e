#include "eqkl/schur.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace eqkl {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out))
        throw CoefficientOverflow("Schur coefficient addition overflowed");
    return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out))
        throw CoefficientOverflow("Schur coefficient multiplication overflowed");
    return out;
}

SchurVector::SchurVector(Partition p, Coeff coeff) {
    if (coeff != 0) terms_.emplace(std::move(p), coeff);
}

Coeff SchurVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void SchurVector::add_term(const Partition& p, Coeff coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(p, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

SchurVector& SchurVector::operator+=(const SchurVector& rhs) {
    for (const auto& [p, c] : rhs.terms_) add_term(p, c);
    return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& rhs) {
    for (const auto& [p, c] : rhs.terms_) add_term(p, checked_mul(c, -1));
    return *this;
}

SchurVector& SchurVector::operator*=(Coeff scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c = checked_mul(c, scalar);
    return *this;
}

SchurVector SchurVector::operator-() const {
    SchurVector out = *this;
    return out *= -1;
}

std::vector<int> LRTableau::reverse_reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape.size()));
    for (const auto& row : rows) {
        for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
    }
    return word;
}

bool is_lattice_word(const std::vector<int>& word) {
    int maxv = 0;
    for (int v : word) {
        if (v <= 0) return false;
        maxv = std::max(maxv, v);
    }
    std::vector<int> counts(static_cast<std::size_t>(maxv) + 1, 0);
    for (int v : word) {
        ++counts[static_cast<std::size_t>(v)];
        if (v > 1 && counts[static_cast<std::size_t>(v)] > counts[static_cast<std::size_t>(v) - 1])
            return false;
    }
    return true;
}

namespace {

// Backtracking filler for Littlewood-Richardson tableaux. Rows are filled top
// to bottom, each row right to left, so the reverse reading word grows in
// fill order and the lattice condition prunes every placement immediately.
// Entries in row r (0-based) never exceed r+1 in an LR tableau.
class LRFiller {
public:
    LRFiller(const SkewShape& shape, const Partition* content)
        : outer_(shape.outer()), inner_(shape.inner()), content_(content) {
        rows_ = outer_.length();
        fill_.resize(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            fill_[static_cast<std::size_t>(r)].assign(
                static_cast<std::size_t>(outer_.part(r) - inner_.part(r)), 0);
        maxv_ = content_ ? content_->length() : rows_;
        counts_.assign(static_cast<std::size_t>(maxv_) + 2, 0);
        if (content_) {
            remaining_.assign(static_cast<std::size_t>(maxv_) + 2, 0);
            for (int v = 1; v <= maxv_; ++v)
                remaining_[static_cast<std::size_t>(v)] = content_->part(v - 1);
        }
    }

    // visit(fill, counts) is called once per complete tableau.
    template <typename Visit>
    void run(Visit&& visit) {
        visit_row(0, visit);
    }

private:
    template <typename Visit>
    void visit_row(int row, Visit& visit) {
        if (row == rows_) {
            visit(fill_, counts_);
            return;
        }
        visit_cell(row, outer_.part(row) - 1, visit);
    }

    template <typename Visit>
    void visit_cell(int row, int col, Visit& visit) {
        if (col < inner_.part(row)) {
            visit_row(row + 1, visit);
            return;
        }
        const std::size_t idx = static_cast<std::size_t>(col - inner_.part(row));
        auto& row_fill = fill_[static_cast<std::size_t>(row)];
        int lo = 1;
        if (row > 0 && col >= inner_.part(row - 1))
            lo = fill_[static_cast<std::size_t>(row - 1)]
                      [static_cast<std::size_t>(col - inner_.part(row - 1))] + 1;
        int hi = std::min(row + 1, maxv_);
        if (col + 1 < outer_.part(row)) hi = std::min(hi, row_fill[idx + 1]);
        for (int v = lo; v <= hi; ++v) {
            const std::size_t vi = static_cast<std::size_t>(v);
            if (v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;
            if (content_ && remaining_[vi] == 0) continue;
            ++counts_[vi];
            if (content_) --remaining_[vi];
            row_fill[idx] = v;
            visit_cell(row, col - 1, visit);
            --counts_[vi];
            if (content_) ++remaining_[vi];
        }
    }

    const Partition& outer_;
    const Partition& inner_;
    const Partition* content_;
    int rows_ = 0;
    int maxv_ = 0;
    std::vector<std::vector<int>> fill_;
    std::vector<int> counts_;
    std::vector<int> remaining_;
};

long long lr_tableau_count(const SkewShape& shape, const Partition& content) {
    if (content.size() != shape.size()) return 0;
    long long count = 0;
    LRFiller filler(shape, &content);
    filler.run([&](const auto&, const auto&) { ++count; });
    return count;
}

// Enumerates all partitions lam with mu ⊆ lam, |lam| = |mu| + |nu|,
// lam_1 ≤ mu_1 + nu_1 and at most len(mu) + len(nu) rows; every shape with a
// nonzero LR coefficient for content nu satisfies these bounds.
template <typename Fn>
void for_each_outer_candidate(const Partition& mu, const Partition& nu, Fn&& fn) {
    const int total = nu.size();
    if (total == 0) {
        fn(mu);
        return;
    }
    const int maxlen = mu.length() + nu.length();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(maxlen));

    std::function<void(int, int, int)> dfs = [&](int row, int added, int prev) {
        if (row == maxlen) {
            if (added == total) fn(Partition::from_parts(parts));
            return;
        }
        const int base = mu.part(row);
        // Close the partition here with all-zero rows.
        if (base == 0 && added == total) fn(Partition::from_parts(parts));
        const int lo = std::max(base, 1);
        int hi = std::min(prev, base + (total - added));
        if (row == 0) hi = std::min(hi, mu.part(0) + nu.part(0));
        for (int val = lo; val <= hi; ++val) {
            const int need = total - added - (val - base);
            if (need > (maxlen - row - 1) * val) continue;
            parts.push_back(val);
            dfs(row + 1, added + (val - base), val);
            parts.pop_back();
        }
    };
    dfs(0, 0, std::numeric_limits<int>::max());
}

template <typename Fn>
void for_each_strip_extension_h(const Partition& lam, int size, Fn&& fn) {
    const int len = lam.length();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(len) + 1);
    std::function<void(int, int)> dfs = [&](int row, int rem) {
        if (row == len + 1) {
            if (rem == 0) fn(Partition::from_parts(parts));
            return;
        }
        const int cap = row == 0 ? rem : std::min(rem, lam.part(row - 1) - lam.part(row));
        for (int add = 0; add <= cap; ++add) {
            parts.push_back(lam.part(row) + add);
            dfs(row + 1, rem - add);
            parts.pop_back();
        }
    };
    dfs(0, size);
}

template <typename Fn>
void for_each_strip_extension_v(const Partition& lam, int size, Fn&& fn) {
    const int len = lam.length();
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(len + size));
    std::function<void(int, int, int)> dfs = [&](int row, int rem, int prev) {
        if (row == len) {
            // Remaining cells become a tail of new single-cell rows; the part
            // above is at least 1, so the result stays weakly decreasing.
            for (int r = 0; r < rem; ++r) parts.push_back(1);
            fn(Partition::from_parts(parts));
            for (int r = 0; r < rem; ++r) parts.pop_back();
            return;
        }
        for (int add = 0; add <= std::min(rem, 1); ++add) {
            const int val = lam.part(row) + add;
            if (row > 0 && val > prev) continue;
            parts.push_back(val);
            dfs(row + 1, rem - add, val);
            parts.pop_back();
        }
    };
    dfs(0, size, std::numeric_limits<int>::max());
}

} // namespace

SchurVector pieri_h(const SchurVector& f, int i) {
    if (i < 0) throw std::invalid_argument("pieri_h: negative strip size");
    if (i == 0) return f;
    SchurVector out;
    for (const auto& [lam, c] : f.terms()) {
        for_each_strip_extension_h(lam, i, [&](const Partition& mu) { out.add_term(mu, c); });
    }
    return out;
}

SchurVector pieri_e(const SchurVector& f, int i) {
    if (i < 0) throw std::invalid_argument("pieri_e: negative strip size");
    if (i == 0) return f;
    SchurVector out;
    for (const auto& [lam, c] : f.terms()) {
        for_each_strip_extension_v(lam, i, [&](const Partition& mu) { out.add_term(mu, c); });
    }
    return out;
}

SchurVector lr_product(const SchurVector& f, const SchurVector& g) {
    SchurVector out;
    for (const auto& [mu, c1] : f.terms()) {
        for (const auto& [nu, c2] : g.terms()) {
            const Coeff c12 = checked_mul(c1, c2);
            for_each_outer_candidate(mu, nu, [&](const Partition& lam) {
                const long long count = lr_tableau_count(SkewShape(lam, mu), nu);
                if (count != 0) out.add_term(lam, checked_mul(c12, count));
            });
        }
    }
    return out;
}

SchurVector skew_schur_expand(const SkewShape& shape) {
    SchurVector out;
    LRFiller filler(shape, nullptr);
    filler.run([&](const auto&, const std::vector<int>& counts) {
        std::vector<int> parts;
        for (std::size_t v = 1; v < counts.size(); ++v) {
            if (counts[v] > 0) parts.push_back(counts[v]);
        }
        out.add_term(Partition::from_parts(parts), 1);
    });
    return out;
}

Coeff lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
    if (!outer.contains(inner)) return 0;
    return static_cast<Coeff>(lr_tableau_count(SkewShape(outer, inner), content));
}

std::vector<LRTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& content) {
    if (content.size() != shape.size())
        throw std::invalid_argument("enumerate_lr_tableaux: content size must equal shape size");
    std::vector<LRTableau> out;
    LRFiller filler(shape, &content);
    filler.run([&](const std::vector<std::vector<int>>& fill, const auto&) {
        out.push_back(LRTableau{shape, fill, content});
    });
    std::sort(out.begin(), out.end(),
              [](const LRTableau& a, const LRTableau& b) { return a.rows < b.rows; });
    return out;
}

} // namespace eqkl

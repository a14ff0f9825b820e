#include "eqkl/matroid_kl.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>

namespace eqkl {

namespace {

// Memoization shared by the recursive solvers. Lookups and inserts are
// locked; computation happens outside the lock, so concurrent callers may
// recompute a value, but the first stored value wins and results are
// immutable.
template <typename Key, typename Value>
class MemoTable {
public:
    std::optional<Value> find(const Key& key) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    Value store(const Key& key, Value value) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = map_.emplace(key, std::move(value));
        return it->second;
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, Value> map_;
};

void require_rank(int d, const char* what) {
    if (d < 1) throw std::invalid_argument(std::string(what) + ": rank must be at least 1");
}

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + ": argument must be nonnegative");
}

SchurVector schur_row(int n) {
    return n == 0 ? SchurVector::one() : SchurVector(Partition::from_parts({n}));
}

SchurVector schur_column(int n) {
    return SchurVector(Partition::from_parts(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

} // namespace

MatroidId MatroidId::boolean(int n) {
    require_nonnegative(n, "MatroidId::boolean");
    return MatroidId(Family::Boolean, 0, n);
}

MatroidId MatroidId::uniform(int m, int d) {
    require_nonnegative(m, "MatroidId::uniform");
    require_nonnegative(d, "MatroidId::uniform");
    return MatroidId(Family::Uniform, m, d);
}

std::string MatroidId::label() const {
    if (family_ == Family::Boolean) return "B(" + std::to_string(d_) + ")";
    return "U(" + std::to_string(m_) + "," + std::to_string(d_) + ")";
}

bool MatroidId::operator<(const MatroidId& rhs) const {
    return std::tuple(family_, m_, d_) < std::tuple(rhs.family_, rhs.m_, rhs.d_);
}

GradedSchurVector char_boolean(int n) {
    if (n < 1) throw std::invalid_argument("char_boolean: n must be at least 1");
    GradedSchurVector out;
    for (int a = 0; a <= n; ++a) {
        const int b = n - a;
        SchurVector term = pieri_e(schur_row(a), b);
        if (b % 2 != 0) term *= -1;
        out.add_term(a, term);
    }
    return out;
}

GradedSchurVector char_uniform(int m, int d) {
    require_nonnegative(m, "char_uniform");
    require_rank(d, "char_uniform");
    static MemoTable<std::pair<int, int>, GradedSchurVector> memo;
    if (auto hit = memo.find({m, d})) return *hit;

    GradedSchurVector out;
    for (int j = 0; j <= d - 1; ++j) {
        SchurVector value;
        if (auto p = compact_partition(m + d - j, 0, j)) value.add_term(*p, 1);
        if (auto p = compact_partition(m + d - j + 1, 0, j - 1)) value.add_term(*p, 1);
        if (j % 2 != 0) value *= -1;
        out.add_term(d - j, value);
    }
    SchurVector tail(*compact_partition(m + 1, 0, d - 1));
    if (d % 2 != 0) tail *= -1;
    out.add_term(0, tail);
    return memo.store({m, d}, std::move(out));
}

GradedSchurVector q_hat_boolean(int n) {
    require_nonnegative(n, "q_hat_boolean");
    SchurVector value = schur_column(n);
    if (n % 2 != 0) value *= -1;
    return GradedSchurVector::monomial(0, value);
}

GradedSchurVector q_hat_boolean_recursive(int n) {
    require_nonnegative(n, "q_hat_boolean_recursive");
    static MemoTable<int, GradedSchurVector> memo;
    if (n == 0) return GradedSchurVector::one();
    if (auto hit = memo.find(n)) return *hit;

    GradedSchurVector rhs;
    for (int i = 0; i <= n - 1; ++i) {
        rhs += gproduct(reciprocal_shift(q_hat_boolean_recursive(i), i), char_boolean(n - i));
    }
    GradedSchurVector result = truncate_strictly_below(rhs, n);
    if (result - reciprocal_shift(result, n) != rhs)
        throw InternalInconsistency("q_hat_boolean_recursive: solution fails re-substitution");
    return memo.store(n, std::move(result));
}

GradedSchurVector q_hat_uniform_recursive(int m, int d) {
    require_nonnegative(m, "q_hat_uniform_recursive");
    require_rank(d, "q_hat_uniform_recursive");
    static MemoTable<std::pair<int, int>, GradedSchurVector> memo;
    if (auto hit = memo.find({m, d})) return *hit;

    GradedSchurVector rhs;
    for (int i = 0; i <= d - 1; ++i) {
        rhs += gproduct(reciprocal_shift(q_hat_boolean(i), i), char_uniform(m, d - i));
    }
    GradedSchurVector result = truncate_strictly_below(rhs, d);
    if (result - reciprocal_shift(result, d) != rhs)
        throw InternalInconsistency("q_hat_uniform_recursive: solution fails re-substitution");
    return memo.store({m, d}, std::move(result));
}

GradedSchurVector q_uniform_closed(int m, int d) {
    require_nonnegative(m, "q_uniform_closed");
    require_rank(d, "q_uniform_closed");
    GradedSchurVector out;
    for (int j = 0; 2 * j <= d - 1; ++j) {
        if (auto p = compact_partition(m + 1, j, d - 2 * j - 1)) {
            out.add_term(j, SchurVector(*p));
        }
    }
    return out;
}

GradedSchurVector p_boolean(int n) {
    require_nonnegative(n, "p_boolean");
    return GradedSchurVector::monomial(0, schur_row(n));
}

GradedSchurVector p_boolean_recursive(int n) {
    require_nonnegative(n, "p_boolean_recursive");
    static MemoTable<int, GradedSchurVector> memo;
    if (n == 0) return GradedSchurVector::one();
    if (auto hit = memo.find(n)) return *hit;

    // The empty-flat term of the defining sum is the unknown itself (its
    // localization has trivial characteristic polynomial), so the sum over
    // proper flats S satisfies t^n P(1/t) - P = S and the degree bound reads
    // P off the low half of -S.
    GradedSchurVector rhs;
    for (int i = 1; i <= n; ++i) {
        rhs += gproduct(char_boolean(i), p_boolean_recursive(n - i));
    }
    GradedSchurVector result = truncate_strictly_below(-rhs, n);
    if (reciprocal_shift(result, n) - result != rhs)
        throw InternalInconsistency("p_boolean_recursive: solution fails re-substitution");
    return memo.store(n, std::move(result));
}

GradedSchurVector p_uniform_recursive(int m, int d) {
    require_nonnegative(m, "p_uniform_recursive");
    require_rank(d, "p_uniform_recursive");
    static MemoTable<std::pair<int, int>, GradedSchurVector> memo;
    if (auto hit = memo.find({m, d})) return *hit;

    GradedSchurVector rhs = char_uniform(m, d);  // full-flat term, contraction trivial
    for (int i = 1; i <= d - 1; ++i) {
        rhs += gproduct(char_boolean(i), p_uniform_recursive(m, d - i));
    }
    GradedSchurVector result = truncate_strictly_below(-rhs, d);
    if (reciprocal_shift(result, d) - result != rhs)
        throw InternalInconsistency("p_uniform_recursive: solution fails re-substitution");
    return memo.store({m, d}, std::move(result));
}

GradedSchurVector p_uniform_closed(int m, int d) {
    require_nonnegative(m, "p_uniform_closed");
    require_rank(d, "p_uniform_closed");
    GradedSchurVector out = GradedSchurVector::monomial(0, schur_row(m + d));
    for (int j = 1; 2 * j <= d - 1; ++j) {
        SchurVector value;
        for (int x = 1; x <= std::min(m, d - 2 * j); ++x) {
            std::vector<int> parts{m + d - 2 * j - x + 1, x + 1};
            parts.insert(parts.end(), static_cast<std::size_t>(j - 1), 2);
            value.add_term(Partition::from_parts(parts), 1);
        }
        out.add_term(j, value);
    }
    return out;
}

GradedSchurVector p_uniform_skew(int m, int d) {
    if (m < 1) throw std::invalid_argument("p_uniform_skew: m must be at least 1");
    require_rank(d, "p_uniform_skew");
    GradedSchurVector out;
    for (int j = 0; 2 * j <= d - 1; ++j) {
        std::vector<int> outer{m + d - 2 * j};
        outer.insert(outer.end(), static_cast<std::size_t>(j), d - 2 * j + 1);
        std::vector<int> inner(static_cast<std::size_t>(j), d - 2 * j - 1);
        SkewShape shape(Partition::from_parts(outer), Partition::from_parts(inner));
        out.add_term(j, skew_schur_expand(shape));
    }
    return out;
}

GradedSchurVector verify_orthogonality(int m, int d) {
    require_nonnegative(m, "verify_orthogonality");
    require_rank(d, "verify_orthogonality");
    GradedSchurVector sum = p_uniform_closed(m, d);
    for (int i = 0; i <= d - 1; ++i) {
        GradedSchurVector q_hat = q_uniform_closed(m, d - i);
        if ((d - i) % 2 != 0) q_hat = -q_hat;
        sum += gproduct(GradedSchurVector::monomial(0, schur_row(i)), q_hat);
    }
    return sum;
}

IntPolynomial ordinary_kl(int m, int d) {
    return dimension_poly(p_uniform_closed(m, d));
}

namespace {

IntPolynomial int_reciprocal_shift(const IntPolynomial& f, int n) {
    IntPolynomial out;
    for (const auto& [deg, value] : f.coeffs()) {
        if (deg > n) throw std::invalid_argument("int_reciprocal_shift: degree exceeds shift");
        out.add_term(n - deg, value);
    }
    return out;
}

IntPolynomial int_truncate_strictly_below(const IntPolynomial& f, int half_of) {
    IntPolynomial out;
    for (const auto& [deg, value] : f.coeffs()) {
        if (2 * deg < half_of) out.add_term(deg, value);
    }
    return out;
}

// (t-1)^n
IntPolynomial char_poly_boolean_int(int n) {
    IntPolynomial t_minus_1;
    t_minus_1.add_term(1, BigInt(1));
    t_minus_1.add_term(0, BigInt(-1));
    IntPolynomial out = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) out *= t_minus_1;
    return out;
}

} // namespace

IntPolynomial ordinary_kl_oracle(int m, int d) {
    require_nonnegative(m, "ordinary_kl_oracle");
    require_rank(d, "ordinary_kl_oracle");
    static MemoTable<std::pair<int, int>, IntPolynomial> memo;
    if (auto hit = memo.find({m, d})) return *hit;

    // Scalar specialization of the defining recurrence: the number of rank-i
    // proper flats of the uniform matroid is binom(m+d, i), each contributing
    // (t-1)^i times the polynomial of the rank d-i contraction.
    IntPolynomial rhs = dimension_poly(char_uniform(m, d));
    for (int i = 1; i <= d - 1; ++i) {
        IntPolynomial term = char_poly_boolean_int(i);
        term *= IntPolynomial::monomial(0, BigInt::binomial(static_cast<unsigned>(m + d),
                                                            static_cast<unsigned>(i)));
        term *= ordinary_kl_oracle(m, d - i);
        rhs += term;
    }
    IntPolynomial result = int_truncate_strictly_below(-rhs, d);
    if (int_reciprocal_shift(result, d) - result != rhs)
        throw InternalInconsistency("ordinary_kl_oracle: solution fails re-substitution");
    return memo.store({m, d}, std::move(result));
}

} // namespace eqkl

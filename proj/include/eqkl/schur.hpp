#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "eqkl/partition.hpp"

namespace eqkl {

/// Raised when a coefficient operation would overflow 64 bits.
struct CoefficientOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

using Coeff = std::int64_t;

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Finite integer linear combination of Schur functions. Zero coefficients
/// are never stored; terms iterate in the canonical partition order.
class SchurVector {
public:
    using TermMap = std::map<Partition, Coeff, PartitionOrder>;

    SchurVector() = default;
    explicit SchurVector(Partition p, Coeff coeff = 1);

    /// The multiplicative identity s_().
    static SchurVector one() { return SchurVector(Partition{}); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(const Partition& p) const;

    void add_term(const Partition& p, Coeff coeff);

    SchurVector& operator+=(const SchurVector& rhs);
    SchurVector& operator-=(const SchurVector& rhs);
    SchurVector& operator*=(Coeff scalar);
    SchurVector operator-() const;
    friend SchurVector operator+(SchurVector lhs, const SchurVector& rhs) { return lhs += rhs; }
    friend SchurVector operator-(SchurVector lhs, const SchurVector& rhs) { return lhs -= rhs; }
    friend SchurVector operator*(SchurVector lhs, Coeff scalar) { return lhs *= scalar; }

    bool operator==(const SchurVector&) const = default;

private:
    TermMap terms_;
};

/// Littlewood-Richardson tableau: semistandard filling of a skew shape whose
/// reverse reading word is a lattice permutation.
struct LRTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;  // entries of the skew cells, per row
    Partition content;

    /// Entries read row by row, each row right to left, top to bottom.
    std::vector<int> reverse_reading_word() const;
};

/// Multiplication by s_(i): adds horizontal strips of size i to every term.
SchurVector pieri_h(const SchurVector& f, int i);

/// Multiplication by s_(1^i): adds vertical strips of size i to every term.
SchurVector pieri_e(const SchurVector& f, int i);

/// Full product in the ring of symmetric functions, by Littlewood-Richardson
/// tableau counting over candidate outer shapes.
SchurVector lr_product(const SchurVector& f, const SchurVector& g);

/// Schur expansion of the skew Schur function of the given shape.
SchurVector skew_schur_expand(const SkewShape& shape);

/// c^{outer}_{inner,content}: the number of Littlewood-Richardson tableaux of
/// the given shape and content. Zero when sizes do not match.
Coeff lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content);

/// All Littlewood-Richardson tableaux of the shape with the given content,
/// sorted row-major lexicographically on entries. Throws std::invalid_argument
/// unless content.size() == shape.size().
std::vector<LRTableau> enumerate_lr_tableaux(const SkewShape& shape, const Partition& content);

/// True iff every prefix has at least as many i's as (i+1)'s, for every i.
bool is_lattice_word(const std::vector<int>& word);

} // namespace eqkl

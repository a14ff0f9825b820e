#pragma once

#include <map>
#include <stdexcept>

#include "eqkl/bigint.hpp"
#include "eqkl/schur.hpp"

namespace eqkl {

/// Raised by reciprocal_shift when the polynomial degree exceeds the shift.
struct DegreeExceedsShift : std::domain_error {
    using std::domain_error::domain_error;
};

/// Polynomial in t with SchurVector coefficients. Zero coefficients are never
/// stored; the zero polynomial is the explicit no-terms state.
class GradedSchurVector {
public:
    using CoeffMap = std::map<int, SchurVector>;

    GradedSchurVector() = default;

    static GradedSchurVector monomial(int degree, SchurVector value);
    /// The constant polynomial s_() (trivial representation in degree 0).
    static GradedSchurVector one() { return monomial(0, SchurVector::one()); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Highest stored degree; -1 for the zero polynomial.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    const CoeffMap& coeffs() const { return coeffs_; }
    const SchurVector& coeff(int degree) const;

    void add_term(int degree, const SchurVector& value);

    GradedSchurVector& operator+=(const GradedSchurVector& rhs);
    GradedSchurVector& operator-=(const GradedSchurVector& rhs);
    GradedSchurVector operator-() const;
    friend GradedSchurVector operator+(GradedSchurVector lhs, const GradedSchurVector& rhs) {
        return lhs += rhs;
    }
    friend GradedSchurVector operator-(GradedSchurVector lhs, const GradedSchurVector& rhs) {
        return lhs -= rhs;
    }

    bool operator==(const GradedSchurVector&) const = default;

private:
    CoeffMap coeffs_;
};

/// Cauchy product; the coefficient of t^k is Σ_{a+b=k} lr_product(f_a, g_b).
/// Under the Frobenius characteristic this is the induction product of graded
/// virtual representations.
GradedSchurVector gproduct(const GradedSchurVector& f, const GradedSchurVector& g);

/// t^n · f(1/t): the coefficient of t^{n-k} is f's coefficient of t^k.
/// Throws DegreeExceedsShift when degree(f) > n.
GradedSchurVector reciprocal_shift(const GradedSchurVector& f, int n);

/// Keeps exactly the terms of degree j with 2j < half_of.
GradedSchurVector truncate_strictly_below(const GradedSchurVector& f, int half_of);

/// Polynomial in t with arbitrary-precision integer coefficients.
class IntPolynomial {
public:
    using CoeffMap = std::map<int, BigInt>;

    IntPolynomial() = default;
    static IntPolynomial monomial(int degree, BigInt value);
    static IntPolynomial constant(long long value) { return monomial(0, BigInt(value)); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    const CoeffMap& coeffs() const { return coeffs_; }
    BigInt coeff(int degree) const;

    void add_term(int degree, const BigInt& value);

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial operator-() const;
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }

    bool operator==(const IntPolynomial&) const = default;

private:
    CoeffMap coeffs_;
};

/// Graded dimension: replaces each s_λ by the number of standard Young
/// tableaux of shape λ and sums per degree.
IntPolynomial dimension_poly(const GradedSchurVector& f);

} // namespace eqkl

#include "eqkl/graded.hpp"

namespace eqkl {

GradedSchurVector GradedSchurVector::monomial(int degree, SchurVector value) {
    GradedSchurVector out;
    out.add_term(degree, value);
    return out;
}

const SchurVector& GradedSchurVector::coeff(int degree) const {
    static const SchurVector zero;
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? zero : it->second;
}

void GradedSchurVector::add_term(int degree, const SchurVector& value) {
    if (value.is_zero()) return;
    if (degree < 0) throw std::invalid_argument("GradedSchurVector: negative degree");
    auto [it, inserted] = coeffs_.emplace(degree, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GradedSchurVector& GradedSchurVector::operator+=(const GradedSchurVector& rhs) {
    for (const auto& [deg, value] : rhs.coeffs_) add_term(deg, value);
    return *this;
}

GradedSchurVector& GradedSchurVector::operator-=(const GradedSchurVector& rhs) {
    for (const auto& [deg, value] : rhs.coeffs_) add_term(deg, -value);
    return *this;
}

GradedSchurVector GradedSchurVector::operator-() const {
    GradedSchurVector out;
    for (const auto& [deg, value] : coeffs_) out.coeffs_.emplace(deg, -value);
    return out;
}

GradedSchurVector gproduct(const GradedSchurVector& f, const GradedSchurVector& g) {
    GradedSchurVector out;
    for (const auto& [da, va] : f.coeffs()) {
        for (const auto& [db, vb] : g.coeffs()) {
            out.add_term(da + db, lr_product(va, vb));
        }
    }
    return out;
}

GradedSchurVector reciprocal_shift(const GradedSchurVector& f, int n) {
    if (n < 0) throw std::invalid_argument("reciprocal_shift: negative shift");
    if (f.degree() > n)
        throw DegreeExceedsShift("reciprocal_shift: polynomial degree exceeds shift");
    GradedSchurVector out;
    for (const auto& [deg, value] : f.coeffs()) out.add_term(n - deg, value);
    return out;
}

GradedSchurVector truncate_strictly_below(const GradedSchurVector& f, int half_of) {
    GradedSchurVector out;
    for (const auto& [deg, value] : f.coeffs()) {
        if (2 * deg < half_of) out.add_term(deg, value);
    }
    return out;
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt value) {
    IntPolynomial out;
    out.add_term(degree, value);
    return out;
}

BigInt IntPolynomial::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? BigInt() : it->second;
}

void IntPolynomial::add_term(int degree, const BigInt& value) {
    if (value.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(degree, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    for (const auto& [deg, value] : rhs.coeffs_) add_term(deg, value);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    for (const auto& [deg, value] : rhs.coeffs_) add_term(deg, -value);
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    IntPolynomial out;
    for (const auto& [da, va] : coeffs_) {
        for (const auto& [db, vb] : rhs.coeffs_) {
            out.add_term(da + db, va * vb);
        }
    }
    return *this = std::move(out);
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out;
    for (const auto& [deg, value] : coeffs_) out.coeffs_.emplace(deg, -value);
    return out;
}

IntPolynomial dimension_poly(const GradedSchurVector& f) {
    IntPolynomial out;
    for (const auto& [deg, value] : f.coeffs()) {
        BigInt dim;
        for (const auto& [p, c] : value.terms()) dim += BigInt(c) * syt_count(p);
        out.add_term(deg, dim);
    }
    return out;
}

} // namespace eqkl

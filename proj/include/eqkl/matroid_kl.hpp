#pragma once

#include <stdexcept>
#include <string>

#include "eqkl/graded.hpp"

namespace eqkl {

/// Raised when a recursive solver's result fails re-substitution into the
/// defining equation. Never expected; indicates a bug.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

/// Identifies the equivariant matroid a computation targets. The Boolean
/// matroid on n elements coincides with the uniform matroid of rank n on n
/// elements; the tag is preserved for display and serialization.
class MatroidId {
public:
    enum class Family { Boolean, Uniform };

    static MatroidId boolean(int n);
    static MatroidId uniform(int m, int d);

    Family family() const { return family_; }
    int m() const { return m_; }
    int d() const { return d_; }
    int rank() const { return d_; }
    int ground_size() const { return m_ + d_; }

    std::string label() const;

    bool operator==(const MatroidId&) const = default;
    bool operator<(const MatroidId& rhs) const;

private:
    MatroidId(Family family, int m, int d) : family_(family), m_(m), d_(d) {}
    Family family_;
    int m_;
    int d_;
};

/// ch of the equivariant characteristic polynomial of the Boolean matroid:
/// Σ_{a+b=n} (-1)^b t^a s_(a)·s_(1^b), expanded through the Pieri rule.
GradedSchurVector char_boolean(int n);

/// ch of the equivariant characteristic polynomial of the uniform matroid of
/// rank d on m+d elements.
GradedSchurVector char_uniform(int m, int d);

/// ch Q̂ of the Boolean matroid, closed form: the constant (-1)^n s_(1^n).
GradedSchurVector q_hat_boolean(int n);

/// ch Q̂ of the Boolean matroid computed from its defining recurrence, solved
/// degree-by-degree through the deg < n/2 bound. Cross-validates the closed
/// form.
GradedSchurVector q_hat_boolean_recursive(int n);

/// ch Q̂ of the uniform matroid from the flat-orbit recurrence.
GradedSchurVector q_hat_uniform_recursive(int m, int d);

/// ch Q of the uniform matroid, closed form (sign-free):
/// Σ_j t^j s_(m+1,2^j,1^{d-2j-1}), invalid compact shapes vanishing.
GradedSchurVector q_uniform_closed(int m, int d);

/// ch P of the Boolean matroid, closed form: the constant s_(n).
GradedSchurVector p_boolean(int n);

/// ch P of the Boolean matroid from its defining recurrence.
GradedSchurVector p_boolean_recursive(int n);

/// ch P of the uniform matroid from the flat-orbit recurrence.
GradedSchurVector p_uniform_recursive(int m, int d);

/// ch P of the uniform matroid, closed form:
/// s_(m+d) + Σ_{j≥1} t^j Σ_x s_(m+d-2j-x+1, x+1, 2^{j-1}).
GradedSchurVector p_uniform_closed(int m, int d);

/// ch P of the uniform matroid as skew Schur expansions:
/// Σ_j t^j s_{(m+d-2j,(d-2j+1)^j)/((d-2j-1)^j)}. Requires m ≥ 1.
GradedSchurVector p_uniform_skew(int m, int d);

/// Left side of the P–Q̂ pairing Σ_{i<d} ch P_{B_i}·ch Q̂_{U_{m,d-i}} + ch P_{U_{m,d}},
/// computed from closed forms; zero exactly when the identity holds.
GradedSchurVector verify_orthogonality(int m, int d);

/// Ordinary (non-equivariant) Kazhdan-Lusztig polynomial of the uniform
/// matroid, as the graded dimension of the closed-form ch P.
IntPolynomial ordinary_kl(int m, int d);

/// Ordinary Kazhdan-Lusztig polynomial computed through the scalar flat-count
/// recurrence over integer polynomials, with no Schur-basis machinery.
IntPolynomial ordinary_kl_oracle(int m, int d);

} // namespace eqkl

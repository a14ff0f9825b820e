#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "eqkl/graded.hpp"
#include "eqkl/matroid_kl.hpp"

namespace eqkl {

// --- plain text / LaTeX -----------------------------------------------------

std::string to_text(const Partition& p);
std::string to_text(const SchurVector& v);
std::string to_text(const GradedSchurVector& v);
std::string to_text(const IntPolynomial& v);

/// LaTeX math-mode rendering. `symbol` is the basis letter: "s" for Schur
/// functions, "V" for the irreducible-representation view.
std::string to_latex(const Partition& p);
std::string to_latex(const SchurVector& v, std::string_view symbol = "s");
std::string to_latex(const GradedSchurVector& v, std::string_view symbol = "s");
std::string to_latex(const IntPolynomial& v);

// --- JSON --------------------------------------------------------------------
// Partitions serialize as arrays of parts, largest first; skew shapes as
// {"outer":[...],"inner":[...]}; Schur vectors as arrays of
// {"partition":[...],"coeff":n} in canonical order; graded vectors as arrays
// of {"degree":k,"terms":[...]} with degrees ascending; integer polynomials
// as {"coeffs":[[degree,"decimal"],...]}.

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const SkewShape& s);
void from_json(const nlohmann::json& j, SkewShape& s);

void to_json(nlohmann::json& j, const SchurVector& v);
void from_json(const nlohmann::json& j, SchurVector& v);

void to_json(nlohmann::json& j, const GradedSchurVector& v);
void from_json(const nlohmann::json& j, GradedSchurVector& v);

void to_json(nlohmann::json& j, const IntPolynomial& v);
void from_json(const nlohmann::json& j, IntPolynomial& v);

void to_json(nlohmann::json& j, const MatroidId& id);
MatroidId matroid_from_json(const nlohmann::json& j);

/// {"matroid": ..., "poly": "P"|"Q"|"H"|"ordinary-KL", "value": ...}
nlohmann::json wrap_result(const MatroidId& id, std::string_view poly,
                           const GradedSchurVector& value);
nlohmann::json wrap_result(const MatroidId& id, std::string_view poly,
                           const IntPolynomial& value);

} // namespace eqkl

#include "eqkl/render.hpp"

#include <vector>

namespace eqkl {

namespace {

std::string parts_text(const Partition& p) {
    std::string out = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(p.part(i));
    }
    out += ")";
    return out;
}

std::string schur_term_text(const Partition& p, Coeff magnitude) {
    std::string out;
    if (magnitude != 1) out += std::to_string(magnitude) + "·";
    out += "s" + parts_text(p);
    return out;
}

std::string schur_term_latex(const Partition& p, Coeff magnitude, std::string_view symbol) {
    std::string out;
    if (magnitude != 1) out += std::to_string(magnitude) + "\\,";
    out += std::string(symbol) + "_{" + parts_text(p) + "}";
    return out;
}

// Joins signed term strings: each piece carries its magnitude rendering, the
// sign placement is handled here ("a - b + c", leading "-a").
std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& [negative, body] = pieces[i];
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

std::vector<std::pair<bool, std::string>> schur_pieces(const SchurVector& v, bool latex,
                                                       std::string_view symbol) {
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [p, c] : v.terms()) {
        const Coeff magnitude = c < 0 ? -c : c;
        pieces.emplace_back(c < 0, latex ? schur_term_latex(p, magnitude, symbol)
                                         : schur_term_text(p, magnitude));
    }
    return pieces;
}

std::string t_power_text(int degree) {
    if (degree == 1) return "t";
    return "t^" + std::to_string(degree);
}

std::string t_power_latex(int degree) {
    if (degree == 1) return "t";
    return "t^{" + std::to_string(degree) + "}";
}

std::string graded_render(const GradedSchurVector& v, bool latex, std::string_view symbol) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [degree, value] : v.coeffs()) {
        // Factor out -1 when every term of this degree is negative.
        bool all_negative = true;
        for (const auto& [p, c] : value.terms()) all_negative = all_negative && c < 0;
        const SchurVector shown = all_negative ? -value : value;
        std::string inner = join_signed(schur_pieces(shown, latex, symbol));
        const bool multi = shown.terms().size() > 1;
        std::string body;
        if (degree == 0) {
            body = multi && all_negative ? "(" + inner + ")" : inner;
        } else if (latex) {
            body = (multi ? "(" + inner + ")" : inner) + " " + t_power_latex(degree);
        } else {
            body = t_power_text(degree) + "·" + (multi ? "(" + inner + ")" : inner);
        }
        pieces.emplace_back(all_negative, body);
    }
    return join_signed(pieces);
}

std::string int_poly_render(const IntPolynomial& v, bool latex) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<bool, std::string>> pieces;
    for (const auto& [degree, value] : v.coeffs()) {
        const bool negative = value.is_negative();
        const BigInt magnitude = negative ? -value : value;
        std::string body;
        if (degree == 0) {
            body = magnitude.to_decimal();
        } else {
            const std::string tp = latex ? t_power_latex(degree) : t_power_text(degree);
            body = magnitude == BigInt(1) ? tp : magnitude.to_decimal() + tp;
        }
        pieces.emplace_back(negative, body);
    }
    return join_signed(pieces);
}

} // namespace

std::string to_text(const Partition& p) { return parts_text(p); }

std::string to_text(const SchurVector& v) { return join_signed(schur_pieces(v, false, "s")); }

std::string to_text(const GradedSchurVector& v) { return graded_render(v, false, "s"); }

std::string to_text(const IntPolynomial& v) { return int_poly_render(v, false); }

std::string to_latex(const Partition& p) { return parts_text(p); }

std::string to_latex(const SchurVector& v, std::string_view symbol) {
    return join_signed(schur_pieces(v, true, symbol));
}

std::string to_latex(const GradedSchurVector& v, std::string_view symbol) {
    return graded_render(v, true, symbol);
}

std::string to_latex(const IntPolynomial& v) { return int_poly_render(v, true); }

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
    p = Partition::from_parts(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const SkewShape& s) {
    j = nlohmann::json{{"outer", s.outer()}, {"inner", s.inner()}};
}

void from_json(const nlohmann::json& j, SkewShape& s) {
    s = SkewShape(j.at("outer").get<Partition>(), j.at("inner").get<Partition>());
}

void to_json(nlohmann::json& j, const SchurVector& v) {
    j = nlohmann::json::array();
    for (const auto& [p, c] : v.terms()) {
        j.push_back(nlohmann::json{{"partition", p}, {"coeff", c}});
    }
}

void from_json(const nlohmann::json& j, SchurVector& v) {
    v = SchurVector();
    for (const auto& term : j) {
        v.add_term(term.at("partition").get<Partition>(), term.at("coeff").get<Coeff>());
    }
}

void to_json(nlohmann::json& j, const GradedSchurVector& v) {
    j = nlohmann::json::array();
    for (const auto& [degree, value] : v.coeffs()) {
        nlohmann::json terms;
        to_json(terms, value);
        j.push_back(nlohmann::json{{"degree", degree}, {"terms", terms}});
    }
}

void from_json(const nlohmann::json& j, GradedSchurVector& v) {
    v = GradedSchurVector();
    for (const auto& entry : j) {
        v.add_term(entry.at("degree").get<int>(), entry.at("terms").get<SchurVector>());
    }
}

void to_json(nlohmann::json& j, const IntPolynomial& v) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [degree, value] : v.coeffs()) {
        coeffs.push_back(nlohmann::json::array({degree, value.to_decimal()}));
    }
    j = nlohmann::json{{"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, IntPolynomial& v) {
    v = IntPolynomial();
    for (const auto& entry : j.at("coeffs")) {
        v.add_term(entry.at(0).get<int>(), BigInt::from_decimal(entry.at(1).get<std::string>()));
    }
}

void to_json(nlohmann::json& j, const MatroidId& id) {
    if (id.family() == MatroidId::Family::Boolean) {
        j = nlohmann::json{{"family", "boolean"}, {"n", id.d()}};
    } else {
        j = nlohmann::json{{"family", "uniform"}, {"m", id.m()}, {"d", id.d()}};
    }
}

MatroidId matroid_from_json(const nlohmann::json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "boolean") return MatroidId::boolean(j.at("n").get<int>());
    if (family == "uniform")
        return MatroidId::uniform(j.at("m").get<int>(), j.at("d").get<int>());
    throw std::invalid_argument("matroid_from_json: unknown family " + family);
}

nlohmann::json wrap_result(const MatroidId& id, std::string_view poly,
                           const GradedSchurVector& value) {
    return nlohmann::json{{"matroid", id}, {"poly", std::string(poly)}, {"value", value}};
}

nlohmann::json wrap_result(const MatroidId& id, std::string_view poly,
                           const IntPolynomial& value) {
    return nlohmann::json{{"matroid", id}, {"poly", std::string(poly)}, {"value", value}};
}

} // namespace eqkl

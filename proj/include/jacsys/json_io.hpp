#pragma once

// JSON serialization for equation sets, solution tuples, and coefficient
// lists.  Keys are emitted in a fixed order and all rational values are
// strings ("p" or "p/q"), so serializing a parsed document reproduces the
// original bytes.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "homogeneous.hpp"
#include "multipoly.hpp"
#include "systems.hpp"

namespace jacsys {

using Json = nlohmann::ordered_json;

// ASCII variable keys (the display names use subscripts and lambda).
inline std::string var_key(VarId v) {
    switch (v.kind) {
        case VarId::Z: return "Z_" + std::to_string(v.index);
        case VarId::Y: return "Y";
        case VarId::Lambda: return "lambda";
        case VarId::Datum: return "F";
        default: return "p" + std::to_string(v.index);
    }
}

inline VarId parse_var_key(const std::string& s) {
    if (s == "Y") return VarId::y();
    if (s == "lambda") return VarId::lambda();
    if (s == "F") return VarId::datum();
    try {
        if (s.rfind("Z_", 0) == 0) return VarId::z(std::stoi(s.substr(2)));
        if (!s.empty() && s[0] == 'p') return VarId::aux(std::stoi(s.substr(1)));
    } catch (const std::exception&) {
    }
    throw DomainError("unknown variable key '" + s + "'");
}

inline std::string monomial_key(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += "*";
        out += var_key(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline Monomial parse_monomial_key(const std::string& s) {
    if (s == "1") return Monomial::one();
    std::vector<std::pair<VarId, int>> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t star = s.find('*', pos);
        std::string piece = s.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? s.size() : star + 1;
        int exp = 1;
        std::size_t caret = piece.find('^');
        // A '^' belonging to the variable name ("Z_-1") cannot occur: names
        // never contain '^'.
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(piece.substr(caret + 1));
            } catch (const std::exception&) {
                throw DomainError("bad exponent in monomial '" + s + "'");
            }
            piece = piece.substr(0, caret);
        }
        factors.emplace_back(parse_var_key(piece), exp);
    }
    return Monomial(factors);
}

inline Json to_json(const MultiPoly& f) {
    Json terms = Json::array();
    for (const auto& [mono, c] : f.terms())
        terms.push_back(Json{{"c", to_string(c)}, {"m", monomial_key(mono)}});
    return terms;
}

inline MultiPoly multipoly_from_json(const Json& j) {
    MultiPoly out;
    for (const auto& t : j)
        out += MultiPoly::term(parse_monomial_key(t.at("m").get<std::string>()),
                               parse_rational(t.at("c").get<std::string>()));
    return out;
}

inline std::string kind_key(SystemKind k) {
    switch (k) {
        case SystemKind::Standard: return "standard";
        case SystemKind::Homogeneous: return "homogeneous";
        case SystemKind::Generalized: return "generalized";
        case SystemKind::Sparse: return "sparse";
        default: return "reduced";
    }
}

inline SystemKind parse_kind_key(const std::string& s) {
    if (s == "standard") return SystemKind::Standard;
    if (s == "homogeneous") return SystemKind::Homogeneous;
    if (s == "generalized") return SystemKind::Generalized;
    if (s == "sparse") return SystemKind::Sparse;
    if (s == "reduced") return SystemKind::Reduced;
    throw DomainError("unknown system kind '" + s + "'");
}

inline Json to_json(const EquationSet& eqs) {
    Json j;
    j["kind"] = kind_key(eqs.spec.kind);
    j["n"] = eqs.spec.n;
    j["m"] = eqs.spec.m;
    j["lead_exponent"] = eqs.spec.lead_exponent;
    j["support_step"] = eqs.spec.support_step;
    Json lambdas = Json::array();
    for (const auto& l : eqs.spec.lambdas) lambdas.push_back(to_string(l));
    j["lambdas"] = lambdas;
    Json vars = Json::array();
    for (VarId v : eqs.variables) vars.push_back(var_key(v));
    j["variables"] = vars;
    if (!eqs.weights.empty()) {
        Json w = Json::object();
        for (const auto& [v, d] : eqs.weights) w[var_key(v)] = d;
        j["weights"] = w;
    }
    Json eqj = Json::array();
    for (const auto& e : eqs.equations)
        eqj.push_back(Json{{"text", e.str()}, {"terms", to_json(e)}});
    j["equations"] = eqj;
    return j;
}

inline EquationSet equations_from_json(const Json& j) {
    EquationSet out;
    out.spec.kind = parse_kind_key(j.at("kind").get<std::string>());
    out.spec.n = j.at("n").get<long>();
    out.spec.m = j.at("m").get<long>();
    out.spec.lead_exponent = j.at("lead_exponent").get<long>();
    out.spec.support_step = j.at("support_step").get<long>();
    for (const auto& l : j.at("lambdas"))
        out.spec.lambdas.push_back(parse_rational(l.get<std::string>()));
    for (const auto& v : j.at("variables")) out.variables.push_back(parse_var_key(v.get<std::string>()));
    if (j.contains("weights"))
        for (auto it = j.at("weights").begin(); it != j.at("weights").end(); ++it)
            out.weights[parse_var_key(it.key())] = it.value().get<long>();
    for (const auto& e : j.at("equations"))
        out.equations.push_back(multipoly_from_json(e.at("terms")));
    return out;
}

inline Json to_json(const SolutionTuple& t) {
    Json j;
    if (const auto* r = std::get_if<RationalTuple>(&t)) {
        j["type"] = "rational";
        Json coords = Json::array();
        for (const auto& c : r->coords) coords.push_back(to_string(c));
        j["coords"] = coords;
    } else if (const auto* a = std::get_if<AlgebraicTuple>(&t)) {
        j["type"] = "algebraic";
        j["generator"] = a->ring->generator_name();
        j["modulus"] = a->ring->modulus().str(a->ring->generator_name());
        if (auto e = a->ring->cyclotomic_order()) j["cyclotomic_order"] = *e;
        Json coords = Json::array();
        for (const auto& c : a->coords) coords.push_back(c.str());
        j["coords"] = coords;
    } else {
        const auto& c = std::get<ComplexTuple>(t);
        j["type"] = "complex";
        Json coords = Json::array();
        for (const auto& z : c.coords) coords.push_back(Json::array({z.real(), z.imag()}));
        j["coords"] = coords;
    }
    return j;
}

inline Json coefficients_to_json(const std::vector<Rational>& coeffs) {
    Json a = Json::array();
    for (const auto& c : coeffs) a.push_back(to_string(c));
    return a;
}

inline std::vector<Rational> coefficients_from_json(const Json& j) {
    std::vector<Rational> out;
    for (const auto& c : j) out.push_back(parse_rational(c.get<std::string>()));
    return out;
}

}  // namespace jacsys

#pragma once

// Command-line front end, implemented as a library function so the test
// suite can drive it without spawning processes.
//
// Exit codes: 0 success, 1 domain error (invalid degrees, degenerate
// systems, non-normalizable pairs, ...), 2 usage error (bad flags or
// malformed values).

#include "CLI11.hpp"

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "homogeneous.hpp"
#include "jacobian.hpp"
#include "json_io.hpp"
#include "systems.hpp"
#include "verify.hpp"

namespace jacsys {

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

namespace cli_detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

inline Rational parse_rational_arg(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

inline std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational_arg(trim(item)));
    if (out.empty()) throw UsageError("expected a comma-separated list of rationals");
    return out;
}

// Parse a univariate polynomial in x: terms joined by +/-, each a product
// of rational factors and x or x^k, e.g. "x^3 + (3/2)*x" or "-1/8*x^2".
inline UniPoly<Rational> parse_unipoly(const std::string& src) {
    std::string t;
    for (char c : src)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw UsageError("empty polynomial expression");

    std::vector<std::pair<int, std::string>> terms;  // sign, body
    int sign = 1;
    std::size_t pos = 0;
    if (t[0] == '+') pos = 1;
    else if (t[0] == '-') { sign = -1; pos = 1; }
    std::string cur;
    int depth = 0;
    for (; pos <= t.size(); ++pos) {
        if (pos == t.size() || ((t[pos] == '+' || t[pos] == '-') && depth == 0)) {
            if (cur.empty()) throw UsageError("malformed polynomial '" + src + "'");
            terms.emplace_back(sign, cur);
            cur.clear();
            if (pos < t.size()) sign = t[pos] == '-' ? -1 : 1;
        } else {
            if (t[pos] == '(') ++depth;
            if (t[pos] == ')') --depth;
            cur += t[pos];
        }
    }
    if (depth != 0) throw UsageError("unbalanced parentheses in '" + src + "'");

    UniPoly<Rational> out;
    for (auto& [sg, body] : terms) {
        Rational coeff(sg);
        long deg = 0;
        std::vector<std::string> pieces;
        std::string piece;
        int d = 0;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || (body[i] == '*' && d == 0)) {
                pieces.push_back(piece);
                piece.clear();
            } else {
                if (body[i] == '(') ++d;
                if (body[i] == ')') --d;
                piece += body[i];
            }
        }
        for (std::string p : pieces) {
            if (p.empty()) throw UsageError("malformed polynomial '" + src + "'");
            if (p.front() == '(' && p.back() == ')') p = p.substr(1, p.size() - 2);
            std::size_t xp = p.find('x');
            if (xp == std::string::npos) {
                coeff *= parse_rational_arg(p);
                continue;
            }
            if (xp > 0) coeff *= parse_rational_arg(p.substr(0, xp));
            std::string xpart = p.substr(xp);
            if (xpart == "x") {
                deg += 1;
            } else if (xpart.rfind("x^", 0) == 0) {
                try {
                    std::size_t used = 0;
                    long e = std::stol(xpart.substr(2), &used);
                    if (e < 0 || used != xpart.size() - 2) throw std::invalid_argument("");
                    deg += e;
                } catch (const std::exception&) {
                    throw UsageError("bad exponent in '" + p + "'");
                }
            } else {
                throw UsageError("cannot parse factor '" + p + "'");
            }
        }
        out.set_coeff(deg, out.coeff(deg) + coeff);
    }
    return out;
}

inline std::string joined_variables(const EquationSet& eqs) {
    std::string s;
    for (std::size_t i = 0; i < eqs.variables.size(); ++i)
        s += (i ? ", " : "") + eqs.variables[i].name();
    return s;
}

inline void print_equation_set(const EquationSet& eqs, const std::string& title,
                               const std::string& label, bool json, std::ostream& out) {
    if (json) {
        out << to_json(eqs).dump(2) << "\n";
        return;
    }
    out << title << "\n";
    out << "variables: " << joined_variables(eqs) << "\n";
    out << format_equations(eqs, label);
    if (!eqs.weights.empty()) {
        auto rep = check_w_homogeneity(eqs);
        out << "weighted degrees:";
        for (const auto& d : rep.degrees)
            out << " " << (d ? std::to_string(*d) : std::string("-"));
        out << (rep.all_homogeneous ? "  (all weighted homogeneous)" : "") << "\n";
    }
}

inline std::string tuple_str(const SolutionTuple& t) { return describe(t); }

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact polynomial systems attached to a degree pair (n, m)"};
    app.name("jacsys");
    app.require_subcommand(1);

    long n = 0, m = 0, step = 0, order = 0, orbit_i = 0;
    unsigned seed = 0;
    bool json = false;
    std::string lambdas_csv, datum_s, prefix_csv, tuple_csv, point_csv;
    std::string pexpr, qexpr, case_name, lambda_tail_s;

    auto add_nm = [&](CLI::App* sc) {
        sc->add_option("-n", n, "degree n (>= 2)")->required();
        sc->add_option("-m", m, "degree m (>= 2)")->required();
    };
    auto add_json = [&](CLI::App* sc) { sc->add_flag("--json", json, "emit JSON"); };

    auto* sc_gen = app.add_subcommand("gen", "standard system for a degree pair");
    add_nm(sc_gen);
    sc_gen->add_option("--lambdas", lambdas_csv, "lambda_0,...,lambda_{m+n-2} (default 1,0,...)");
    sc_gen->add_option("--datum", datum_s, "rational datum value replacing the formal F");
    add_json(sc_gen);

    auto* sc_hom = app.add_subcommand("gen-homogeneous", "graded system with datum Y^{m+n-1}");
    add_nm(sc_hom);
    add_json(sc_hom);

    auto* sc_mod = app.add_subcommand("gen-modified",
                                      "catalogued modified systems for (n, m) = (2, 3)");
    sc_mod->add_option("--case", case_name, "which system: r2 or r3")->required();
    add_json(sc_mod);

    auto* sc_sparse = app.add_subcommand("gen-sparse", "sparse-support system");
    add_nm(sc_sparse);
    sc_sparse->add_option("--step", step, "support step d (d | m+n-1, d > gcd(n, m))")->required();
    sc_sparse->add_option("--datum", datum_s, "rational datum value replacing the formal lambda");
    add_json(sc_sparse);

    auto* sc_ext = app.add_subcommand("extend", "extend a solution prefix recursively");
    add_nm(sc_ext);
    sc_ext->add_option("--prefix", prefix_csv, "c_{-1},...,c_{-(m+n-2)}")->required();
    sc_ext->add_option("--order", order, "number of coefficients to produce")->required();
    add_json(sc_ext);

    auto* sc_solve = app.add_subcommand("solve", "solve the reduced system for a lambda target");
    add_nm(sc_solve);
    sc_solve->add_option("--lambda-tail", lambda_tail_s, "rational target value")->required();
    sc_solve->add_option("--seed", seed, "seed for the numeric root finder");
    add_json(sc_solve);

    auto* sc_jac = app.add_subcommand("jac-det", "Jacobian determinant of the standard system");
    add_nm(sc_jac);
    sc_jac->add_option("--lambdas", lambdas_csv, "lambda_0,...,lambda_{m+n-2} (default 1,0,...)");
    sc_jac->add_option("--point", point_csv, "evaluate at Z_{-1},...,Z_{-(m+n-2)}");
    add_json(sc_jac);

    auto* sc_ver = app.add_subcommand("verify-pair", "audit a candidate pair (p, q)");
    add_nm(sc_ver);
    sc_ver->add_option("--p", pexpr, "polynomial p, e.g. \"x^2+1\"")->required();
    sc_ver->add_option("--q", qexpr, "polynomial q, e.g. \"x^3+(3/2)*x\"")->required();
    add_json(sc_ver);

    auto* sc_cond = app.add_subcommand("conditions", "pair conditions for a reduced tuple");
    add_nm(sc_cond);
    sc_cond->add_option("--tuple", tuple_csv, "p_0,...,p_{n-2}")->required();
    add_json(sc_cond);

    auto* sc_orbit = app.add_subcommand("orbit", "root-of-unity action on a coefficient tuple");
    add_nm(sc_orbit);
    sc_orbit->add_option("-i", orbit_i, "power of the primitive (m+n-1)-th root")->required();
    sc_orbit->add_option("--tuple", tuple_csv, "c_{-1},...,c_{-(m+n-2)}")->required();
    add_json(sc_orbit);

    auto* sc_norm = app.add_subcommand("normalize", "normalize a pair to bracket constant 1");
    add_nm(sc_norm);
    sc_norm->add_option("--p", pexpr, "polynomial p")->required();
    sc_norm->add_option("--q", qexpr, "polynomial q")->required();
    add_json(sc_norm);

    auto* sc_fix = app.add_subcommand("fixtures", "print the catalogued modified systems");
    add_json(sc_fix);

    try {
        std::vector<const char*> argv;
        argv.push_back("jacsys");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(sc_gen)) {
            std::vector<Rational> lambdas =
                lambdas_csv.empty() ? std::vector<Rational>{}
                                    : cli_detail::parse_rational_list(lambdas_csv);
            MultiPoly datum = datum_s.empty()
                                  ? formal_datum()
                                  : MultiPoly(cli_detail::parse_rational_arg(datum_s));
            auto eqs = build_standard(n, m, lambdas, datum);
            cli_detail::print_equation_set(
                eqs, "standard system  n=" + std::to_string(n) + "  m=" + std::to_string(m),
                "E", json, out);
        } else if (app.got_subcommand(sc_hom)) {
            auto eqs = build_homogeneous(n, m);
            cli_detail::print_equation_set(
                eqs, "graded system  n=" + std::to_string(n) + "  m=" + std::to_string(m) +
                         "  datum Y^" + std::to_string(m + n - 1),
                "E", json, out);
        } else if (app.got_subcommand(sc_mod)) {
            long r;
            if (case_name == "r2") r = 2;
            else if (case_name == "r3") r = 3;
            else throw UsageError("--case must be r2 or r3");
            auto eqs = build_generalized(2, 3, r);
            cli_detail::print_equation_set(
                eqs, "modified system  (n, m) = (2, 3)  lead exponent r=" + std::to_string(r),
                "E", json, out);
        } else if (app.got_subcommand(sc_sparse)) {
            MultiPoly datum = datum_s.empty()
                                  ? formal_lambda()
                                  : MultiPoly(cli_detail::parse_rational_arg(datum_s));
            auto eqs = build_sparse(n, m, step, datum);
            cli_detail::print_equation_set(
                eqs, "sparse system  n=" + std::to_string(n) + "  m=" + std::to_string(m) +
                         "  step d=" + std::to_string(step),
                "G", json, out);
        } else if (app.got_subcommand(sc_ext)) {
            auto prefix = cli_detail::parse_rational_list(prefix_csv);
            auto coeffs = extend_solution(n, m, prefix, order);
            if (json) {
                Json j;
                j["n"] = n;
                j["m"] = m;
                j["order"] = order;
                j["coefficients"] = coefficients_to_json(coeffs);
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    out << "c_{-" << (i + 1) << "} = " << to_string(coeffs[i]) << "\n";
            }
        } else if (app.got_subcommand(sc_solve)) {
            Rational target = cli_detail::parse_rational_arg(lambda_tail_s);
            auto res = solve_reduced(n, m, target, seed);
            if (json) {
                Json j;
                j["n"] = n;
                j["m"] = m;
                j["lambda_tail"] = to_string(target);
                j["exact"] = res.exact;
                j["degenerate"] = res.degenerate;
                Json sols = Json::array();
                for (const auto& s : res.solutions) sols.push_back(to_json(s));
                j["solutions"] = sols;
                out << j.dump(2) << "\n";
            } else {
                out << res.solutions.size() << " solution"
                    << (res.solutions.size() == 1 ? "" : "s") << "  (exact: "
                    << (res.exact ? "yes" : "no") << ")"
                    << (res.degenerate ? "  [lambda = 0 is degenerate]" : "") << "\n";
                for (std::size_t i = 0; i < res.solutions.size(); ++i)
                    out << (i + 1) << ": " << cli_detail::tuple_str(res.solutions[i]) << "\n";
            }
        } else if (app.got_subcommand(sc_jac)) {
            std::vector<Rational> lambdas =
                lambdas_csv.empty() ? std::vector<Rational>{}
                                    : cli_detail::parse_rational_list(lambdas_csv);
            auto J = jacobian_formula(n, m, lambdas);
            if (!point_csv.empty()) {
                auto vals = cli_detail::parse_rational_list(point_csv);
                if (vals.size() != static_cast<std::size_t>(m + n - 2))
                    throw UsageError("expected " + std::to_string(m + n - 2) +
                                     " point coordinates");
                std::map<VarId, Rational> point;
                for (std::size_t i = 0; i < vals.size(); ++i)
                    point[VarId::z(-static_cast<int>(i) - 1)] = vals[i];
                Rational det = det_exact(eval_matrix(J, point));
                if (json) {
                    Json j;
                    j["n"] = n;
                    j["m"] = m;
                    j["det"] = to_string(det);
                    out << j.dump(2) << "\n";
                } else {
                    out << "det J = " << to_string(det) << "\n";
                }
            } else {
                MultiPoly det = det_exact(J);
                if (json) {
                    Json j;
                    j["n"] = n;
                    j["m"] = m;
                    j["det"] = det.str();
                    Json rows = Json::array();
                    for (const auto& row : J) {
                        Json r = Json::array();
                        for (const auto& e : row) r.push_back(e.str());
                        rows.push_back(r);
                    }
                    j["matrix"] = rows;
                    out << j.dump(2) << "\n";
                } else {
                    out << "det J = " << det.str() << "\n";
                }
            }
        } else if (app.got_subcommand(sc_ver)) {
            auto p = cli_detail::parse_unipoly(pexpr);
            auto q = cli_detail::parse_unipoly(qexpr);
            auto v = verify_pair(n, m, p, q);
            if (json) {
                Json j;
                j["accepted"] = v.accepted;
                j["normal_form"] = v.normal_form;
                j["constant_bracket"] = v.conditions.wronskian_constant;
                j["bracket_lift"] = v.conditions.bracket_homogeneous;
                j["power_difference"] = v.conditions.power_difference;
                j["divisibility"] = v.conditions.divisibility;
                j["lambda_tilde"] = to_string(v.conditions.lambda_tilde);
                j["reasons"] = v.reasons;
                out << j.dump(2) << "\n";
            } else {
                out << "accepted: " << (v.accepted ? "yes" : "no") << "\n";
                out << "lambda_tilde = " << to_string(v.conditions.lambda_tilde) << "\n";
                for (const auto& r : v.reasons) out << "  - " << r << "\n";
            }
        } else if (app.got_subcommand(sc_cond)) {
            auto tuple = cli_detail::parse_rational_list(tuple_csv);
            auto rep = conditions_for_tuple(n, m, tuple);
            if (json) {
                Json j;
                j["constant_bracket"] = rep.wronskian_constant;
                j["bracket_lift"] = rep.bracket_homogeneous;
                j["power_difference"] = rep.power_difference;
                j["divisibility"] = rep.divisibility;
                j["lambda_tilde"] = to_string(rep.lambda_tilde);
                j["lambda_tail"] = to_string(rep.lambda_tail);
                out << j.dump(2) << "\n";
            } else {
                auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
                out << "constant bracket:  " << pf(rep.wronskian_constant) << "\n";
                out << "bracket lift:      " << pf(rep.bracket_homogeneous) << "\n";
                out << "power difference:  " << pf(rep.power_difference) << "\n";
                out << "divisibility:      " << pf(rep.divisibility) << "\n";
                out << "lambda_tilde = " << to_string(rep.lambda_tilde)
                    << ", lambda_tail = " << to_string(rep.lambda_tail) << "\n";
            }
        } else if (app.got_subcommand(sc_orbit)) {
            detail::require_nondivisible(n, m);
            auto coords = cli_detail::parse_rational_list(tuple_csv);
            auto img = orbit_act(orbit_i, coords, m + n - 1);
            if (json) {
                out << to_json(SolutionTuple(img)).dump(2) << "\n";
            } else {
                out << "orbit image over Q[u]/(" << img.ring->modulus().str("u") << "):\n";
                for (std::size_t k = 0; k < img.coords.size(); ++k)
                    out << "c_{-" << (k + 1) << "} = " << img.coords[k].str() << "\n";
            }
        } else if (app.got_subcommand(sc_norm)) {
            auto p = cli_detail::parse_unipoly(pexpr);
            auto q = cli_detail::parse_unipoly(qexpr);
            auto res = normalize_inf_equiv(n, m, p, q);
            if (json) {
                Json j;
                j["lambda_tilde_input"] = to_string(res.lambda_tilde_input);
                j["shift"] = to_string(res.shift);
                if (res.rational_scale) j["scale"] = to_string(*res.rational_scale);
                else j["scale"] = nullptr;
                if (res.algebraic()) {
                    const auto& pr = std::get<PolynomialPair<QuotientElement>>(res.pair);
                    const auto& ring = pr.p.leading().ring();
                    j["modulus"] = ring->modulus().str("t");
                    j["p"] = pr.p.str();
                    j["q"] = pr.q.str();
                } else {
                    const auto& pr = std::get<PolynomialPair<Rational>>(res.pair);
                    j["modulus"] = nullptr;
                    j["p"] = pr.p.str();
                    j["q"] = pr.q.str();
                }
                out << j.dump(2) << "\n";
            } else {
                out << "input bracket constant: " << to_string(res.lambda_tilde_input)
                    << ", shift b = " << to_string(res.shift) << "\n";
                if (res.algebraic()) {
                    const auto& pr = std::get<PolynomialPair<QuotientElement>>(res.pair);
                    out << "scale adjoined: t with t^" << (m + n - 1) << " = "
                        << to_string(res.lambda_tilde_input) << "\n";
                    out << "p = " << pr.p.str() << "\n";
                    out << "q = " << pr.q.str() << "\n";
                } else {
                    const auto& pr = std::get<PolynomialPair<Rational>>(res.pair);
                    out << "scale a = " << to_string(*res.rational_scale) << "\n";
                    out << "p = " << pr.p.str() << "\n";
                    out << "q = " << pr.q.str() << "\n";
                }
            }
        } else if (app.got_subcommand(sc_fix)) {
            auto r2 = build_generalized(2, 3, 2);
            auto r3 = build_generalized(2, 3, 3);
            if (json) {
                Json j;
                j["r2"] = to_json(r2);
                j["r3"] = to_json(r3);
                out << j.dump(2) << "\n";
            } else {
                cli_detail::print_equation_set(r2, "modified system, lead exponent r=2", "E",
                                               false, out);
                out << "\n";
                cli_detail::print_equation_set(r3, "modified system, lead exponent r=3", "E",
                                               false, out);
            }
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DivisibilityError& e) {
        err << "error: " << e.what() << "\n";
        for (const auto& eq : e.would_be_equations())
            err << "  would-be equation: " << eq.str() << " = 0\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace jacsys

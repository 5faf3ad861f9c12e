#pragma once

// Reduction of the graded (homogeneous-datum) system to n-1 unknowns and
// everything attached to its solutions:
//
//   reduce_system       n-1 equations in p_0..p_{n-2}: with c the monic
//                       n-th root of x^n + sum p_i x^i, the equations are
//                       (c^m)_{-k} = 0 for k = 1..n-2 and
//                       (c^m)_{1-n} - lambda = 0.
//   solve_reduced       all solutions for a rational lambda target; exact
//                       (rational and small algebraic) where possible,
//                       numeric complex tuples otherwise.
//   coefficients_from_reduced / pair_from_tuple
//                       rebuild the series coefficients c_{-k} and the
//                       polynomial pair (p, q = polynomial part of c^m).
//   normalize_inf_equiv shift/scale a pair to bracket constant 1, adjoining
//                       a root of t^{m+n-1} = bracket constant when needed.
//   orbit_act           the root-of-unity action c_{-k} -> u^{(k+1)i} c_{-k}
//                       on coefficient tuples, u a primitive (m+n-1)-th root.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quotient.hpp"
#include "roots.hpp"
#include "systems.hpp"
#include "verify.hpp"

namespace jacsys {

// Raised when n | m or m | n: the reduction degenerates.  The equations it
// would have produced are carried for inspection (they are identities or
// contradictions rather than a square system).
class DivisibilityError : public DomainError {
public:
    DivisibilityError(const std::string& what, std::vector<MultiPoly> would_be)
        : DomainError(what), would_be_(std::move(would_be)) {}
    const std::vector<MultiPoly>& would_be_equations() const { return would_be_; }

private:
    std::vector<MultiPoly> would_be_;
};

// Reduced system in the unknowns p_0..p_{n-2} and the formal lambda.
inline EquationSet reduce_system(long n, long m) {
    if (n < 2 || m < 2) throw DomainError("degrees must be at least 2");
    detail::require_within_cap(m + n);

    EquationSet out;
    out.spec = {n, m, SystemKind::Reduced, {}, formal_lambda(), 1, 1};
    LaurentSeries<MultiPoly> P;
    P.set_coeff(n, MultiPoly(1));
    for (long i = 0; i <= n - 2; ++i) {
        VarId v = VarId::aux(static_cast<int>(i));
        P.set_coeff(i, MultiPoly::variable(v));
        out.variables.push_back(v);
    }
    auto c = monic_nth_root(P, n, 2 - m - n);
    auto cm = c.pow(m, 1 - n);
    for (long k = 1; k <= n - 2; ++k) out.equations.push_back(cm.coeff(-k));
    out.equations.push_back(cm.coeff(1 - n) - formal_lambda());
    detail::append_non_series_vars(out);

    if (m % n == 0 || n % m == 0)
        throw DivisibilityError("one degree divides the other; the reduction degenerates",
                                out.equations);
    return out;
}

// ---------------------------------------------------------------------------
// Solution tuples.

struct RationalTuple {
    std::vector<Rational> coords;
};
struct AlgebraicTuple {
    QuotientRingPtr ring;
    std::vector<QuotientElement> coords;
};
struct ComplexTuple {
    std::vector<Complex> coords;
};
using SolutionTuple = std::variant<RationalTuple, AlgebraicTuple, ComplexTuple>;

inline std::string describe(const SolutionTuple& t) {
    std::string out = "(";
    if (auto* r = std::get_if<RationalTuple>(&t)) {
        for (std::size_t i = 0; i < r->coords.size(); ++i)
            out += (i ? ", " : "") + to_string(r->coords[i]);
    } else if (auto* a = std::get_if<AlgebraicTuple>(&t)) {
        for (std::size_t i = 0; i < a->coords.size(); ++i)
            out += (i ? ", " : "") + a->coords[i].str();
        out += ") in Q[" + a->ring->generator_name() + "]/(" +
               a->ring->modulus().str(a->ring->generator_name()) + ")";
        return out;
    } else if (auto* c = std::get_if<ComplexTuple>(&t)) {
        for (std::size_t i = 0; i < c->coords.size(); ++i) {
            if (i) out += ", ";
            out += format_complex(c->coords[i]);
        }
    }
    return out + ")";
}

struct ReducedSolveResult {
    std::vector<SolutionTuple> solutions;
    bool exact = true;       // false when numeric tuples are present
    bool degenerate = false;  // lambda target was 0
};

namespace detail {

// Every divisor of |v|, or nullopt when |v| is too large to factor by
// trial division.
inline std::optional<std::vector<BigInt>> divisors_of(const BigInt& v_in) {
    BigInt v = v_in < 0 ? BigInt(-v_in) : v_in;
    if (v == 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r > 2000000) return std::nullopt;
    std::vector<BigInt> out;
    for (BigInt d = 1; d <= r; ++d)
        if (v % d == 0) {
            out.push_back(d);
            BigInt e = v / d;
            if (e != d) out.push_back(e);
        }
    return out;
}

// All rational roots (each listed once), or nullopt when the coefficient
// divisors cannot be enumerated.
inline std::optional<std::vector<Rational>> rational_roots(UniPoly<Rational> h) {
    if (h.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<Rational> out;
    if (h.coeff(0) == 0 && h.degree() > 0) {
        out.push_back(0);
        while (h.coeff(0) == 0 && h.degree() > 0) h = div_exact(h, UniPoly<Rational>::x());
    }
    if (h.degree() < 1) {
        std::sort(out.begin(), out.end());
        return out;
    }
    BigInt L = 1;
    for (long i = 0; i <= h.degree(); ++i)
        L = boost::multiprecision::lcm(L, denominator(h.coeff(i)));
    auto int_coeff = [&](long i) {
        Rational c = h.coeff(i) * Rational(L);
        return numerator(c);
    };
    auto d0 = divisors_of(int_coeff(0));
    auto dN = divisors_of(int_coeff(h.degree()));
    if (!d0 || !dN) return std::nullopt;
    std::set<Rational> found;
    for (const BigInt& p : *d0)
        for (const BigInt& q : *dN) {
            Rational cand(p, q);
            Rational neg = -cand;
            if (h.eval(cand) == 0) found.insert(cand);
            if (h.eval(neg) == 0) found.insert(neg);
        }
    out.insert(out.end(), found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline UniPoly<Rational> to_rational_unipoly(const MultiPoly& f, VarId v) {
    auto u = f.as_unipoly_in(v);
    UniPoly<Rational> out;
    for (long i = 0; i <= u.degree(); ++i) out.set_coeff(i, u.coeff(i).constant_value());
    return out;
}

}  // namespace detail

// Exact root classification of a rational univariate polynomial: rational
// roots, conjugate families in explicit quotient rings (cyclotomic factors
// of any degree, arbitrary quadratic factors), and an unresolved factor
// left for numeric treatment.  Multiplicities are collapsed.
struct UnivariateRootSplit {
    std::vector<Rational> rationals;
    std::vector<std::pair<QuotientRingPtr, std::vector<QuotientElement>>> algebraic;
    UniPoly<Rational> unresolved = UniPoly<Rational>(1);
    bool complete_enumeration = true;  // false when rational roots may be missing
};

inline UnivariateRootSplit split_univariate_roots(const UniPoly<Rational>& h_in) {
    if (h_in.is_zero()) throw DomainError("root split of the zero polynomial");
    UnivariateRootSplit out;
    UniPoly<Rational> h = squarefree_part(h_in);
    auto rr = detail::rational_roots(h);
    if (!rr) {
        out.unresolved = h;
        out.complete_enumeration = false;
        return out;
    }
    out.rationals = *rr;
    for (const Rational& r : *rr) {
        UniPoly<Rational> lin = UniPoly<Rational>::x() - UniPoly<Rational>(r);
        h = div_exact(h, lin);
    }
    if (h.degree() >= 1) {
        h = make_monic(h);
        // Peel cyclotomic factors (their roots come with all conjugates in
        // one cyclotomic ring).  phi(e) >= sqrt(e/2) bounds the search.
        long bound = 2 * h.degree() * h.degree() + 2;
        for (long e = 3; e <= bound && h.degree() >= 1; ++e) {
            const auto& phi = cyclotomic_polynomial(static_cast<unsigned>(e));
            if (phi.degree() > h.degree()) continue;
            if (!rem(h, phi).is_zero()) continue;
            auto ring = QuotientRing::cyclotomic(static_cast<unsigned>(e));
            out.algebraic.push_back(
                {ring, roots_among_roots_of_unity(phi, static_cast<unsigned>(e))});
            h = div_exact(h, phi);
        }
    }
    if (h.degree() == 2) {
        // x^2 + b x + c: adjoin one root t; the other is -b - t.
        auto ring = QuotientRing::make(h);
        auto t = QuotientElement::generator(ring);
        QuotientElement other = -(t + QuotientElement(h.coeff(1)));
        out.algebraic.push_back({ring, {t, other}});
        h = UniPoly<Rational>(1);
    }
    out.unresolved = h;
    return out;
}

namespace detail {

constexpr double kResidualTol = 1e-8;
constexpr double kCoeffZeroTol = 1e-11;
constexpr double kDedupeTol = 1e-8;

inline bool tuple_close(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > kDedupeTol) return false;
    return true;
}

inline bool tuple_order_complex(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return a.size() < b.size();
}

// Exact rational solutions by back-substitution through the elimination
// chain.  Sets `complete` to false when a branch could not be enumerated
// exactly (the numeric phase still covers it).
inline void rational_backsubstitution(const std::vector<std::vector<MultiPoly>>& levels,
                                      const std::vector<VarId>& vars,
                                      const std::vector<MultiPoly>& eqs,
                                      std::vector<std::vector<Rational>>& found,
                                      bool& complete) {
    const std::size_t k = vars.size();
    std::map<VarId, MultiPoly> partial;
    std::vector<Rational> acc(k, 0);

    std::function<void(std::size_t)> rec = [&](std::size_t lvl) {
        // lvl counts down; the variable solved here is vars[lvl].
        std::vector<UniPoly<Rational>> specs;
        for (const auto& f : levels[lvl])
            specs.push_back(detail::to_rational_unipoly(f.subs(partial), vars[lvl]));
        const UniPoly<Rational>* pivot = nullptr;
        bool contradiction = false;
        for (const auto& s : specs) {
            if (s.degree() >= 1) {
                if (!pivot) pivot = &s;
            } else if (!s.is_zero()) {
                contradiction = true;
            }
        }
        if (contradiction) return;
        if (!pivot) {
            complete = false;  // every equation vanished: cannot pin the variable
            return;
        }
        auto cands = detail::rational_roots(squarefree_part(*pivot));
        if (!cands) {
            complete = false;
            return;
        }
        for (const Rational& r : *cands) {
            bool ok = true;
            for (const auto& s : specs)
                if (s.degree() >= 1 && !(s.eval(r) == 0)) { ok = false; break; }
            if (!ok) continue;
            acc[lvl] = r;
            partial[vars[lvl]] = MultiPoly(r);
            if (lvl == 0) {
                bool solves = true;
                for (const auto& e : eqs)
                    if (!e.subs(partial).is_zero()) { solves = false; break; }
                if (solves) found.push_back(acc);
            } else {
                rec(lvl - 1);
            }
            partial.erase(vars[lvl]);
        }
    };
    rec(k - 1);
}

// Numeric complex solutions mirroring the same chain.
inline void numeric_backsubstitution(const std::vector<std::vector<MultiPoly>>& levels,
                                     const std::vector<VarId>& vars,
                                     const std::vector<MultiPoly>& eqs, unsigned seed,
                                     std::vector<std::vector<Complex>>& found) {
    const std::size_t k = vars.size();
    std::map<VarId, Complex> partial;
    std::vector<Complex> acc(k);
    auto cast = [](const Rational& c) { return Complex(to_double(c), 0.0); };

    std::function<void(std::size_t)> rec = [&](std::size_t lvl) {
        std::vector<Complex> coeffs;
        bool have_pivot = false;
        for (const auto& f : levels[lvl]) {
            auto u = f.as_unipoly_in(vars[lvl]);
            std::vector<Complex> cs(static_cast<std::size_t>(u.degree()) + 1);
            for (long i = 0; i <= u.degree(); ++i) cs[static_cast<std::size_t>(i)] =
                u.coeff(i).is_zero() ? Complex(0, 0) : u.coeff(i).eval(partial, cast);
            long eff = -1;
            for (long i = u.degree(); i >= 0; --i)
                if (std::abs(cs[static_cast<std::size_t>(i)]) > kCoeffZeroTol) { eff = i; break; }
            if (eff >= 1) {
                cs.resize(static_cast<std::size_t>(eff) + 1);
                coeffs = cs;
                have_pivot = true;
                break;
            }
            if (eff == 0) return;  // nonzero constant: dead branch
        }
        if (!have_pivot) return;  // every equation vanished numerically
        std::vector<Complex> roots;
        try {
            roots = roots_numeric(coeffs, 1e-12, 1000, seed);
        } catch (const ConvergenceError& e) {
            roots = e.partial();
        }
        // Collapse numerically equal roots.
        std::vector<Complex> uniq;
        for (const auto& z : roots) {
            bool dup = false;
            for (const auto& w : uniq)
                if (std::abs(z - w) <= kDedupeTol) { dup = true; break; }
            if (!dup) uniq.push_back(z);
        }
        for (const auto& z : uniq) {
            acc[lvl] = z;
            partial[vars[lvl]] = z;
            if (lvl == 0) {
                double worst = 0;
                for (const auto& e : eqs)
                    worst = std::max(worst, std::abs(e.eval(partial, cast)));
                if (worst <= kResidualTol) found.push_back(acc);
            } else {
                rec(lvl - 1);
            }
            partial.erase(vars[lvl]);
        }
    };
    rec(k - 1);
}

}  // namespace detail

// Solve the reduced system for a fixed rational lambda.  Rational and
// quadratic/cyclotomic algebraic solutions are exact; remaining solutions
// are numeric complex tuples (tolerance 1e-8 on the residual).
inline ReducedSolveResult solve_reduced(long n, long m, const Rational& lambda_value,
                                        unsigned seed = 0) {
    EquationSet red = reduce_system(n, m);
    ReducedSolveResult out;
    out.degenerate = (lambda_value == 0);

    std::map<VarId, MultiPoly> bind{{VarId::lambda(), MultiPoly(lambda_value)}};
    std::vector<MultiPoly> eqs;
    eqs.reserve(red.equations.size());
    for (const auto& e : red.equations) eqs.push_back(e.subs(bind));
    std::vector<VarId> pv;
    for (VarId v : red.variables)
        if (v.kind == VarId::Aux) pv.push_back(v);

    std::vector<std::vector<Rational>> rational_sols;
    std::vector<std::vector<Complex>> numeric_sols;

    if (pv.size() == 1) {
        UniPoly<Rational> h = detail::to_rational_unipoly(eqs[0], pv[0]);
        if (h.is_zero()) throw DomainError("reduced equation vanished identically");
        auto split = split_univariate_roots(h);
        for (const Rational& r : split.rationals) rational_sols.push_back({r});
        for (auto& [ring, roots] : split.algebraic)
            for (auto& z : roots) out.solutions.push_back(AlgebraicTuple{ring, {z}});
        if (split.unresolved.degree() >= 1)
            for (const Complex& z : roots_numeric(split.unresolved, 1e-12, 1000, seed))
                numeric_sols.push_back({z});
    } else {
        // Elimination chain: levels[i] lives in vars[i].., one fewer
        // polynomial per level.
        std::vector<std::vector<MultiPoly>> levels{eqs};
        for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
            std::vector<MultiPoly> next;
            for (std::size_t j = 0; j + 1 < levels[i].size(); ++j) {
                MultiPoly r = uni_resultant(levels[i][j], levels[i][j + 1], pv[i]);
                if (r.is_zero())
                    throw DomainError(
                        "elimination produced the zero polynomial; the reduced system is degenerate");
                next.push_back(r);
            }
            levels.push_back(std::move(next));
        }
        bool complete = true;
        detail::rational_backsubstitution(levels, pv, eqs, rational_sols, complete);
        detail::numeric_backsubstitution(levels, pv, eqs, seed, numeric_sols);
    }

    std::sort(rational_sols.begin(), rational_sols.end());
    rational_sols.erase(std::unique(rational_sols.begin(), rational_sols.end()),
                        rational_sols.end());

    // Drop numeric duplicates of exact solutions, then of each other.
    std::vector<std::vector<Complex>> keep;
    for (const auto& z : numeric_sols) {
        bool dup = false;
        for (const auto& r : rational_sols) {
            std::vector<Complex> rc;
            rc.reserve(r.size());
            for (const auto& v : r) rc.emplace_back(to_double(v), 0.0);
            if (detail::tuple_close(z, rc)) { dup = true; break; }
        }
        for (const auto& w : keep)
            if (detail::tuple_close(z, w)) { dup = true; break; }
        if (!dup) keep.push_back(z);
    }
    std::sort(keep.begin(), keep.end(), detail::tuple_order_complex);

    std::vector<SolutionTuple> ordered;
    for (auto& r : rational_sols) ordered.push_back(RationalTuple{r});
    for (auto& t : out.solutions) ordered.push_back(std::move(t));  // algebraic
    for (auto& z : keep) ordered.push_back(ComplexTuple{z});
    out.solutions = std::move(ordered);
    out.exact = keep.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Reconstruction from a reduced tuple.

// Series coefficients c_{-1}..c_{-depth} of the monic n-th root of
// x^n + sum p_i x^i.
template <typename T>
std::vector<T> coefficients_from_reduced(long n, long m, const std::vector<T>& pvals,
                                         long depth = 0) {
    detail::require_nondivisible(n, m);
    if (depth <= 0) depth = m + n - 2;
    if (static_cast<long>(pvals.size()) != n - 1)
        throw DomainError("expected n-1 reduced coordinates");
    LaurentSeries<T> P;
    P.set_coeff(n, T(1));
    for (std::size_t i = 0; i < pvals.size(); ++i) P.set_coeff(static_cast<long>(i), pvals[i]);
    auto c = monic_nth_root(P, n, -depth);
    return project(c, -1, -depth);
}

template <typename T>
struct PolynomialPair {
    UniPoly<T> p, q;
    T lambda_tail;  // (c^m)_{1-n}
};

// The pair attached to a reduced tuple: p = x^n + sum p_i x^i and q = the
// polynomial part of c^m, plus the tail coefficient (c^m)_{1-n}.
template <typename T>
PolynomialPair<T> pair_from_tuple(long n, long m, const std::vector<T>& pvals) {
    detail::require_nondivisible(n, m);
    if (static_cast<long>(pvals.size()) != n - 1)
        throw DomainError("expected n-1 reduced coordinates");
    UniPoly<T> p = UniPoly<T>::monomial(n, T(1));
    for (std::size_t i = 0; i < pvals.size(); ++i) p.set_coeff(static_cast<long>(i), pvals[i]);
    auto c = monic_nth_root(LaurentSeries<T>::from_unipoly(p), n, 2 - m - n);
    auto cm = c.pow(m, 1 - n);
    PolynomialPair<T> out;
    out.p = p;
    out.q = polynomial_part(cm);
    out.lambda_tail = cm.coeff(1 - n);
    return out;
}

template <typename T>
ConditionReport<T> conditions_for_tuple(long n, long m, const std::vector<T>& pvals) {
    auto pr = pair_from_tuple(n, m, pvals);
    return check_conditions(n, m, pr.p, pr.q);
}

// ---------------------------------------------------------------------------
// Normalization to bracket constant 1.

struct NormalizedPair {
    std::variant<PolynomialPair<Rational>, PolynomialPair<QuotientElement>> pair;
    Rational lambda_tilde_input;          // the bracket constant before scaling
    Rational shift;                       // b in x -> a x + b
    std::optional<Rational> rational_scale;  // a, when lambda_tilde has a rational root
    bool algebraic() const { return pair.index() == 1; }
};

// Shift away the sub-leading coefficient, then scale x -> a x with
// a^{m+n-1} = bracket constant so the normalized pair has bracket 1.  When
// no rational a exists, one is adjoined as the generator of
// Q[t]/(t^{m+n-1} - constant).
inline NormalizedPair normalize_inf_equiv(long n, long m, UniPoly<Rational> p,
                                          UniPoly<Rational> q) {
    detail::require_nondivisible(n, m);
    if (p.degree() != n || q.degree() != m)
        throw DomainError("pair degrees do not match (n, m)");
    if (!(p.leading() == Rational(1)) || !(q.leading() == Rational(1)))
        throw DomainError("pair must be monic");

    Rational b = -p.coeff(n - 1) / Rational(n);
    if (b != 0) {
        p = p.shifted(b);
        q = q.shifted(b);
    }
    UniPoly<Rational> W =
        p.derivative() * q * Rational(m) - p * q.derivative() * Rational(n);
    if (W.degree() != 0)
        throw DomainError("bracket is not a nonzero constant; the pair cannot be normalized");
    Rational lt = W.coeff(0);
    const long e = m + n - 1;
    const Rational tail = make_rational(1, n * (1 - m - n));

    NormalizedPair out;
    out.lambda_tilde_input = lt;
    out.shift = b;
    if (auto a = rational_nth_root(lt, e)) {
        UniPoly<Rational> p2 = p.scaled_arg(*a) * rational_pow(*a, -n);
        UniPoly<Rational> q2 = q.scaled_arg(*a) * rational_pow(*a, -m);
        UniPoly<Rational> W2 =
            p2.derivative() * q2 * Rational(m) - p2 * q2.derivative() * Rational(n);
        if (!(W2 == UniPoly<Rational>(1)))
            throw DomainError("normalization did not reach bracket constant 1");
        out.rational_scale = *a;
        out.pair = PolynomialPair<Rational>{p2, q2, tail};
    } else {
        UniPoly<Rational> mod = UniPoly<Rational>::monomial(e, 1);
        mod.set_coeff(0, -lt);
        auto ring = QuotientRing::make(mod);
        auto a_gen = QuotientElement::generator(ring);
        UniPoly<QuotientElement> p2, q2;
        for (long i = 0; i <= n; ++i)
            if (!(p.coeff(i) == 0))
                p2.set_coeff(i, QuotientElement(p.coeff(i)) * a_gen.pow(i - n));
        for (long i = 0; i <= m; ++i)
            if (!(q.coeff(i) == 0))
                q2.set_coeff(i, QuotientElement(q.coeff(i)) * a_gen.pow(i - m));
        UniPoly<QuotientElement> W2 = p2.derivative() * q2 * QuotientElement(m) -
                                      p2 * q2.derivative() * QuotientElement(n);
        if (!(W2 == UniPoly<QuotientElement>(1)))
            throw DomainError("normalization did not reach bracket constant 1");
        out.pair = PolynomialPair<QuotientElement>{p2, q2, QuotientElement(tail)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Root-of-unity orbit on coefficient tuples.

// Map an element of Q(zeta_d) into Q(zeta_e) (d | e) by t -> u^{e/d};
// plain rationals lift as constants.
inline QuotientElement embed_cyclotomic(const QuotientElement& x, const QuotientRingPtr& target) {
    if (!target->cyclotomic_order())
        throw DomainError("embedding target is not a cyclotomic ring");
    if (!x.ring()) return QuotientElement(target, x.rep());
    unsigned e = *target->cyclotomic_order();
    auto d = x.ring()->cyclotomic_order();
    if (!d) throw DomainError("embedding source is not a cyclotomic ring");
    if (e % *d != 0) throw DomainError("no embedding: source order does not divide target order");
    QuotientElement g = QuotientElement::generator(target).pow(e / *d);
    return x.rep().eval(g);
}

// c_{-k} -> u^{(k+1) i} c_{-k} with u a primitive e-th root of unity;
// coords[j] is c_{-(j+1)}.  For solutions of the graded system take
// e = m+n-1: the action then permutes solutions.
inline AlgebraicTuple orbit_act(long i, const std::vector<QuotientElement>& coords, long e) {
    if (e < 1) throw DomainError("orbit order must be positive");
    auto ring = QuotientRing::cyclotomic(static_cast<unsigned>(e));
    auto u = QuotientElement::generator(ring);
    AlgebraicTuple out;
    out.ring = ring;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        long k = static_cast<long>(j) + 1;
        long ex = ((k + 1) * i) % e;
        if (ex < 0) ex += e;
        out.coords.push_back(embed_cyclotomic(coords[j], ring) * u.pow(ex));
    }
    return out;
}

inline AlgebraicTuple orbit_act(long i, const std::vector<Rational>& coords, long e) {
    std::vector<QuotientElement> lifted;
    lifted.reserve(coords.size());
    for (const auto& c : coords) lifted.emplace_back(c);
    return orbit_act(i, lifted, e);
}

}  // namespace jacsys

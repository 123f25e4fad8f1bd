#include "hyperlog/factor.hpp"

#include <algorithm>
#include <map>

namespace hlog {

Polynomial Factorization::expand() const {
    Polynomial p(unit);
    for (const auto& f : factors) p *= f.poly.pow(f.multiplicity);
    return p;
}

std::optional<Polynomial> poly_sqrt(const Polynomial& p) {
    if (p.is_zero()) return Polynomial();
    if (p.canonical_sign() < 0) return std::nullopt;
    // Greedy root extraction under the monomial order: if p = s^2 then
    // lt(p) = lt(s)^2 and the next term of s is lt(p - s^2)/(2 lt(s)).
    auto [lm, lc] = p.leading_term();
    Mono rm;
    rm.exps = lm.exps;
    for (int32_t& e : rm.exps) {
        if (e % 2 != 0) return std::nullopt;
        e /= 2;
    }
    BigRational rc(lc);
    mpz_class n = rc.get_num(), d = rc.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
    Polynomial s = Polynomial::monomial(rm, BigRational(n, d));
    Polynomial rem = p - s * s;
    while (!rem.is_zero()) {
        auto [m, c] = rem.leading_term();
        auto [sm, sc] = s.leading_term();
        Mono m2;
        m2.exps = sm.exps;
        for (int32_t& e : m2.exps) e *= 2;
        m2.normalize();
        if (!mono_less(m, m2) || !sm.divides(m)) return std::nullopt;
        Polynomial t = Polynomial::monomial(m / sm, c / (2 * sc));
        rem -= (s + s) * t + t * t;
        s += t;
    }
    return s;
}

namespace {

using FactorMap = std::map<Polynomial, std::pair<long, bool>, PolyLess>;

void record(FactorMap& out, const Polynomial& q, long mult, bool certified) {
    auto& slot = out[q];
    slot.first += mult;
    slot.second = certified;
}

Mono common_mono(const Polynomial& p) {
    Mono g;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            g = m;
            first = false;
        } else {
            size_t n = std::min(g.exps.size(), m.exps.size());
            g.exps.resize(n);
            for (size_t i = 0; i < n; i++) g.exps[i] = std::min(g.exps[i], m.exps[i]);
            g.normalize();
        }
        if (g.is_one()) break;
    }
    return g;
}

// Divisors of p assembled from its factorization, each primitive with
// positive sign; includes 1 and excludes none of the multiplicity range.
// Capped to keep pathological inputs from exploding.
std::vector<Polynomial> primitive_divisors(const Polynomial& p) {
    std::vector<Polynomial> divs{Polynomial(1)};
    if (p.is_constant()) return divs;
    Factorization f = poly_factor(p);
    for (const auto& part : f.factors) {
        size_t base = divs.size();
        Polynomial power(1);
        for (long e = 1; e <= part.multiplicity && divs.size() <= 128; e++) {
            power = power * part.poly;
            for (size_t i = 0; i < base && divs.size() <= 128; i++)
                divs.push_back(divs[i] * power);
        }
    }
    return divs;
}

// Univariate polynomials over Q, little-endian coefficient vectors.
using QPoly = std::vector<BigRational>;

void qp_trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

BigRational qp_eval(const QPoly& p, const BigRational& t) {
    BigRational r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

// Monic gcd.
QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            BigRational c = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); i++) a[off + i] -= c * b[i];
            a.pop_back();
            qp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty() && a.back() != 1) {
        BigRational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// Rational roots of p when deg(p) <= 2; exact, complete.
std::vector<BigRational> qp_small_roots(const QPoly& p) {
    std::vector<BigRational> roots;
    if (p.size() == 2) {
        roots.push_back(-p[0] / p[1]);
    } else if (p.size() == 3) {
        BigRational disc = p[1] * p[1] - 4 * p[2] * p[0];
        if (sgn(disc) < 0) return roots;
        mpz_class n = disc.get_num(), d = disc.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) ||
            !mpz_perfect_square_p(d.get_mpz_t()))
            return roots;
        mpz_sqrt(n.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), d.get_mpz_t());
        BigRational s(n, d);
        s.canonicalize();
        roots.push_back((-p[1] + s) / (2 * p[2]));
        if (sgn(s) != 0) roots.push_back((-p[1] - s) / (2 * p[2]));
    }
    return roots;
}

// Positive divisors of |m| assembled from primes below 10^4; a remaining
// rough cofactor is treated as prime, so the list can be incomplete for
// inputs with two large prime factors (harmless: factors are then missed,
// never wrong). Capped.
void collect_divisors(const mpz_class& m_in, std::vector<mpz_class>& out) {
    mpz_class m = abs(m_in);
    out.assign(1, mpz_class(1));
    if (m <= 1) return;
    std::vector<std::pair<mpz_class, long>> primes;
    for (long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_ui_p(m.get_mpz_t(), (unsigned long)p)) continue;
        long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), (unsigned long)p)) {
            m /= p;
            e++;
        }
        primes.emplace_back(p, e);
    }
    if (m > 1) primes.emplace_back(m, 1);
    for (const auto& [p, e] : primes) {
        size_t base = out.size();
        mpz_class power(1);
        for (long k = 1; k <= e && out.size() <= 512; k++) {
            power *= p;
            for (size_t i = 0; i < base && out.size() <= 512; i++)
                out.push_back(out[i] * power);
        }
    }
}

// Complete-in-practice rational roots of an arbitrary-degree p over Q via the
// rational root theorem; exact verification of each candidate.
std::vector<BigRational> qp_rational_roots(const QPoly& p_in) {
    QPoly p = p_in;
    qp_trim(p);
    if (p.size() <= 1) return {};
    if (p.size() <= 3) return qp_small_roots(p);
    // Clear denominators.
    mpz_class den(1);
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic(p.size());
    for (size_t i = 0; i < p.size(); i++) {
        BigRational c = p[i] * BigRational(den);
        ic[i] = c.get_num();
    }
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) low++;
    std::vector<BigRational> roots;
    if (low > 0) roots.push_back(BigRational(0));
    std::vector<mpz_class> us, ws;
    collect_divisors(ic[low], us);
    collect_divisors(ic.back(), ws);
    for (const mpz_class& u : us)
        for (const mpz_class& w : ws) {
            for (int s = -1; s <= 1; s += 2) {
                BigRational t(s * u, w);
                t.canonicalize();
                if (sgn(qp_eval(p, t)) == 0 &&
                    std::find(roots.begin(), roots.end(), t) == roots.end())
                    roots.push_back(t);
            }
        }
    return roots;
}

// Deterministic all-nonzero evaluation point for the given polynomials.
std::optional<std::map<Sym, BigRational>> nonvanishing_point(
    const std::vector<const Polynomial*>& avoid, const std::vector<Sym>& vars,
    long salt) {
    for (long j = 0; j < 64; j++) {
        std::map<Sym, BigRational> pt;
        long i = 0;
        for (Sym v : vars) {
            pt[v] = rat(2 + salt + 3 * j + 5 * i, 1 + ((j + i) % 3));
            i++;
        }
        bool ok = true;
        for (const Polynomial* p : avoid)
            if (sgn(p->eval(pt)) == 0) {
                ok = false;
                break;
            }
        if (ok) return pt;
    }
    return std::nullopt;
}

// Searches for a factor of q linear in v when deg_v(q) >= 3. Any such factor
// is a*v + t*b with a | lead coeff, b | constant coeff up to rationals; the
// scale t is pinned by requiring q(-t*b/a) = 0 at two evaluation points and
// certified by exact division.
std::optional<std::pair<Polynomial, Polynomial>> extract_linear(const Polynomial& q,
                                                               Sym v) {
    long n = q.degree(v);
    Polynomial cn = q.coeff(v, n), c0 = q.coeff(v, 0);
    if (c0.is_zero()) return std::nullopt;

    std::vector<Sym> vars;
    for (Sym u : q.variables())
        if (u != v) vars.push_back(u);

    if (vars.empty()) {
        // Univariate: direct rational root extraction.
        QPoly p((size_t)n + 1);
        for (long k = 0; k <= n; k++) p[(size_t)k] = q.coeff(v, k).constant_value();
        for (const BigRational& r : qp_rational_roots(p)) {
            Polynomial f = (Polynomial::variable(v) - Polynomial(r)).primitive_part();
            auto rest = q.try_divide(f);
            if (rest) return std::make_pair(f, *rest);
        }
        return std::nullopt;
    }

    std::vector<const Polynomial*> avoid{&cn, &c0};
    auto pt1 = nonvanishing_point(avoid, vars, 0);
    auto pt2 = nonvanishing_point(avoid, vars, 101);
    auto pt3 = nonvanishing_point(avoid, vars, 977);
    if (!pt1 || !pt2 || !pt3) return std::nullopt;
    QPoly q1(n + 1), q2(n + 1), q3(n + 1);
    for (long k = 0; k <= n; k++) {
        Polynomial ck = q.coeff(v, k);
        q1[k] = ck.eval(*pt1);
        q2[k] = ck.eval(*pt2);
        q3[k] = ck.eval(*pt3);
    }

    auto image = [n](const QPoly& qq, const BigRational& av, const BigRational& bv) {
        // sum_k qq[k] (-bv)^k av^(n-k) t^k
        QPoly p(n + 1);
        BigRational nb(1);
        for (long k = 0; k <= n; k++) {
            BigRational ap(1);
            for (long i = 0; i < n - k; i++) ap *= av;
            p[k] = qq[k] * nb * ap;
            nb *= -bv;
        }
        return p;
    };

    std::vector<Polynomial> tried;
    for (const Polynomial& a : primitive_divisors(cn)) {
        BigRational a1 = a.eval(*pt1), a2 = a.eval(*pt2), a3 = a.eval(*pt3);
        for (const Polynomial& b : primitive_divisors(c0)) {
            BigRational b1 = b.eval(*pt1), b2 = b.eval(*pt2), b3 = b.eval(*pt3);
            QPoly g = qp_gcd(image(q1, a1, b1), image(q2, a2, b2));
            if (g.size() <= 1) continue;
            if (g.size() > 3) g = qp_gcd(g, image(q3, a3, b3));
            if (g.size() <= 1 || g.size() > 3) continue;
            for (const BigRational& t : qp_small_roots(g)) {
                if (sgn(t) == 0) continue;
                if (sgn(qp_eval(image(q3, a3, b3), t)) != 0) continue;
                Polynomial f =
                    (a * Polynomial::variable(v) + b.scaled(t)).primitive_part();
                bool seen = false;
                for (const Polynomial& old : tried)
                    if (old == f) {
                        seen = true;
                        break;
                    }
                if (seen) continue;
                tried.push_back(f);
                auto rest = q.try_divide(f);
                if (rest) return std::make_pair(f, *rest);
            }
        }
    }
    return std::nullopt;
}

// Splits q (primitive, positive leading sign, square-free, non-constant) into
// factors linear in some variable; quadratics in a variable are split via the
// discriminant, higher v-degrees via extract_linear. out accumulates factors.
void split_factors(const Polynomial& q, FactorMap& out, long mult) {
    if (q.is_constant()) return;
    Polynomial w = q;
    Mono cm = common_mono(w);
    if (!cm.is_one()) {
        w = w.divexact(Polynomial::monomial(cm, BigRational(1)));
        for (size_t i = 0; i < cm.exps.size(); i++)
            for (int32_t e = 0; e < cm.exps[i]; e++)
                record(out, Polynomial::variable((Sym)i), mult, true);
        if (w.is_constant()) return;
    }
    std::vector<Sym> vars = w.variables();
    for (Sym v : vars) {
        Polynomial cont = w.content_wrt(v);
        if (!cont.is_constant()) {
            split_factors(cont, out, mult);
            split_factors(w.divexact(cont), out, mult);
            return;
        }
    }
    for (Sym v : vars) {
        // Linear in v; the v-coefficients are coprime by now: irreducible.
        if (w.degree(v) == 1) {
            record(out, w, mult, true);
            return;
        }
    }
    for (Sym v : vars) {
        if (w.degree(v) != 2) continue;
        Polynomial a = w.coeff(v, 2), b = w.coeff(v, 1), c = w.coeff(v, 0);
        auto d = poly_sqrt(b * b - rat(4) * a * c);
        if (!d) continue;
        Polynomial u = rat(2) * a * Polynomial::variable(v) + b - *d;
        Polynomial cw = u.content_wrt(v);
        if (!cw.is_constant()) u = u.divexact(cw);
        u = u.primitive_part();
        auto rest = w.try_divide(u);
        if (!rest) continue;
        split_factors(u, out, mult);
        split_factors(*rest, out, mult);
        return;
    }
    for (Sym v : vars) {
        if (w.degree(v) < 3) continue;
        auto split = extract_linear(w, v);
        if (split) {
            split_factors(split->first, out, mult);
            split_factors(split->second, out, mult);
            return;
        }
    }
    record(out, w, mult, false);
}

}  // namespace

Factorization poly_factor(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
    Factorization fac;
    fac.unit = p.content();
    if (p.is_constant()) return fac;
    Polynomial w = p.primitive_part();

    FactorMap parts;

    // Monomial content.
    Mono cm = common_mono(w);
    if (!cm.is_one()) {
        w = w.divexact(Polynomial::monomial(cm, BigRational(1)));
        for (size_t i = 0; i < cm.exps.size(); i++)
            if (cm.exps[i] > 0)
                parts[Polynomial::variable((Sym)i)] = {cm.exps[i], true};
    }

    // Square-free decomposition: W_i = prod_{e >= i} q^(e-i+1), so the primes
    // of multiplicity exactly i are (distinct primes of W_i) / (distinct
    // primes of W_{i+1}).
    long i = 1;
    while (!w.is_constant()) {
        Polynomial g = w;
        for (Sym v : w.variables()) {
            g = poly_gcd(g, w.derivative(v));
            if (g.is_one()) break;
        }
        Polynomial s = w.divexact(g);  // distinct primes of w
        Polynomial g2 = g;
        if (!g.is_constant()) {
            for (Sym v : g.variables()) {
                g2 = poly_gcd(g2, g.derivative(v));
                if (g2.is_one()) break;
            }
        }
        Polynomial s_next = g.is_constant() ? Polynomial(1) : g.divexact(g2);
        Polynomial mult_i = s_next.is_one() ? s : s.divexact(s_next);
        if (!mult_i.is_constant()) split_factors(mult_i, parts, i);
        w = g;
        i++;
    }

    // Most significant factor first, matching term printing.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        fac.factors.push_back({it->first, it->second.first, it->second.second});
    return fac;
}

Polynomial resultant_linear(const Polynomial& f, const Polynomial& g, Sym v) {
    if (f.degree(v) > 1)
        throw NonLinearError("resultant_linear: " + f.str() + " is not linear in " +
                             sym_name(v));
    if (g.degree(v) > 1)
        throw NonLinearError("resultant_linear: " + g.str() + " is not linear in " +
                             sym_name(v));
    return f.coeff(v, 1) * g.coeff(v, 0) - f.coeff(v, 0) * g.coeff(v, 1);
}

Polynomial resultant_linear(const Polynomial& f, ResultantPoint g, Sym v) {
    if (f.degree(v) > 1)
        throw NonLinearError("resultant_linear: " + f.str() + " is not linear in " +
                             sym_name(v));
    if (g == ResultantPoint::Zero) return f.coeff(v, 0);
    return f.depends_on(v) ? f.coeff(v, 1) : f;
}

namespace {

// Dense coefficient vector in var with rational-function entries.
using VarPoly = std::vector<RationalFunction>;

void vp_trim(VarPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

VarPoly vp_from(const Polynomial& p, Sym var) {
    VarPoly r((size_t)p.degree(var) + 1);
    for (long k = 0; k < (long)r.size(); k++)
        r[(size_t)k] = RationalFunction(p.coeff(var, k));
    vp_trim(r);
    return r;
}

RationalFunction vp_eval(const VarPoly& p, const RationalFunction& x) {
    RationalFunction r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

// Exact division by (var - sigma); the remainder must vanish.
VarPoly vp_divide_root(const VarPoly& p, const RationalFunction& sigma) {
    VarPoly q(p.size() > 0 ? p.size() - 1 : 0);
    RationalFunction carry;
    for (size_t k = p.size(); k-- > 1;) {
        carry = p[k] + carry * sigma;
        q[k - 1] = carry;
    }
    if (!p.empty() && !(p[0] + carry * sigma).is_zero())
        throw std::logic_error("vp_divide_root: nonzero remainder");
    vp_trim(q);
    return q;
}

}  // namespace

std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& r, Sym var) {
    std::vector<PartialFractionTerm> out;
    if (r.is_zero()) return out;
    if (!r.den().depends_on(var)) {
        // Pure polynomial part in var.
        VarPoly n = vp_from(r.num(), var);
        RationalFunction d = RationalFunction(r.den()).reciprocal();
        for (size_t k = 0; k < n.size(); k++)
            if (!n[k].is_zero())
                out.push_back({n[k] * d, (long)k, 0, RationalFunction()});
        return out;
    }

    Factorization fac = poly_factor(r.den());
    RationalFunction prefactor(BigRational(1) / fac.unit);
    struct Pole {
        RationalFunction sigma;
        long mult;
    };
    std::vector<Pole> poles;
    for (const auto& f : fac.factors) {
        long d = f.poly.degree(var);
        if (d == 0) {
            prefactor = prefactor / RationalFunction(f.poly).pow(f.multiplicity);
        } else if (d == 1) {
            RationalFunction lead(f.poly.coeff(var, 1));
            RationalFunction sigma = -RationalFunction(f.poly.coeff(var, 0)) / lead;
            prefactor = prefactor / lead.pow(f.multiplicity);
            poles.push_back({sigma, f.multiplicity});
        } else {
            throw NonLinearDenominator(
                "partial_fractions: factor " + f.poly.str() + " is not linear in " +
                    sym_name(var),
                f.poly);
        }
    }
    std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) {
        return a.sigma < b.sigma;
    });

    VarPoly num = vp_from(r.num(), var);
    for (auto& c : num) c = c * prefactor;

    // Long division by prod (var - sigma_i)^mult_i.
    VarPoly den{RationalFunction(1)};
    for (const auto& p : poles)
        for (long k = 0; k < p.mult; k++) {
            VarPoly next(den.size() + 1);
            for (size_t j = 0; j < den.size(); j++) {
                next[j + 1] += den[j];
                next[j] -= den[j] * p.sigma;
            }
            den = std::move(next);
        }
    if (num.size() >= den.size()) {
        VarPoly quot(num.size() - den.size() + 1);
        while (num.size() >= den.size()) {
            size_t k = num.size() - den.size();
            RationalFunction c = num.back();  // den is monic
            quot[k] = c;
            for (size_t j = 0; j + 1 < den.size(); j++)
                num[k + j] -= c * den[j];
            num.pop_back();
            vp_trim(num);
        }
        for (size_t k = 0; k < quot.size(); k++)
            if (!quot[k].is_zero())
                out.push_back({quot[k], (long)k, 0, RationalFunction()});
    }

    // Peel highest-order pole terms one at a time; each subtraction makes the
    // numerator divisible by (var - sigma).
    std::vector<long> mult(poles.size());
    for (size_t i = 0; i < poles.size(); i++) mult[i] = poles[i].mult;
    while (true) {
        size_t i = poles.size();
        for (size_t j = 0; j < poles.size(); j++)
            if (mult[j] > 0) { i = j; break; }
        if (i == poles.size()) break;
        // other = prod_{j != i} (var - sigma_j)^mult_j evaluated at sigma_i.
        RationalFunction other(1);
        for (size_t j = 0; j < poles.size(); j++) {
            if (j == i || mult[j] == 0) continue;
            other = other * (poles[i].sigma - poles[j].sigma).pow(mult[j]);
        }
        RationalFunction c = vp_eval(num, poles[i].sigma) / other;
        if (!c.is_zero())
            out.push_back({c, 0, mult[i], poles[i].sigma});
        // num -= c * prod_{j != i}(var - sigma_j)^mult_j, then drop the root.
        VarPoly sub{c};
        for (size_t j = 0; j < poles.size(); j++) {
            if (j == i) continue;
            for (long k = 0; k < mult[j]; k++) {
                VarPoly next(sub.size() + 1);
                for (size_t t = 0; t < sub.size(); t++) {
                    next[t + 1] += sub[t];
                    next[t] -= sub[t] * poles[j].sigma;
                }
                sub = std::move(next);
            }
        }
        if (num.size() < sub.size()) num.resize(sub.size());
        for (size_t t = 0; t < sub.size(); t++) num[t] -= sub[t];
        vp_trim(num);
        num = vp_divide_root(num, poles[i].sigma);
        mult[i]--;
    }
    if (!num.empty())
        throw std::logic_error("partial_fractions: nonzero residue numerator");
    return out;
}

}  // namespace hlog

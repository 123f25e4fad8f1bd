#include "hyperlog/ratfun.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlog {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    BigRational c = den_.content();
    if (c != 1) {
        den_ = den_.scaled(1 / c);
        num_ = num_.scaled(1 / c);
    }
}

BigRational RationalFunction::constant_value() const {
    if (!is_constant())
        throw std::domain_error("RationalFunction::constant_value: not constant");
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RationalFunction r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        if (r.num_.is_zero()) { r.den_ = Polynomial(1); return r; }
        Polynomial g = poly_gcd(r.num_, r.den_);
        if (!g.is_one()) {
            r.num_ = r.num_.divexact(g);
            r.den_ = r.den_.divexact(g);
        }
        BigRational c = r.den_.content();
        if (c != 1) {
            r.den_ = r.den_.scaled(1 / c);
            r.num_ = r.num_.scaled(1 / c);
        }
        return r;
    }
    // num/den + o.num/o.den with den = g*b1, o.den = g*d1: only the factor g
    // can cancel against the new numerator.
    Polynomial g = poly_gcd(den_, o.den_);
    Polynomial b1 = g.is_one() ? den_ : den_.divexact(g);
    Polynomial d1 = g.is_one() ? o.den_ : o.den_.divexact(g);
    r.num_ = num_ * d1 + o.num_ * b1;
    if (r.num_.is_zero()) return r;
    if (!g.is_one()) {
        Polynomial h = poly_gcd(r.num_, g);
        if (!h.is_one()) {
            r.num_ = r.num_.divexact(h);
            g = g.divexact(h);
        }
    }
    r.den_ = g * b1 * d1;
    BigRational c = r.den_.content();
    if (c != 1) {
        r.den_ = r.den_.scaled(1 / c);
        r.num_ = r.num_.scaled(1 / c);
    }
    return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    RationalFunction r;
    if (is_zero() || o.is_zero()) return r;
    // Cross-cancel; the factors stay pairwise coprime, so no final gcd.
    Polynomial g1 = poly_gcd(num_, o.den_);
    Polynomial g2 = poly_gcd(o.num_, den_);
    const Polynomial a = g1.is_one() ? num_ : num_.divexact(g1);
    const Polynomial d = g1.is_one() ? o.den_ : o.den_.divexact(g1);
    const Polynomial c = g2.is_one() ? o.num_ : o.num_.divexact(g2);
    const Polynomial b = g2.is_one() ? den_ : den_.divexact(g2);
    r.num_ = a * c;
    r.den_ = b * d;
    BigRational cc = r.den_.content();
    if (cc != 1) {
        r.den_ = r.den_.scaled(1 / cc);
        r.num_ = r.num_.scaled(1 / cc);
    }
    return r;
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw std::domain_error("RationalFunction: division by zero");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    BigRational c = r.den_.content();
    if (c != 1) {
        r.den_ = r.den_.scaled(1 / c);
        r.num_ = r.num_.scaled(1 / c);
    }
    return r;
}

RationalFunction RationalFunction::pow(long n) const {
    if (n < 0) return reciprocal().pow(-n);
    RationalFunction r;
    r.num_ = num_.pow(n);
    r.den_ = den_.pow(n);
    return r;
}

std::vector<Sym> RationalFunction::variables() const {
    std::vector<Sym> vs = num_.variables();
    for (Sym v : den_.variables())
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

RationalFunction RationalFunction::derivative(Sym v) const {
    if (den_.is_constant()) {
        RationalFunction r;
        r.num_ = num_.derivative(v);
        r.den_ = den_;
        if (r.num_.is_zero()) r.den_ = Polynomial(1);
        return r;
    }
    return RationalFunction(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                            den_ * den_);
}

RationalFunction subst_poly(const Polynomial& p, Sym v, const RationalFunction& value) {
    long d = p.degree(v);
    if (d == 0) return RationalFunction(p);
    RationalFunction r(p.coeff(v, d));
    for (long k = d - 1; k >= 0; k--) r = r * value + RationalFunction(p.coeff(v, k));
    return r;
}

RationalFunction RationalFunction::subst(Sym v, const RationalFunction& value) const {
    if (!depends_on(v)) return *this;
    RationalFunction d = subst_poly(den_, v, value);
    if (d.is_zero())
        throw std::domain_error("RationalFunction::subst: pole at substitution point");
    return subst_poly(num_, v, value) / d;
}

BigRational RationalFunction::eval(const std::map<Sym, BigRational>& point) const {
    BigRational d = den_.eval(point);
    if (sgn(d) == 0) throw std::domain_error("RationalFunction::eval: pole");
    return num_.eval(point) / d;
}

std::complex<double> RationalFunction::eval_c(
    const std::map<Sym, std::complex<double>>& point) const {
    std::complex<double> d = den_.eval_c(point);
    if (d == std::complex<double>(0.0, 0.0))
        throw std::domain_error("RationalFunction::eval_c: pole");
    return num_.eval_c(point) / d;
}

int RationalFunction::compare(const RationalFunction& a, const RationalFunction& b) {
    int c = Polynomial::compare(a.num_, b.num_);
    if (c != 0) return c;
    return Polynomial::compare(a.den_, b.den_);
}

RationalFunction operator*(const BigRational& c, const RationalFunction& f) {
    return RationalFunction(c) * f;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    if (f.den().is_one()) return os << f.num();
    if (f.num().terms().size() > 1)
        os << "(" << f.num() << ")";
    else
        os << f.num();
    os << "/";
    // A single-monomial denominator still needs parens when it has several
    // factors ("x*y"), since / and * associate left.
    const Mono& dm = f.den().leading_term().first;
    int factors = 0;
    for (int32_t e : dm.exps)
        if (e > 0) factors++;
    if (f.den().terms().size() > 1 || factors > 1)
        os << "(" << f.den() << ")";
    else
        os << f.den();
    return os;
}

std::string RationalFunction::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

}  // namespace hlog

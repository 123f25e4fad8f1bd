#pragma once
// Rational functions num/den over the polynomial ring, kept normalized:
// gcd(num, den) = 1, den primitive with positive leading sign (so den = 1
// for polynomials). The zero function is 0/1.

#include "hyperlog/poly.hpp"

namespace hlog {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    explicit RationalFunction(const BigRational& c) : num_(c), den_(1) {}
    explicit RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction variable(Sym v) {
        return RationalFunction(Polynomial::variable(v));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Requires is_constant().
    BigRational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction reciprocal() const;
    RationalFunction pow(long n) const;  // negative n inverts

    bool depends_on(Sym v) const { return num_.depends_on(v) || den_.depends_on(v); }
    std::vector<Sym> variables() const;

    RationalFunction derivative(Sym v) const;
    RationalFunction subst(Sym v, const RationalFunction& value) const;
    BigRational eval(const std::map<Sym, BigRational>& point) const;
    std::complex<double> eval_c(const std::map<Sym, std::complex<double>>& point) const;

    std::string str() const;

    static int compare(const RationalFunction& a, const RationalFunction& b);

private:
    void normalize();

    Polynomial num_, den_;
};

// Horner substitution of a rational value into a polynomial.
RationalFunction subst_poly(const Polynomial& p, Sym v, const RationalFunction& value);

RationalFunction operator*(const BigRational& c, const RationalFunction& f);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

inline bool operator<(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::compare(a, b) < 0;
}

}  // namespace hlog

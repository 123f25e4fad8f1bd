#pragma once
// Sparse multivariate polynomials over Q (GMP rationals) in the variables of
// the global symbol table. Exponent vectors are indexed by symbol id with
// trailing zeros trimmed, so values are unaffected by later table growth.
// The monomial order is graded lexicographic (total degree first, then
// lexicographic with lower symbol ids more significant); it fixes leading
// terms, canonical signs and printing.

#include <complex>
#include <gmpxx.h>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlog/symtab.hpp"

namespace hlog {

using BigRational = mpq_class;
using BigInt = mpz_class;

BigRational rat(long num, long den = 1);

// Exponent vector; exps[i] is the power of symbol id i. Trailing zeros are
// always trimmed (normalize()).
struct Mono {
    std::vector<int32_t> exps;

    void normalize();
    int32_t exp(Sym v) const { return v < (Sym)exps.size() ? exps[(size_t)v] : 0; }
    long total_degree() const;
    bool is_one() const { return exps.empty(); }
    bool divides(const Mono& other) const;

    Mono operator*(const Mono& o) const;
    Mono operator/(const Mono& o) const;  // requires divisibility
    bool operator==(const Mono& o) const { return exps == o.exps; }
};

// Graded lexicographic: higher total degree first; ties broken so that the
// monomial with the larger exponent on the smallest distinguishing symbol id
// is larger.
bool mono_less(const Mono& a, const Mono& b);

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const { return mono_less(a, b); }
};

class RationalFunction;

class Polynomial {
public:
    using TermMap = std::map<Mono, BigRational, MonoLess>;

    Polynomial() = default;
    explicit Polynomial(const BigRational& c);
    explicit Polynomial(long c);
    static Polynomial variable(Sym v);
    static Polynomial monomial(const Mono& m, const BigRational& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Constant term value; the polynomial need not be constant.
    BigRational constant_value() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const BigRational& c) const;
    Polynomial pow(long n) const;  // n >= 0

    void add_term(const Mono& m, const BigRational& c);

    long degree(Sym v) const;
    long total_degree() const;  // -1 for the zero polynomial
    bool depends_on(Sym v) const { return degree(v) > 0; }
    std::vector<Sym> variables() const;

    // Coefficient of v^k as a polynomial in the remaining variables.
    Polynomial coeff(Sym v, long k) const;
    Polynomial leading_coeff(Sym v) const { return coeff(v, degree(v)); }
    Polynomial derivative(Sym v) const;

    // Leading term under the monomial order (largest); zero polynomial -> one
    // monomial with coefficient 0.
    std::pair<Mono, BigRational> leading_term() const;
    // Sign of the leading coefficient: -1, 0, +1.
    int canonical_sign() const;

    // Substitutions. The polynomial variant requires no division; the
    // rational variant clears denominators and is exposed through
    // RationalFunction (see ratfun.hpp).
    Polynomial subst(Sym v, const Polynomial& value) const;
    // Simultaneous numeric evaluation; unassigned symbols are an error.
    BigRational eval(const std::map<Sym, BigRational>& point) const;
    std::complex<double> eval_c(const std::map<Sym, std::complex<double>>& point) const;

    // gcd of all coefficients times the sign of the leading coefficient, as a
    // rational; content() of 6x^2y is 6, of -x/2+y/4 is -1/4.
    BigRational content() const;
    // *this / content(): integer coprime coefficients, positive leading sign.
    Polynomial primitive_part() const;

    // Content and primitive part with respect to a single variable: content
    // is the polynomial gcd of the v-coefficients.
    Polynomial content_wrt(Sym v) const;

    // Exact division; throws std::domain_error if not divisible.
    Polynomial divexact(const Polynomial& d) const;
    // Quotient if divisible.
    std::optional<Polynomial> try_divide(const Polynomial& d) const;

    std::string str() const;

    // Total deterministic order extending the monomial order termwise; used
    // for canonical letter ordering and set keys.
    static int compare(const Polynomial& a, const Polynomial& b);

private:
    TermMap terms_;
};

struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        return Polynomial::compare(a, b) < 0;
    }
};

Polynomial operator*(const BigRational& c, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Multivariate gcd over Q, normalized to a primitive polynomial with positive
// leading sign (gcd(0,0) = 0).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Pseudo-division helpers in one variable are internal to poly.cpp.

}  // namespace hlog

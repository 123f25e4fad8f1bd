#pragma once
// Factorization over Q, linear resultants and partial fractions.
//
// poly_factor splits content, the square-free structure and every factor that
// is linear in some variable (plus quadratics whose discriminant is a perfect
// square); anything left is reported but flagged, since full multivariate
// irreducibility testing is out of scope. An over-coarse factor only makes
// reductions over-approximate and is caught at partial-fraction time.

#include <stdexcept>
#include <vector>

#include "hyperlog/ratfun.hpp"

namespace hlog {

struct FactorPart {
    Polynomial poly;  // content-free, positive leading sign
    long multiplicity = 1;
    bool certified = true;  // false: assumed irreducible only
};

struct Factorization {
    BigRational unit;
    std::vector<FactorPart> factors;  // sorted by Polynomial::compare

    Polynomial expand() const;
};

// p != 0.
Factorization poly_factor(const Polynomial& p);

// Perfect-square test; returns the positive-leading square root if p = r^2.
std::optional<Polynomial> poly_sqrt(const Polynomial& p);

struct NonLinearError : std::runtime_error {
    explicit NonLinearError(const std::string& what) : std::runtime_error(what) {}
};

struct NonLinearDenominator : std::runtime_error {
    NonLinearDenominator(const std::string& what, Polynomial f)
        : std::runtime_error(what), factor(std::move(f)) {}
    Polynomial factor;
};

// [f,g]_v = f^v g_v - f_v g^v for f = f^v v + f_v, g = g^v v + g_v; both
// inputs at most linear in v (NonLinear otherwise). Antisymmetric; vanishes
// iff f and g share their zero in v.
Polynomial resultant_linear(const Polynomial& f, const Polynomial& g, Sym v);

// Sentinel forms: [f,0]_v = f_v (constant term), [f,inf]_v = f^v (leading
// term, falling back to f itself when f does not involve v).
enum class ResultantPoint { Zero, Infinity };
Polynomial resultant_linear(const Polynomial& f, ResultantPoint g, Sym v);

// One summand of a partial-fraction decomposition in var: coeff * var^power
// when pole_order = 0, else coeff / (var - sigma)^pole_order. coeff and sigma
// are free of var.
struct PartialFractionTerm {
    RationalFunction coeff;
    long power = 0;
    long pole_order = 0;
    RationalFunction sigma;
};

// Exact decomposition; requires every var-dependent irreducible factor of the
// denominator to be linear in var, else NonLinearDenominator (the failure
// signal for linear reducibility at this variable).
std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& r, Sym var);

}  // namespace hlog

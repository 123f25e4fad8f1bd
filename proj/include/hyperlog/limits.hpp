#pragma once
// Regularized limits t -> 0 of hyperlogarithm values at infinity. When the
// letters are rational in a parameter t, the value RegLim_{z->inf} L_w(z)
// degenerates as t -> 0; the operations here compute that limit exactly:
//
//   letter_laurent   vanishing degree and leading coefficient of a letter;
//   reglim_word      RegLim_{t->0} as a word rewrite onto the leading
//                    coefficients, valid when no leading coefficient is a
//                    positive real;
//   transform_word   the t-dependent value as a hyperlogarithm of t itself,
//                    with t-free constants from reglim_word;
//   split_positive   the limit when letters do approach the positive real
//                    axis (the integration contour), with branch data, and
//                    with the path split at the positive limit points when
//                    two letters pinch the contour between them.
//
// The limit path is t -> 0 + i*eps (upper half-plane) by default; the flag
// path_sign = -1 selects the lower half-plane, which for real alphabets
// conjugates every i*pi term.

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "hyperlog/expr.hpp"
#include "hyperlog/word.hpp"

namespace hlog {

// Leading Laurent data of a letter at t = 0:
//   sigma(t) = leading * t^degree + subleading * t^subleading_degree + ...
// with leading != 0 and subleading the first nonzero coefficient after it.
// A terminating expansion has subleading = 0 and subleading_degree = degree;
// the zero letter carries the infinite_degree sentinel throughout.
struct LaurentData {
    static constexpr long infinite_degree = std::numeric_limits<long>::max();

    long degree = 0;
    RationalFunction leading;
    long subleading_degree = 0;
    RationalFunction subleading;
};

LaurentData letter_laurent(const RationalFunction& sigma, Sym t);

// A letter of the alphabet had a positive real leading coefficient where the
// letterwise limit formula needs none; the caller must split the path first.
struct PositiveLeadingLetter : std::runtime_error {
    PositiveLeadingLetter(const std::string& what, std::vector<Letter> ls)
        : std::runtime_error(what), letters(std::move(ls)) {}
    std::vector<Letter> letters;
};

// Letters grouped by where they sit relative to the contour (0, inf) as
// t -> 0: neutral letters have limits off the positive axis (their leading
// coefficient is not a positive real), plus/minus letters approach it from
// the upper/lower half-plane. Letters that blow up (degree < 0) slide along
// the axis from the side determined by the path, letters vanishing towards 0
// (degree > 0) likewise; for finite positive limits (degree 0) the side is
// the sign of the subleading term. Positive constant letters sit on the
// contour at finite t already and are rejected (std::invalid_argument), as
// are letters whose side cannot be decided exactly.
struct HalfPlanePartition {
    std::vector<Letter> neutral, plus, minus;
};

HalfPlanePartition partition_letters(const std::vector<Letter>& alphabet, Sym t,
                                     int path_sign = +1);

// Rewrites RegLim_{t->0} RegLim_{z->inf} L_w(z) = RegLim_{z->inf} L_{w'}(z)
// with w' a sum of shuffle products over the leading coefficients: the word
// is decomposed from its last letter of minimal degree so that every factor
// either ends in a minimal-degree letter (then the limit is letterwise,
// non-minimal letters becoming the zero letter) or contains none. Words over
// different vanishing-degree classes never mix, and all-zero words map to 0.
// Throws PositiveLeadingLetter when a surviving letter has a positive real
// leading coefficient.
WordSum reglim_word(const Word& w, Sym t);
WordSum reglim_word(const WordSum& s, Sym t);

// A pairwise difference of letters (or a letter itself) has a zero that is
// not a rational-function root linear in t, so the t-alphabet of
// transform_word cannot be built.
struct NonLinearLetterDifference : std::runtime_error {
    NonLinearLetterDifference(const std::string& what, Polynomial f)
        : std::runtime_error(what), factor(std::move(f)) {}
    Polynomial factor;
};

// Rewrites RegLim_{z->inf} L_w(z) = sum_u L_u(t) * C_u as a hyperlogarithm
// of t. The words u run over the zeros and poles in t of the letters and
// their pairwise differences; the constants C_u are t-free regularized
// limits. Built from the total differential in t, with the integration
// constant at t -> 0 supplied by reglim_word (hyperlogarithms of nonempty u
// vanish there). PositiveLeadingLetter propagates from reglim_word.
std::map<Word, RegInfExpr> transform_word(const Word& w, Sym t);

// RegLim_{t->0} RegLim_{z->inf} L_w(z) for alphabets that touch the contour:
// letters of the image word with positive real limits tau_1 < ... < tau_N
// are handled by splitting the path at each tau_k, turning the value into
// products of convergent hyperlogarithm evaluations at the tau_k and
// explicit i*pi branch terms with the delta sign of the letter's half-plane.
// When two letters approach the same tau from opposite sides, the contour is
// pinched and the split is applied before the limit: each piece is mapped
// back onto (0, inf) by a Moebius transform, after which no pinch remains.
// A positive constant letter keeps its branch sign symbolic (delta[t,tau]);
// in a pinched word it is rejected (std::invalid_argument).
Expression split_positive(const Word& w, Sym t, int path_sign = +1);
Expression split_positive(const WordSum& s, Sym t, int path_sign = +1);

}  // namespace hlog

#pragma once
// Hyperlogarithms as symbolic expressions. Two canonical forms drive the
// integration engine:
//
//   HlogExpr    sum_i g_i(z) * L_{w_i}(z), one distinguished variable z,
//               letters free of z, coefficients rational in everything;
//   RegInfExpr  sum_i g_i * prod_j L_{reginf(w_ij)}(inf), the regularized
//               limit form whose factor lists are kept unshuffled.
//
// On top sits Expression, a sum of products of polylogarithm atoms in
// functional notation (Hlog/Mpl/Hpl/RegInf) used for parsing, conversion and
// output. Letters are leftmost-outermost: d/dz L_{[s1,s2,...]}(z) =
// L_{[s2,...]}(z)/(z - s1), and L vanishes at the basepoint 0 (trailing zero
// letters are resolved by the shuffle decomposition into powers of log z).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlog/factor.hpp"
#include "hyperlog/word.hpp"

namespace hlog {

// --- transcendental constants in coefficients ---------------------------

// zeta[n1,...,nr] as a coefficient, in the Euler-sum sign convention
// (negative index = alternating). Reductions that keep tables small are
// applied eagerly: a single even index becomes a rational multiple of a pi
// power, a single negative index is reduced to ln2 / zeta of the absolute
// value. zeta[1] diverges and is rejected.
RationalFunction zeta_value(const std::vector<int>& idx);

// Branch-tracking symbols: delta[z] records the half-plane of z (+1 above
// the real axis), delta[z,s] how the integration contour passes a positive
// point s (+1 below). Both are ordinary symbols of the coefficient field.
Sym sym_delta(Sym var);
Sym sym_delta(Sym var, const RationalFunction& point);

// Reduces powers of the imaginary unit modulo I^2 = -1.
RationalFunction reduce_i(const RationalFunction& f);

// A branch choice for one variable. point empty: half-plane of the variable
// itself. Signs stay symbolic in results until a tag resolves them.
struct BranchTag {
    Sym var;
    std::optional<RationalFunction> point;
    int sign = +1;  // +1 below the point / upper half-plane

    Sym symbol() const;
};

// Substitutes the tag's sign for its delta symbol.
RationalFunction resolve_branch(const RationalFunction& f, const BranchTag& tag);

// --- Moebius transformations of letters ---------------------------------

// z -> (a z + b)/(c z + d) with ad - bc != 0, acting on the Riemann sphere.
struct MoebiusMap {
    RationalFunction a, b, c, d;

    static MoebiusMap identity();
    static MoebiusMap shift(const RationalFunction& s);  // z -> z + s
    static MoebiusMap scale(const RationalFunction& s);  // z -> s*z, s != 0
    static MoebiusMap reciprocal();                      // z -> 1/z

    // nullopt encodes the point at infinity.
    std::optional<RationalFunction> apply(const RationalFunction& z) const;
    std::optional<RationalFunction> at_infinity() const;

    MoebiusMap compose(const MoebiusMap& g) const;  // z -> f(g(z))
    MoebiusMap inverse() const;
};

// Letterwise substitution [s] -> [f(s)] - [f(inf)], where a letter at
// infinity counts as 0. Turns a path transform into a word rewrite:
// int_gamma w = int_{f.gamma} moebius_transform(w, f), and f -> Phi_f is a
// group representation.
WordSum moebius_transform(const Word& w, const MoebiusMap& f);
WordSum moebius_transform(const WordSum& s, const MoebiusMap& f);

// --- hyperlogarithms of one variable ------------------------------------

// sum_w coeff(w) * L_w(z). Letters must not depend on the variable;
// coefficients may. Products shuffle the words, so the class is a
// commutative algebra over the rational functions.
class HlogExpr {
public:
    explicit HlogExpr(Sym var) : var_(var) {}
    HlogExpr(Sym var, WordSum s);
    // Plain L_w(z).
    static HlogExpr hyperlog(Sym var, const Word& w);
    static HlogExpr constant(Sym var, const RationalFunction& c);

    Sym variable() const { return var_; }
    const WordSum& sum() const { return sum_; }
    const std::map<Word, RationalFunction>& terms() const { return sum_.terms(); }
    bool is_zero() const { return sum_.is_zero(); }
    // Largest word weight present, 0 for constants.
    size_t weight() const;

    // Throws if a letter of w depends on the variable.
    void add(const Word& w, const RationalFunction& c);

    HlogExpr operator+(const HlogExpr& o) const;
    HlogExpr operator-(const HlogExpr& o) const;
    HlogExpr operator-() const;
    HlogExpr operator*(const HlogExpr& o) const;
    HlogExpr operator*(const RationalFunction& c) const;
    HlogExpr& operator+=(const HlogExpr& o);
    bool operator==(const HlogExpr& o) const {
        return var_ == o.var_ && sum_ == o.sum_;
    }
    bool operator!=(const HlogExpr& o) const { return !(*this == o); }

    std::string str() const;

private:
    Sym var_;
    WordSum sum_;
};

std::ostream& operator<<(std::ostream& os, const HlogExpr& e);

// Derivative with respect to any symbol. For the expression's own variable
// this is the head rule d/dz L_{[s,w]} = L_w/(z - s); for a symbol inside
// the letters it is the total differential
//   d L_w = sum_k L_{w minus k-th letter} dlog((s_k - s_{k-1})/(s_{k+1} - s_k))
// with s_0 = z, s_{n+1} = 0 and dlog 0 = 0. Coefficients follow Leibniz.
HlogExpr hlog_diff(const HlogExpr& e, Sym var);

// Primitive in the expression's own variable (var must match). Every
// denominator factor of every coefficient must be linear in var, else
// NonLinearDenominator propagates from partial fractions. The weight
// recursion moves rational factors into words:
//   int L_w/(z-s) = L_{[s] w},
//   int z^n L_w   = z^{n+1} L_w/(n+1)     - int z^{n+1} (dL_w)/(n+1),
//   int L_w/(z-s)^{n+1} = -L_w/(n (z-s)^n) + int (dL_w)/(n (z-s)^n).
// No integration constant is added, so hlog_diff(hlog_primitive(e)) == e
// and the result has no var-free empty-word term.
HlogExpr hlog_primitive(const HlogExpr& e, Sym var);

// --- regularized limits at infinity -------------------------------------

// sum_i g_i * prod_j L_{reginf(w_ij)}(inf). Stored words carry no trailing
// zero letter (incoming ones are rewritten by the shuffle regularization at
// 0, whose log z parts have regularized limit 0), and pure powers of the
// letter -1 vanish outright (the tangential normalization annihilates
// log(1+z)); reginf itself is applied only on evaluation. Factor lists are
// deliberately not shuffled into single words: that blows up term counts
// and mixes letters across vanishing-degree classes, creating spurious
// singularities in later integrations.
class RegInfExpr {
public:
    // Sorted, each word nonempty without trailing zero letter.
    using Factors = std::vector<Word>;

    RegInfExpr() = default;
    static RegInfExpr constant(const RationalFunction& c);
    // Expands a product of word sums into factor lists.
    static RegInfExpr product(const RationalFunction& c, const std::vector<WordSum>& fs);

    const std::map<Factors, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    // Coefficient of the empty factor list.
    RationalFunction rational_part() const;
    // Largest total weight over the factor lists.
    size_t weight() const;

    // Normalizes w (regularization at 0) and distributes.
    void add(const RationalFunction& c, const std::vector<Word>& factors);

    RegInfExpr operator+(const RegInfExpr& o) const;
    RegInfExpr operator-(const RegInfExpr& o) const;
    RegInfExpr operator-() const;
    RegInfExpr operator*(const RegInfExpr& o) const;
    RegInfExpr operator*(const RationalFunction& c) const;
    RegInfExpr& operator+=(const RegInfExpr& o);
    bool operator==(const RegInfExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const RegInfExpr& o) const { return !(*this == o); }

    // Multiplies every factor list out into a single-word sum (for
    // evaluation; loses the decoupling, so not used internally).
    WordSum shuffled() const;

    std::string str() const;

private:
    std::map<Factors, RationalFunction> terms_;
};

std::ostream& operator<<(std::ostream& os, const RegInfExpr& e);

// --- functional notation -------------------------------------------------

// A single polylogarithm factor.
//   Hlog(arg, [s1,...])    hyperlogarithm L_{[s1,...]}(arg)
//   Mpl([n1,...],[z1,...]) Li_{n1,...,nr}(z1,...,zr)
//   Hpl([m1,...], arg)     harmonic polylog in compressed index notation
//   RegInf[w]              L_{reginf(w)}(inf)
struct PolylogAtom {
    enum class Kind { Hlog, Mpl, Hpl, RegInf };

    Kind kind = Kind::Hlog;
    RationalFunction arg;                // Hlog, Hpl
    Word word;                           // Hlog, RegInf
    std::vector<int> indices;            // Mpl, Hpl
    std::vector<RationalFunction> args;  // Mpl

    static PolylogAtom hyperlog(const RationalFunction& arg, Word w);
    static PolylogAtom mpl(std::vector<int> n, std::vector<RationalFunction> z);
    static PolylogAtom hpl(std::vector<int> m, const RationalFunction& arg);
    static PolylogAtom reg_inf_word(Word w);

    size_t weight() const;
    // Empty word / empty index string, the constant 1.
    bool is_one() const;
    static int compare(const PolylogAtom& a, const PolylogAtom& b);
    bool operator==(const PolylogAtom& o) const { return compare(*this, o) == 0; }
    bool operator<(const PolylogAtom& o) const { return compare(*this, o) < 0; }

    std::string str() const;
};

// Sum of products coeff * atom_1 * ... * atom_k; equal factor lists merge.
// RegInf factors that are pure powers of the letter -1 are exact zeros and
// kill their term.
class Expression {
public:
    using Factors = std::vector<PolylogAtom>;

    Expression() = default;
    Expression(const RationalFunction& c) { add(c, {}); }
    explicit Expression(const PolylogAtom& a) { add(RationalFunction(1), {a}); }

    const std::map<Factors, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    RationalFunction rational_part() const;

    void add(const RationalFunction& c, Factors factors);

    Expression operator+(const Expression& o) const;
    Expression operator-(const Expression& o) const;
    Expression operator-() const;
    Expression operator*(const Expression& o) const;
    Expression operator*(const RationalFunction& c) const;
    Expression& operator+=(const Expression& o);
    Expression& operator-=(const Expression& o);
    bool operator==(const Expression& o) const { return terms_ == o.terms_; }
    bool operator!=(const Expression& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::map<Factors, RationalFunction> terms_;
};

std::ostream& operator<<(std::ostream& os, const Expression& e);

// HlogExpr as a sum of Hlog atoms in the expression's variable.
Expression to_expression(const HlogExpr& e);
// RegInfExpr as a sum of RegInf atom products.
Expression to_expression(const RegInfExpr& e);

// An Hlog letter outside the target family (Hpl needs letters in {-1,0,1},
// Mpl needs nonzero trailing letters).
struct UnconvertibleLetter : std::runtime_error {
    UnconvertibleLetter(const std::string& what, Letter l)
        : std::runtime_error(what), letter(std::move(l)) {}
    Letter letter;
};

// Value-preserving rewrite of every atom into the target family.
//   Hlog:   Mpl atoms become hyperlogarithms of argument 1 with letters
//           1/(z_r...z_k), Hpl atoms expand their compressed indices.
//   Mpl:    words split as v * [0]^k (log factors -> Mpl([1],[1-arg])) and
//           v maps to Li_{n1,...,nr}(s2/s1, ..., arg/sr); zero indices are
//           eliminated by the contiguous-argument identity.
//   Hpl:    letters must lie in {-1,0,1}; sign (-1)^(count of +1 letters).
//   RegInf: the path (0,arg) maps onto (0,infinity) by x -> x/(arg - x),
//           so letters go to [s/(arg-s)] - [-1] and each log(arg) factor
//           becomes -RegInf[[-arg]].
Expression convert(const Expression& e, PolylogAtom::Kind target);

// Conversion to the RegInf family, repacked with unshuffled factor lists.
RegInfExpr to_reg_inf(const Expression& e);
RegInfExpr to_reg_inf(const HlogExpr& e);

// Text form of an Expression: the rational grammar extended by pi, I, ln2,
// ln[p], zeta[n1,...], delta[z] / delta[z,s], ln(f), Hlog(f,[s1,...]),
// Mpl([n1,...],[z1,...]), Hpl([m1,...],f), RegInf([w]). ln of a constant is
// split into ln symbols of primes; other ln(f) parse as Hlog(f,[0]).
// Division and negative powers need an atom-free divisor.
Expression parse_expression(const std::string& text);

// --- path splitting ------------------------------------------------------

// One summand of a split of L_w(z) at an intermediate point s:
//   coeff * L_{[s]}(z)^log_power * (int_s^z tail) * sum L_v(s).
// The carrier L_{[s]}(z) keeps the branch of the original path; tail has no
// trailing s letter, so the iterated integral from s is convergent, and the
// at_point words neither begin with s, so their values at s are finite.
struct SplitTerm {
    RationalFunction coeff;  // includes the 1/log_power! of the carrier
    long log_power = 0;
    Word tail;
    WordSum at_point;
};

// Path concatenation at z = s:
//   L_w(z) = sum_cuts int_s^z prefix * L_{reg(suffix, {}, {s})}(s),
// with the trailing-s powers of each prefix split off onto the carrier.
// s = 0 recovers the decomposition of L_w into log z powers times words
// analytic at 0.
std::vector<SplitTerm> split_path(const HlogExpr& e, const RationalFunction& s);

// The split rewritten for continuation past a positive point s, valid for
// z > s on the tagged contour: the carrier becomes
//   L_{[s]}(z) = log((z-s)/s) + i pi delta[z,s],
// tails turn into hyperlogarithms of z - s with shifted letters, and the
// at_point sums into Hlog atoms at argument s.
Expression split_past(const HlogExpr& e, const RationalFunction& s, const BranchTag& tag);

}  // namespace hlog

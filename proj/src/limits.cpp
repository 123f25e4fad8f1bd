#include "hyperlog/limits.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

namespace hlog {

namespace {

long poly_valuation(const Polynomial& p, Sym t) {
    long d = p.degree(t);
    for (long v = 0; v < d; v++)
        if (!p.coeff(t, v).is_zero()) return v;
    return d;
}

// Leading term of the t-expansion: f = c * t^deg * (1 + O(t)), c != 0.
std::pair<long, RationalFunction> leading_of(const RationalFunction& f, Sym t) {
    long vn = poly_valuation(f.num(), t);
    long vd = poly_valuation(f.den(), t);
    RationalFunction c = RationalFunction(f.num().coeff(t, vn)) /
                         RationalFunction(f.den().coeff(t, vd));
    return {vn - vd, c};
}

int sgn(const BigRational& x) { return mpq_sgn(x.get_mpq_t()); }

// f as a + b*I when it is constant up to the imaginary unit.
std::optional<std::pair<BigRational, BigRational>> complex_constant(
    const RationalFunction& f0) {
    RationalFunction f = reduce_i(f0);
    Sym i = sym_i();
    if (f.den().depends_on(i)) {
        Polynomial conj = f.den().subst(i, -Polynomial::variable(i));
        f = reduce_i(RationalFunction(f.num() * conj, f.den() * conj));
    }
    Polynomial re = f.num().coeff(i, 0);
    Polynomial im = f.num().coeff(i, 1);
    if (!f.den().is_constant() || !re.is_constant() || !im.is_constant())
        return std::nullopt;
    BigRational d = f.den().constant_value();
    return std::pair<BigRational, BigRational>{re.constant_value() / d,
                                               im.constant_value() / d};
}

std::optional<BigRational> positive_constant(const RationalFunction& f) {
    auto c = complex_constant(f);
    if (!c || sgn(c->second) != 0 || sgn(c->first) <= 0) return std::nullopt;
    return c->first;
}

enum class Side { Neutral, Plus, Minus, OnContour };

struct LetterClass {
    LaurentData laurent;
    Side side = Side::Neutral;
    BigRational tau;  // finite positive limit, degree-0 non-neutral letters
};

// Which side of the contour sigma(t) sits on for small t = |t|*e^{i*theta},
// theta -> 0 with the sign of path_sign. Only letters with a positive real
// leading coefficient touch the contour; for degree 0 the side is read off
// the first correction term (a genuinely complex correction fixes the side
// regardless of the path, a real one follows it).
LetterClass classify_letter(const Letter& sigma, Sym t, int path_sign) {
    LetterClass out;
    out.laurent = letter_laurent(sigma, t);
    if (out.laurent.degree == LaurentData::infinite_degree) return out;
    auto lead = positive_constant(out.laurent.leading);
    if (!lead) return out;
    if (out.laurent.degree != 0) {
        bool upper = (out.laurent.degree > 0) == (path_sign > 0);
        out.side = upper ? Side::Plus : Side::Minus;
        return out;
    }
    out.tau = *lead;
    if (out.laurent.subleading.is_zero()) {
        out.side = Side::OnContour;
        return out;
    }
    auto sub = complex_constant(out.laurent.subleading);
    if (!sub)
        throw std::invalid_argument("half-plane of letter " + sigma.str() + " at " +
                                    sym_name(t) + " -> 0 is not decidable");
    int s = sgn(sub->second) != 0 ? sgn(sub->second) : sgn(sub->first) * path_sign;
    out.side = s > 0 ? Side::Plus : Side::Minus;
    return out;
}

}  // namespace

LaurentData letter_laurent(const RationalFunction& sigma, Sym t) {
    LaurentData out;
    if (sigma.is_zero()) {
        out.degree = out.subleading_degree = LaurentData::infinite_degree;
        return out;
    }
    auto [deg, lead] = leading_of(sigma, t);
    out.degree = deg;
    out.leading = lead;
    RationalFunction rest = sigma - lead * RationalFunction::variable(t).pow(deg);
    if (rest.is_zero()) {
        out.subleading_degree = deg;
    } else {
        auto [sdeg, slead] = leading_of(rest, t);
        out.subleading_degree = sdeg;
        out.subleading = slead;
    }
    return out;
}

HalfPlanePartition partition_letters(const std::vector<Letter>& alphabet, Sym t,
                                     int path_sign) {
    HalfPlanePartition out;
    for (const Letter& sigma : alphabet) {
        switch (classify_letter(sigma, t, path_sign).side) {
            case Side::Neutral: out.neutral.push_back(sigma); break;
            case Side::Plus: out.plus.push_back(sigma); break;
            case Side::Minus: out.minus.push_back(sigma); break;
            case Side::OnContour:
                throw std::invalid_argument("letter " + sigma.str() +
                                            " is a positive constant on the contour");
        }
    }
    return out;
}

// --- the word rewrite t -> 0 --------------------------------------------

namespace {

std::vector<LaurentData> word_laurent(const Word& w, Sym t) {
    std::vector<LaurentData> out;
    out.reserve(w.weight());
    for (const Letter& l : w.letters()) out.push_back(letter_laurent(l, t));
    return out;
}

// w = u sigma a with sigma at index k the last minimal-degree letter. Moving
// sigma to the end by the shuffle identity
//   u sigma a = sum_i (-1)^i [u sh reverse(a_1..a_i)] sigma  sh  a_{i+1}..a_n
// yields words ending in sigma, each paired with a suffix of a (all of
// strictly larger degree) to recurse on.
struct TailMove {
    WordSum ending;
    Word suffix;
};

std::vector<TailMove> tail_moves(const Word& w, size_t k) {
    Word u = w.prefix(k);
    Word a = w.suffix_from(k + 1);
    std::vector<TailMove> out;
    for (size_t i = 0; i <= a.weight(); i++) {
        std::vector<Letter> rev;
        for (size_t j = i; j > 0; j--) rev.push_back(a[j - 1]);
        WordSum left = shuffle(WordSum(u), WordSum(Word(std::move(rev))));
        RationalFunction sign(i % 2 ? -1 : 1);
        TailMove m;
        for (const auto& [x, c] : left.terms()) m.ending.add(x.with_back(w[k]), c * sign);
        m.suffix = a.suffix_from(i);
        out.push_back(std::move(m));
    }
    return out;
}

WordSum reglim_rec(const Word& w, Sym t) {
    if (w.empty()) return WordSum::one();
    std::vector<LaurentData> ld = word_laurent(w, t);
    long d = LaurentData::infinite_degree;
    for (const LaurentData& l : ld) d = std::min(d, l.degree);
    if (d == LaurentData::infinite_degree) return WordSum();  // all zero letters
    size_t k = 0;
    for (size_t i = 0; i < ld.size(); i++)
        if (ld[i].degree == d) k = i;
    if (k + 1 < w.weight()) {
        WordSum out;
        for (const TailMove& m : tail_moves(w, k)) {
            WordSum ending;
            for (const auto& [x, c] : m.ending.terms()) ending += reglim_rec(x, t) * c;
            out += shuffle(ending, reglim_rec(m.suffix, t));
        }
        return out;
    }
    // ends in a minimal-degree letter: the limit is letterwise
    std::vector<Letter> img;
    std::vector<Letter> offenders;
    for (size_t i = 0; i < ld.size(); i++) {
        if (ld[i].degree != d) {
            img.push_back(Letter());
            continue;
        }
        if (positive_constant(ld[i].leading)) offenders.push_back(w[i]);
        img.push_back(ld[i].leading);
    }
    if (!offenders.empty())
        throw PositiveLeadingLetter(
            "leading coefficient on the positive axis; the path must be split first",
            std::move(offenders));
    return WordSum(Word(std::move(img)));
}

}  // namespace

WordSum reglim_word(const Word& w, Sym t) { return reglim_rec(w, t); }

WordSum reglim_word(const WordSum& s, Sym t) {
    WordSum out;
    for (const auto& [w, c] : s.terms()) out += reglim_rec(w, t) * c;
    return out;
}

// --- positive letters and pinches ---------------------------------------

namespace {

struct SplitContext {
    Sym t;
    int path_sign;
};

Expression split_word(const Word& w, const SplitContext& cx);

Expression split_sum(const WordSum& s, const SplitContext& cx) {
    Expression out;
    for (const auto& [w, c] : s.terms()) out += split_word(w, cx) * c;
    return out;
}

// Value of an image word (t-free letters): split at each positive letter,
// smallest first, so every piece is a convergent evaluation. delta maps a
// positive point to its contour sign; 0 keeps the sign symbolic.
Expression eval_image(const Word& v, const std::map<BigRational, int>& delta,
                      const SplitContext& cx) {
    std::optional<BigRational> tau;
    for (const Letter& l : v.letters()) {
        auto p = positive_constant(l);
        if (p && (!tau || *p < *tau)) tau = *p;
    }
    if (!tau) {
        if (v.empty()) return Expression(RationalFunction(1));
        return Expression(PolylogAtom::reg_inf_word(v));
    }
    RationalFunction tau_rf{BigRational(*tau)};
    // the carrier L_{[tau]}(z) becomes log((z-tau)/tau) + i pi delta, and
    // RegLim_z drops the log to i pi delta - log tau
    Expression carrier(RationalFunction::variable(sym_i()) *
                       RationalFunction::variable(sym_pi()));
    int ds = delta.at(*tau);
    carrier = carrier * (ds == 0 ? RationalFunction::variable(sym_delta(cx.t, tau_rf))
                                 : RationalFunction(ds));
    if (*tau != 1) carrier -= Expression(PolylogAtom::hyperlog(tau_rf, Word{Letter()}));
    std::map<BigRational, int> shifted;
    for (const auto& [p, s] : delta)
        if (p > *tau) shifted.emplace(p - *tau, s);
    MoebiusMap back = MoebiusMap::shift(-tau_rf);
    Expression out;
    for (const SplitTerm& st : split_path(HlogExpr::hyperlog(cx.t, v), tau_rf)) {
        Expression term(st.coeff);
        for (long j = 0; j < st.log_power; j++) term = term * carrier;
        if (!st.tail.empty()) {
            Expression tail_val;
            WordSum moved = moebius_transform(st.tail, back);
            for (const auto& [u, c] : moved.terms())
                tail_val += eval_image(u, shifted, cx) * c;
            term = term * tail_val;
        }
        Expression at;
        for (const auto& [u, c] : st.at_point.terms()) {
            if (u.empty()) at += Expression(c);
            else at += Expression(PolylogAtom::hyperlog(tau_rf, u)) * c;
        }
        out += term * at;
    }
    return out;
}

// The path split at the pinch points 0 < tau_1 < ... < tau_N before the
// limit: each piece (tau_k, tau_{k+1}) is mapped onto (0, inf) by
// z -> (z - tau_k)/(tau_{k+1} - z), the top piece by z -> z - tau_N, and the
// pieces compose along the deconcatenation coproduct, outermost first. The
// transformed letters never pinch again, so the recursion stays in the
// deformable case.
Expression split_pinched(const Word& w, const std::vector<RationalFunction>& taus,
                         const SplitContext& cx) {
    std::function<Expression(const Word&, size_t)> below =
        [&](const Word& u, size_t m) -> Expression {
        RationalFunction lo = m > 1 ? taus[m - 2] : RationalFunction();
        MoebiusMap f{RationalFunction(1), -lo, RationalFunction(-1), taus[m - 1]};
        if (m == 1) return split_sum(moebius_transform(u, f), cx);
        Expression out;
        TensorSum cuts = coproduct(u);
        for (const auto& [uv, c] : cuts.terms())
            out += split_sum(moebius_transform(uv.first, f), cx) * below(uv.second, m - 1) * c;
        return out;
    };
    Expression out;
    MoebiusMap top = MoebiusMap::shift(-taus.back());
    TensorSum cuts = coproduct(w);
    for (const auto& [uv, c] : cuts.terms())
        out += split_sum(moebius_transform(uv.first, top), cx) * below(uv.second, taus.size()) * c;
    return out;
}

Expression split_word(const Word& w, const SplitContext& cx) {
    if (w.empty()) return Expression(RationalFunction(1));
    // trailing zero letters carry log z powers with regularized limit 0
    if (w.back() == Letter()) return split_sum(reg(w, {Letter()}, {}), cx);
    std::vector<LetterClass> cls;
    cls.reserve(w.weight());
    for (const Letter& l : w.letters()) cls.push_back(classify_letter(l, cx.t, cx.path_sign));
    long d = LaurentData::infinite_degree;
    for (const LetterClass& c : cls) d = std::min(d, c.laurent.degree);
    if (d == LaurentData::infinite_degree) return Expression();

    // pinch scan over every finite positive limit, word position immaterial
    std::map<BigRational, std::pair<bool, bool>> seen;
    bool on_contour = false;
    for (const LetterClass& c : cls) {
        if (c.laurent.degree != 0 || c.side == Side::Neutral) continue;
        if (c.side == Side::OnContour) {
            on_contour = true;
            continue;
        }
        auto& [plus, minus] = seen[c.tau];
        (c.side == Side::Plus ? plus : minus) = true;
    }
    bool pinch = false;
    for (const auto& [p, pm] : seen) pinch = pinch || (pm.first && pm.second);
    if (pinch) {
        if (on_contour)
            throw std::invalid_argument("positive constant letter in a pinched word");
        std::vector<RationalFunction> taus;
        for (const auto& [p, pm] : seen) taus.emplace_back(p);
        return split_pinched(w, taus, cx);
    }

    size_t k = 0;
    for (size_t i = 0; i < cls.size(); i++)
        if (cls[i].laurent.degree == d) k = i;
    if (k + 1 < w.weight()) {
        Expression out;
        for (const TailMove& m : tail_moves(w, k)) {
            Expression ending;
            for (const auto& [x, c] : m.ending.terms()) ending += split_word(x, cx) * c;
            out += ending * split_word(m.suffix, cx);
        }
        return out;
    }

    std::vector<Letter> img;
    std::map<BigRational, int> delta;
    for (size_t i = 0; i < cls.size(); i++) {
        if (cls[i].laurent.degree != d) {
            img.push_back(Letter());
            continue;
        }
        img.push_back(cls[i].laurent.leading);
        auto p = positive_constant(cls[i].laurent.leading);
        if (!p) continue;
        int s = cls[i].side == Side::OnContour ? 0 : (cls[i].side == Side::Plus ? +1 : -1);
        auto [it, fresh] = delta.emplace(*p, s);
        if (!fresh && it->second != s)
            throw std::invalid_argument("conflicting contour sides at " + it->first.get_str());
    }
    return eval_image(Word(std::move(img)), delta, cx);
}

}  // namespace

Expression split_positive(const Word& w, Sym t, int path_sign) {
    return split_word(w, SplitContext{t, path_sign});
}

Expression split_positive(const WordSum& s, Sym t, int path_sign) {
    return split_sum(s, SplitContext{t, path_sign});
}

}  // namespace hlog

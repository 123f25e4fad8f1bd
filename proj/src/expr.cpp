#include "hyperlog/expr.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hlog {

namespace {

const Letter& zero_letter() {
    static const Letter z;
    return z;
}

// L_{reginf([-1]^k)}(inf) = log(1+z)^k/k! is annihilated by the tangential
// normalization at infinity, so such factors are exact zeros.
bool kills_at_infinity(const Word& w) {
    static const Letter minus_one{RationalFunction(-1)};
    if (w.empty()) return false;
    for (const Letter& l : w.letters())
        if (l != minus_one) return false;
    return true;
}

BigRational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), (unsigned long)n);
    return BigRational(f);
}

// B_m by the defining recursion sum_{j<=m} C(m+1,j) B_j = [m = 0].
BigRational bernoulli(long m) {
    std::vector<BigRational> b{BigRational(1)};
    for (long k = 1; k <= m; k++) {
        BigRational s(0);
        for (long j = 0; j < k; j++) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), (unsigned long)(k + 1), (unsigned long)j);
            s += BigRational(bin) * b[(size_t)j];
        }
        b.push_back(-s / BigRational(k + 1));
    }
    return b[(size_t)m];
}

Polynomial reduce_i_poly(const Polynomial& p, Sym i) {
    bool touched = false;
    for (const auto& [m, c] : p.terms())
        if (m.exp(i) >= 2) {
            touched = true;
            break;
        }
    if (!touched) return p;
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int32_t e = m.exp(i);
        if (e < 2) {
            out.add_term(m, c);
            continue;
        }
        Mono m2 = m;
        m2.exps[(size_t)i] = e % 2;
        m2.normalize();
        out.add_term(m2, (e / 2) % 2 ? BigRational(-c) : c);
    }
    return out;
}

}  // namespace

RationalFunction zeta_value(const std::vector<int>& idx) {
    if (idx.empty()) return RationalFunction(1);
    if (idx.size() == 1) {
        int n = idx[0];
        if (n == 0) throw std::invalid_argument("zeta_value: index 0");
        if (n == 1) throw std::invalid_argument("zeta_value: zeta[1] diverges");
        if (n == -1)
            return RationalFunction(Polynomial::variable(sym_ln(2)).scaled(BigRational(-1)));
        if (n < 0) {
            // Li_n(-1) = -(1 - 2^{1-n}) zeta(n) at weight n = |idx|
            long m = -n;
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, (unsigned long)(m - 1));
            BigRational f = BigRational(1) - BigRational(1) / BigRational(p2);
            return zeta_value({(int)m}) * RationalFunction(-f);
        }
        if (n % 2 == 0) {
            // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
            mpz_class fac, p2;
            mpz_fac_ui(fac.get_mpz_t(), (unsigned long)n);
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, (unsigned long)n);
            BigRational c = bernoulli(n) * BigRational(p2) / (BigRational(2) * BigRational(fac));
            if ((n / 2) % 2 == 0) c = -c;
            return RationalFunction(Polynomial::variable(sym_pi()).pow(n).scaled(c));
        }
    }
    return RationalFunction::variable(sym_zeta(idx));
}

Sym sym_delta(Sym var) {
    Sym s = sym("delta[" + sym_name(var) + "]");
    mark_delta_sym(s);
    return s;
}

Sym sym_delta(Sym var, const RationalFunction& point) {
    Sym s = sym("delta[" + sym_name(var) + "," + point.str() + "]");
    mark_delta_sym(s);
    return s;
}

RationalFunction reduce_i(const RationalFunction& f) {
    Sym i = sym_lookup("I");
    if (i < 0 || !is_const_sym(i)) return f;
    Polynomial n = reduce_i_poly(f.num(), i);
    Polynomial d = reduce_i_poly(f.den(), i);
    if (n == f.num() && d == f.den()) return f;
    return RationalFunction(n, d);
}

Sym BranchTag::symbol() const {
    return point ? sym_delta(var, *point) : sym_delta(var);
}

RationalFunction resolve_branch(const RationalFunction& f, const BranchTag& tag) {
    return f.subst(tag.symbol(), RationalFunction(tag.sign));
}

// --- Moebius maps --------------------------------------------------------

MoebiusMap MoebiusMap::identity() {
    return {RationalFunction(1), RationalFunction(), RationalFunction(), RationalFunction(1)};
}

MoebiusMap MoebiusMap::shift(const RationalFunction& s) {
    return {RationalFunction(1), s, RationalFunction(), RationalFunction(1)};
}

MoebiusMap MoebiusMap::scale(const RationalFunction& s) {
    if (s.is_zero()) throw std::invalid_argument("MoebiusMap::scale: zero factor");
    return {s, RationalFunction(), RationalFunction(), RationalFunction(1)};
}

MoebiusMap MoebiusMap::reciprocal() {
    return {RationalFunction(), RationalFunction(1), RationalFunction(1), RationalFunction()};
}

std::optional<RationalFunction> MoebiusMap::apply(const RationalFunction& z) const {
    if ((a * d - b * c).is_zero()) throw std::invalid_argument("MoebiusMap: degenerate map");
    RationalFunction den = c * z + d;
    if (den.is_zero()) return std::nullopt;
    return (a * z + b) / den;
}

std::optional<RationalFunction> MoebiusMap::at_infinity() const {
    if (c.is_zero()) return std::nullopt;
    return a / c;
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& g) const {
    return {a * g.a + b * g.c, a * g.b + b * g.d, c * g.a + d * g.c, c * g.b + d * g.d};
}

MoebiusMap MoebiusMap::inverse() const {
    return {d, -b, -c, a};
}

WordSum moebius_transform(const Word& w, const MoebiusMap& f) {
    std::optional<RationalFunction> finf = f.at_infinity();
    WordSum out = WordSum::one();
    for (const Letter& l : w.letters()) {
        std::optional<RationalFunction> fl = f.apply(l);
        WordSum next;
        for (const auto& [u, c] : out.terms()) {
            if (fl) next.add(u.with_back(*fl), c);
            if (finf) next.add(u.with_back(*finf), -c);
        }
        out = next;
    }
    return out;
}

WordSum moebius_transform(const WordSum& s, const MoebiusMap& f) {
    WordSum out;
    for (const auto& [w, c] : s.terms()) out += moebius_transform(w, f) * c;
    return out;
}

// --- HlogExpr ------------------------------------------------------------

HlogExpr::HlogExpr(Sym var, WordSum s) : var_(var) {
    for (const auto& [w, c] : s.terms()) add(w, c);
}

HlogExpr HlogExpr::hyperlog(Sym var, const Word& w) {
    HlogExpr e(var);
    e.add(w, RationalFunction(1));
    return e;
}

HlogExpr HlogExpr::constant(Sym var, const RationalFunction& c) {
    HlogExpr e(var);
    e.add(Word(), c);
    return e;
}

size_t HlogExpr::weight() const {
    size_t m = 0;
    for (const auto& [w, c] : sum_.terms()) m = std::max(m, w.weight());
    return m;
}

void HlogExpr::add(const Word& w, const RationalFunction& c) {
    for (const Letter& l : w.letters())
        if (l.depends_on(var_))
            throw std::invalid_argument("HlogExpr: letter depends on the main variable");
    sum_.add(w, reduce_i(c));
}

HlogExpr HlogExpr::operator+(const HlogExpr& o) const {
    HlogExpr r = *this;
    r += o;
    return r;
}

HlogExpr HlogExpr::operator-(const HlogExpr& o) const {
    HlogExpr r = *this;
    r += -o;
    return r;
}

HlogExpr HlogExpr::operator-() const {
    return HlogExpr(var_, -sum_);
}

HlogExpr HlogExpr::operator*(const HlogExpr& o) const {
    if (var_ != o.var_) throw std::invalid_argument("HlogExpr: variable mismatch");
    return HlogExpr(var_, shuffle(sum_, o.sum_));
}

HlogExpr HlogExpr::operator*(const RationalFunction& c) const {
    return HlogExpr(var_, sum_ * reduce_i(c));
}

HlogExpr& HlogExpr::operator+=(const HlogExpr& o) {
    if (var_ != o.var_) throw std::invalid_argument("HlogExpr: variable mismatch");
    if (this == &o) return *this += HlogExpr(o);
    for (const auto& [w, c] : o.sum_.terms()) sum_.add(w, c);
    return *this;
}

std::string HlogExpr::str() const {
    return to_expression(*this).str();
}

std::ostream& operator<<(std::ostream& os, const HlogExpr& e) {
    return os << e.str();
}

HlogExpr hlog_diff(const HlogExpr& e, Sym var) {
    HlogExpr out(e.variable());
    RationalFunction z = RationalFunction::variable(e.variable());
    for (const auto& [w, g] : e.terms()) {
        RationalFunction gp = g.derivative(var);
        if (!gp.is_zero()) out.add(w, gp);
        if (w.empty()) continue;
        if (var == e.variable()) {
            out.add(w.suffix_from(1), g / (z - w.front()));
            continue;
        }
        size_t n = w.weight();
        for (size_t k = 1; k <= n; k++) {
            // dlog((s_k - s_{k-1})/(s_{k+1} - s_k)), identically zero
            // differences dropped
            RationalFunction up = w[k - 1] - (k == 1 ? z : RationalFunction(w[k - 2]));
            RationalFunction down = (k == n ? RationalFunction() : RationalFunction(w[k])) - w[k - 1];
            RationalFunction dl;
            if (!up.is_zero()) dl += up.derivative(var) / up;
            if (!down.is_zero()) dl -= down.derivative(var) / down;
            if (dl.is_zero()) continue;
            std::vector<Letter> ls = w.letters();
            ls.erase(ls.begin() + (long)(k - 1));
            out.add(Word(std::move(ls)), g * dl);
        }
    }
    return out;
}

namespace {

// One term g * L_w by the weight recursion; g's denominator must factor
// linearly in z.
void primitive_term(HlogExpr& out, Sym z, const RationalFunction& g, const Word& w) {
    RationalFunction zv = RationalFunction::variable(z);
    for (const PartialFractionTerm& t : partial_fractions(g, z)) {
        if (t.pole_order == 0) {
            RationalFunction piece = t.coeff * zv.pow(t.power + 1) / RationalFunction(t.power + 1);
            out.add(w, piece);
            if (!w.empty())
                primitive_term(out, z, -piece / (zv - w.front()), w.suffix_from(1));
        } else if (t.pole_order == 1) {
            out.add(w.with_front(t.sigma), t.coeff);
        } else {
            long n = t.pole_order - 1;
            RationalFunction piece =
                t.coeff / ((zv - t.sigma).pow(n) * RationalFunction(n));
            out.add(w, -piece);
            if (!w.empty())
                primitive_term(out, z, piece / (zv - w.front()), w.suffix_from(1));
        }
    }
}

}  // namespace

HlogExpr hlog_primitive(const HlogExpr& e, Sym var) {
    if (var != e.variable())
        throw std::invalid_argument("hlog_primitive: not the expression's variable");
    HlogExpr out(var);
    for (const auto& [w, g] : e.terms()) primitive_term(out, var, g, w);
    return out;
}

// --- RegInfExpr ----------------------------------------------------------

RegInfExpr RegInfExpr::constant(const RationalFunction& c) {
    RegInfExpr e;
    e.add(c, {});
    return e;
}

RegInfExpr RegInfExpr::product(const RationalFunction& c, const std::vector<WordSum>& fs) {
    std::vector<std::pair<std::vector<Word>, RationalFunction>> acc;
    acc.emplace_back(std::vector<Word>{}, c);
    for (const WordSum& s : fs) {
        std::vector<std::pair<std::vector<Word>, RationalFunction>> next;
        for (const auto& [ws, cc] : acc)
            for (const auto& [u, uc] : s.terms()) {
                std::vector<Word> w2 = ws;
                if (!u.empty()) w2.push_back(u);
                next.emplace_back(std::move(w2), cc * uc);
            }
        acc = std::move(next);
    }
    RegInfExpr out;
    for (const auto& [ws, cc] : acc) out.add(cc, ws);
    return out;
}

RationalFunction RegInfExpr::rational_part() const {
    auto it = terms_.find(Factors{});
    return it == terms_.end() ? RationalFunction() : it->second;
}

size_t RegInfExpr::weight() const {
    size_t m = 0;
    for (const auto& [fs, c] : terms_) {
        size_t t = 0;
        for (const Word& w : fs) t += w.weight();
        m = std::max(m, t);
    }
    return m;
}

void RegInfExpr::add(const RationalFunction& c0, const std::vector<Word>& factors) {
    RationalFunction c = reduce_i(c0);
    if (c.is_zero()) return;
    // Trailing zero letters carry log z powers whose regularized limit at
    // infinity vanishes, so only the regularized part of each word survives.
    std::vector<std::pair<Factors, RationalFunction>> acc;
    acc.emplace_back(Factors{}, c);
    for (const Word& w : factors) {
        if (w.empty()) continue;
        WordSum rw = w.back() == zero_letter() ? reg(w, {zero_letter()}, {}) : WordSum(w);
        std::vector<std::pair<Factors, RationalFunction>> next;
        for (const auto& [fs, cc] : acc)
            for (const auto& [u, uc] : rw.terms()) {
                if (kills_at_infinity(u)) continue;
                Factors f2 = fs;
                f2.push_back(u);
                next.emplace_back(std::move(f2), cc * uc);
            }
        acc = std::move(next);
    }
    for (auto& [fs, cc] : acc) {
        std::sort(fs.begin(), fs.end());
        auto [it, fresh] = terms_.emplace(std::move(fs), cc);
        if (!fresh) {
            it->second += cc;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
}

RegInfExpr RegInfExpr::operator+(const RegInfExpr& o) const {
    RegInfExpr r = *this;
    r += o;
    return r;
}

RegInfExpr RegInfExpr::operator-(const RegInfExpr& o) const {
    RegInfExpr r = *this;
    r += -o;
    return r;
}

RegInfExpr RegInfExpr::operator-() const {
    RegInfExpr r;
    for (const auto& [fs, c] : terms_) r.terms_.emplace(fs, -c);
    return r;
}

RegInfExpr RegInfExpr::operator*(const RegInfExpr& o) const {
    RegInfExpr r;
    for (const auto& [fa, ca] : terms_)
        for (const auto& [fb, cb] : o.terms_) {
            Factors f = fa;
            f.insert(f.end(), fb.begin(), fb.end());
            r.add(ca * cb, f);
        }
    return r;
}

RegInfExpr RegInfExpr::operator*(const RationalFunction& c0) const {
    RationalFunction c = reduce_i(c0);
    RegInfExpr r;
    if (c.is_zero()) return r;
    for (const auto& [fs, k] : terms_) {
        RationalFunction kc = reduce_i(k * c);
        if (!kc.is_zero()) r.terms_.emplace(fs, kc);
    }
    return r;
}

RegInfExpr& RegInfExpr::operator+=(const RegInfExpr& o) {
    if (this == &o) return *this += RegInfExpr(o);
    for (const auto& [fs, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(fs, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

WordSum RegInfExpr::shuffled() const {
    WordSum out;
    for (const auto& [fs, c] : terms_) {
        WordSum acc = WordSum::one();
        for (const Word& w : fs) acc = shuffle(acc, WordSum(w));
        out += acc * c;
    }
    return out;
}

std::string RegInfExpr::str() const {
    return to_expression(*this).str();
}

std::ostream& operator<<(std::ostream& os, const RegInfExpr& e) {
    return os << e.str();
}

// --- atoms and expressions ----------------------------------------------

PolylogAtom PolylogAtom::hyperlog(const RationalFunction& arg, Word w) {
    PolylogAtom a;
    a.kind = Kind::Hlog;
    a.arg = arg;
    a.word = std::move(w);
    return a;
}

PolylogAtom PolylogAtom::mpl(std::vector<int> n, std::vector<RationalFunction> z) {
    if (n.size() != z.size()) throw std::invalid_argument("Mpl: index/argument mismatch");
    PolylogAtom a;
    a.kind = Kind::Mpl;
    a.indices = std::move(n);
    a.args = std::move(z);
    return a;
}

PolylogAtom PolylogAtom::hpl(std::vector<int> m, const RationalFunction& arg) {
    PolylogAtom a;
    a.kind = Kind::Hpl;
    a.arg = arg;
    a.indices = std::move(m);
    return a;
}

PolylogAtom PolylogAtom::reg_inf_word(Word w) {
    PolylogAtom a;
    a.kind = Kind::RegInf;
    a.word = std::move(w);
    return a;
}

size_t PolylogAtom::weight() const {
    switch (kind) {
        case Kind::Hlog:
        case Kind::RegInf:
            return word.weight();
        case Kind::Mpl: {
            size_t s = 0;
            for (int n : indices) s += (size_t)std::abs(n);
            return s;
        }
        case Kind::Hpl: {
            size_t s = 0;
            for (int m : indices) s += m == 0 ? 1 : (size_t)std::abs(m);
            return s;
        }
    }
    return 0;
}

bool PolylogAtom::is_one() const {
    switch (kind) {
        case Kind::Hlog:
        case Kind::RegInf:
            return word.empty();
        case Kind::Mpl:
        case Kind::Hpl:
            return indices.empty();
    }
    return false;
}

int PolylogAtom::compare(const PolylogAtom& a, const PolylogAtom& b) {
    if (a.kind != b.kind) return (int)a.kind < (int)b.kind ? -1 : 1;
    if (int c = RationalFunction::compare(a.arg, b.arg)) return c;
    if (int c = Word::compare(a.word, b.word)) return c;
    if (a.indices != b.indices) return a.indices < b.indices ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (size_t i = 0; i < a.args.size(); i++)
        if (int c = RationalFunction::compare(a.args[i], b.args[i])) return c;
    return 0;
}

std::string PolylogAtom::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Hlog:
            os << "Hlog(" << arg << "," << word << ")";
            break;
        case Kind::RegInf:
            os << "RegInf(" << word << ")";
            break;
        case Kind::Mpl:
            os << "Mpl([";
            for (size_t i = 0; i < indices.size(); i++) os << (i ? "," : "") << indices[i];
            os << "],[";
            for (size_t i = 0; i < args.size(); i++) {
                if (i) os << ",";
                os << args[i];
            }
            os << "])";
            break;
        case Kind::Hpl:
            os << "Hpl([";
            for (size_t i = 0; i < indices.size(); i++) os << (i ? "," : "") << indices[i];
            os << "]," << arg << ")";
            break;
    }
    return os.str();
}

RationalFunction Expression::rational_part() const {
    auto it = terms_.find(Factors{});
    return it == terms_.end() ? RationalFunction() : it->second;
}

void Expression::add(const RationalFunction& c0, Factors factors) {
    RationalFunction c = reduce_i(c0);
    if (c.is_zero()) return;
    Factors fs;
    fs.reserve(factors.size());
    for (PolylogAtom& a : factors) {
        if (a.kind == PolylogAtom::Kind::RegInf && kills_at_infinity(a.word)) return;
        if (!a.is_one()) fs.push_back(std::move(a));
    }
    std::sort(fs.begin(), fs.end());
    auto [it, fresh] = terms_.emplace(std::move(fs), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Expression Expression::operator+(const Expression& o) const {
    Expression r = *this;
    r += o;
    return r;
}

Expression Expression::operator-(const Expression& o) const {
    Expression r = *this;
    r -= o;
    return r;
}

Expression Expression::operator-() const {
    Expression r;
    for (const auto& [fs, c] : terms_) r.terms_.emplace(fs, -c);
    return r;
}

Expression Expression::operator*(const Expression& o) const {
    Expression r;
    for (const auto& [fa, ca] : terms_)
        for (const auto& [fb, cb] : o.terms_) {
            Factors f = fa;
            f.insert(f.end(), fb.begin(), fb.end());
            r.add(ca * cb, std::move(f));
        }
    return r;
}

Expression Expression::operator*(const RationalFunction& c0) const {
    RationalFunction c = reduce_i(c0);
    Expression r;
    if (c.is_zero()) return r;
    for (const auto& [fs, k] : terms_) {
        RationalFunction kc = reduce_i(k * c);
        if (!kc.is_zero()) r.terms_.emplace(fs, kc);
    }
    return r;
}

Expression& Expression::operator+=(const Expression& o) {
    if (this == &o) return *this += Expression(o);
    for (const auto& [fs, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(fs, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Expression& Expression::operator-=(const Expression& o) {
    return *this += -o;
}

std::string Expression::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expression& e) {
    if (e.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [fs, c] : e.terms()) {
        std::ostringstream cs;
        cs << c;
        std::string cstr = cs.str();
        bool bare_negative = cstr[0] == '-' && cstr.find(' ') == std::string::npos;
        if (bare_negative) cstr.erase(0, 1);
        if (first) {
            if (bare_negative) os << '-';
        } else {
            os << (bare_negative ? " - " : " + ");
        }
        first = false;
        std::string prod;
        for (const PolylogAtom& a : fs) {
            if (!prod.empty()) prod += '*';
            prod += a.str();
        }
        if (prod.empty())
            os << (cstr.find(' ') != std::string::npos ? "(" + cstr + ")" : cstr);
        else if (cstr == "1")
            os << prod;
        else if (cstr.find(' ') != std::string::npos)
            os << '(' << cstr << ")*" << prod;
        else
            os << cstr << '*' << prod;
    }
    return os;
}

Expression to_expression(const HlogExpr& e) {
    Expression out;
    RationalFunction z = RationalFunction::variable(e.variable());
    for (const auto& [w, c] : e.terms())
        out.add(c, w.empty() ? Expression::Factors{}
                             : Expression::Factors{PolylogAtom::hyperlog(z, w)});
    return out;
}

Expression to_expression(const RegInfExpr& e) {
    Expression out;
    for (const auto& [fs, c] : e.terms()) {
        Expression::Factors atoms;
        atoms.reserve(fs.size());
        for (const Word& w : fs) atoms.push_back(PolylogAtom::reg_inf_word(w));
        out.add(c, std::move(atoms));
    }
    return out;
}

// --- conversions ---------------------------------------------------------

namespace {

using Kind = PolylogAtom::Kind;

// Zero indices merge neighbouring arguments; a zero argument kills the sum.
Expression mpl_clean(std::vector<int> n, std::vector<RationalFunction> z) {
    for (size_t j = 0; j < n.size(); j++) {
        if (n[j] != 0) continue;
        RationalFunction zj = z[j];
        RationalFunction omz = RationalFunction(1) - zj;
        if (omz.is_zero())
            throw std::invalid_argument("convert: zero Mpl index at argument 1");
        Expression out;
        {
            std::vector<int> n1(n);
            std::vector<RationalFunction> z1(z);
            n1.erase(n1.begin() + (long)j);
            z1.erase(z1.begin() + (long)j);
            if (j > 0) z1[j - 1] = z[j - 1] * zj;
            out += mpl_clean(std::move(n1), std::move(z1)) * (zj / omz);
        }
        if (j + 1 < n.size()) {
            std::vector<int> n2(n);
            std::vector<RationalFunction> z2(z);
            n2.erase(n2.begin() + (long)j);
            z2.erase(z2.begin() + (long)j);
            z2[j] = zj * z[j + 1];
            out -= mpl_clean(std::move(n2), std::move(z2)) * (RationalFunction(1) / omz);
        }
        return out;
    }
    for (const RationalFunction& zz : z)
        if (zz.is_zero()) return Expression();
    if (n.empty()) return Expression(RationalFunction(1));
    for (int nj : n)
        if (nj < 0) throw std::invalid_argument("convert: negative Mpl index");
    return Expression(PolylogAtom::mpl(std::move(n), std::move(z)));
}

// Li_{n1..nr}(z1..zr) = (-1)^r L_w(1), w = 0^{nr-1} [1/z_r] ... 0^{n1-1}
// [1/(z_r...z_1)]; requires a zero-free index string.
Expression mpl_to_hlog(const std::vector<int>& n, const std::vector<RationalFunction>& z) {
    size_t r = n.size();
    if (r == 0) return Expression(RationalFunction(1));
    std::vector<RationalFunction> tail_inv(r);
    RationalFunction prod(1);
    for (size_t i = r; i-- > 0;) {
        prod *= z[i];
        if (prod.is_zero()) return Expression();
        tail_inv[i] = prod.reciprocal();
    }
    std::vector<Letter> ls;
    for (size_t i = r; i-- > 0;) {
        for (int q = 1; q < n[i]; q++) ls.push_back(zero_letter());
        ls.push_back(tail_inv[i]);
    }
    Expression out(PolylogAtom::hyperlog(RationalFunction(1), Word(std::move(ls))));
    return r % 2 ? out * RationalFunction(-1) : out;
}

// Compressed index notation: 0 is a lone zero letter, +-m is 0^{m-1} followed
// by +-1, each positive index contributing a sign -1.
Expression hpl_to_hlog(const std::vector<int>& m, const RationalFunction& arg) {
    std::vector<Letter> ls;
    int sign = 1;
    for (int mi : m) {
        if (mi == 0) {
            ls.push_back(zero_letter());
            continue;
        }
        for (int q = 1; q < std::abs(mi); q++) ls.push_back(zero_letter());
        ls.push_back(RationalFunction(mi > 0 ? 1 : -1));
        if (mi > 0) sign = -sign;
    }
    Expression out(PolylogAtom::hyperlog(arg, Word(std::move(ls))));
    return sign < 0 ? out * RationalFunction(-1) : out;
}

Expression hlog_to_mpl(const RationalFunction& a, const Word& w) {
    if (a.is_zero())
        return w.empty() ? Expression(RationalFunction(1)) : Expression();
    std::vector<WordSum> parts = strip_trailing(w, zero_letter());
    bool log_zero = (a - RationalFunction(1)).is_zero();
    Expression log_a;
    if (!log_zero) log_a = mpl_clean({1}, {RationalFunction(1) - a}) * RationalFunction(-1);
    Expression out;
    for (size_t j = 0; j < parts.size(); j++) {
        if (j > 0 && log_zero) break;
        Expression sum;
        for (const auto& [u, c] : parts[j].terms()) {
            if (u.empty()) {
                sum += Expression(c);
                continue;
            }
            // blocks right to left: sigma_1 is the innermost nonzero letter
            std::vector<int> n;
            std::vector<RationalFunction> sig;
            size_t i = u.weight();
            while (i > 0) {
                RationalFunction s = u[i - 1];
                i--;
                int zeros = 0;
                while (i > 0 && u[i - 1].is_zero()) {
                    zeros++;
                    i--;
                }
                n.push_back(zeros + 1);
                sig.push_back(s);
            }
            size_t r = n.size();
            std::vector<RationalFunction> args;
            for (size_t q = 0; q + 1 < r; q++) args.push_back(sig[q + 1] / sig[q]);
            args.push_back(a / sig[r - 1]);
            sum += mpl_clean(n, args) * (r % 2 ? -c : c);
        }
        Expression term = sum * RationalFunction(BigRational(1) / factorial((long)j));
        for (size_t q = 0; q < j; q++) term = term * log_a;
        out += term;
    }
    return out;
}

Expression hlog_to_hpl(const RationalFunction& a, const Word& w) {
    if (a.is_zero())
        return w.empty() ? Expression(RationalFunction(1)) : Expression();
    std::vector<int> idx;
    int sign = 1;
    int zeros = 0;
    for (const Letter& l : w.letters()) {
        if (l.is_zero()) {
            zeros++;
            continue;
        }
        if ((l - RationalFunction(1)).is_zero()) {
            idx.push_back(zeros + 1);
            sign = -sign;
        } else if ((l + RationalFunction(1)).is_zero()) {
            idx.push_back(-(zeros + 1));
        } else {
            throw UnconvertibleLetter("convert: Hpl letter outside {-1,0,1}", l);
        }
        zeros = 0;
    }
    for (int q = 0; q < zeros; q++) idx.push_back(0);
    if (idx.empty()) return Expression(RationalFunction(1));
    Expression out(PolylogAtom::hpl(std::move(idx), a));
    return sign < 0 ? out * RationalFunction(-1) : out;
}

// L_w(a) over the path (0,a) mapped onto (0,inf) by x -> x/(a-x): letters
// become [s/(a-s)] - [-1], and each log(a) factor from trailing zero letters
// is -RegInf([-a]).
Expression hlog_to_reginf(const RationalFunction& a, const Word& w) {
    if (a.is_zero())
        return w.empty() ? Expression(RationalFunction(1)) : Expression();
    MoebiusMap f{RationalFunction(1), RationalFunction(), RationalFunction(-1), a};
    Expression log_a = Expression(PolylogAtom::reg_inf_word(Word{-a})) * RationalFunction(-1);
    std::vector<WordSum> parts = strip_trailing(w, zero_letter());
    Expression out;
    for (size_t j = 0; j < parts.size(); j++) {
        Expression sum;
        WordSum moved = moebius_transform(parts[j], f);
        for (const auto& [u, c] : moved.terms())
            sum.add(c, u.empty() ? Expression::Factors{}
                                 : Expression::Factors{PolylogAtom::reg_inf_word(u)});
        Expression term = sum * RationalFunction(BigRational(1) / factorial((long)j));
        for (size_t q = 0; q < j; q++) term = term * log_a;
        out += term;
    }
    return out;
}

Expression convert_atom(const PolylogAtom& a, Kind target) {
    switch (a.kind) {
        case Kind::Hlog:
            switch (target) {
                case Kind::Hlog:
                    return Expression(a);
                case Kind::Mpl:
                    return hlog_to_mpl(a.arg, a.word);
                case Kind::Hpl:
                    return hlog_to_hpl(a.arg, a.word);
                case Kind::RegInf:
                    return hlog_to_reginf(a.arg, a.word);
            }
            break;
        case Kind::Mpl: {
            Expression cleaned = mpl_clean(a.indices, a.args);
            if (target == Kind::Mpl) return cleaned;
            Expression out;
            for (const auto& [fs, c] : cleaned.terms()) {
                Expression term{c};
                for (const PolylogAtom& m : fs) {
                    Expression h = mpl_to_hlog(m.indices, m.args);
                    term = term * (target == Kind::Hlog ? h : convert(h, target));
                }
                out += term;
            }
            return out;
        }
        case Kind::Hpl: {
            if (target == Kind::Hpl) return Expression(a);
            Expression h = hpl_to_hlog(a.indices, a.arg);
            return target == Kind::Hlog ? h : convert(h, target);
        }
        case Kind::RegInf:
            if (target == Kind::RegInf) return Expression(a);
            throw std::invalid_argument(
                "convert: values at infinity have no finite-argument form");
    }
    throw std::logic_error("convert: unknown atom kind");
}

}  // namespace

Expression convert(const Expression& e, PolylogAtom::Kind target) {
    Expression out;
    for (const auto& [fs, c] : e.terms()) {
        Expression term{c};
        for (const PolylogAtom& a : fs) term = term * convert_atom(a, target);
        out += term;
    }
    return out;
}

RegInfExpr to_reg_inf(const Expression& e) {
    Expression r = convert(e, PolylogAtom::Kind::RegInf);
    RegInfExpr out;
    for (const auto& [fs, c] : r.terms()) {
        std::vector<Word> ws;
        ws.reserve(fs.size());
        for (const PolylogAtom& a : fs) ws.push_back(a.word);
        out.add(c, ws);
    }
    return out;
}

RegInfExpr to_reg_inf(const HlogExpr& e) {
    return to_reg_inf(to_expression(e));
}

// --- path splitting ------------------------------------------------------

std::vector<SplitTerm> split_path(const HlogExpr& e, const RationalFunction& s) {
    std::vector<SplitTerm> out;
    for (const auto& [w, g] : e.terms()) {
        size_t n = w.weight();
        for (size_t k = 0; k <= n; k++) {
            WordSum at = reg(w.suffix_from(k), {}, {s});
            // at the basepoint every nonempty word vanishes
            if (s.is_zero()) at = WordSum(Word(), at.counit());
            if (at.is_zero()) continue;
            std::vector<WordSum> parts = strip_trailing(w.prefix(k), s);
            for (size_t j = 0; j < parts.size(); j++) {
                RationalFunction inv_fact(BigRational(1) / factorial((long)j));
                for (const auto& [u, uc] : parts[j].terms()) {
                    SplitTerm t;
                    t.coeff = g * uc * inv_fact;
                    t.log_power = (long)j;
                    t.tail = u;
                    t.at_point = at;
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

Expression split_past(const HlogExpr& e, const RationalFunction& s, const BranchTag& tag) {
    RationalFunction z = RationalFunction::variable(e.variable());
    Expression carrier;
    if (s.is_zero()) {
        carrier = Expression(PolylogAtom::hyperlog(z, Word{zero_letter()}));
    } else {
        carrier = Expression(PolylogAtom::hyperlog((z - s) / s, Word{zero_letter()}));
        RationalFunction ipi = RationalFunction::variable(sym_i()) *
                               RationalFunction::variable(sym_pi()) *
                               RationalFunction::variable(tag.symbol());
        carrier += Expression(ipi);
    }
    Expression out;
    for (const SplitTerm& t : split_path(e, s)) {
        Expression term{t.coeff};
        for (long q = 0; q < t.log_power; q++) term = term * carrier;
        if (!t.tail.empty()) {
            Expression tail;
            WordSum shifted = moebius_transform(t.tail, MoebiusMap::shift(-s));
            for (const auto& [u, c] : shifted.terms())
                tail.add(c, {PolylogAtom::hyperlog(z - s, u)});
            term = term * tail;
        }
        Expression at;
        for (const auto& [v, c] : t.at_point.terms())
            at.add(c, v.empty() ? Expression::Factors{}
                                : Expression::Factors{PolylogAtom::hyperlog(s, v)});
        out += term * at;
    }
    return out;
}

}  // namespace hlog

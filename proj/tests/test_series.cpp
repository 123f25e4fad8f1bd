#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "hyperlog/parse.hpp"
#include "hyperlog/series.hpp"

using namespace hlog;
using namespace hlog::testing;

namespace {

Letter lc(long num, long den = 1) { return RationalFunction(rat(num, den)); }

RationalFunction rf(const std::string& text) { return parse_rational(text); }

Word rand_word(size_t weight, const std::vector<Letter>& pool) {
    std::vector<Letter> ls;
    for (size_t i = 0; i < weight; i++)
        ls.push_back(pool[(size_t)rand_int(0, (long)pool.size() - 1)]);
    return Word(std::move(ls));
}

LogSeries grid_mul(const LogSeries& a, const LogSeries& b, long order) {
    LogSeries out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            long power = ka.second + kb.second;
            if (power <= order) out.add(ka.first + kb.first, power, ca * cb);
        }
    return out;
}

LogSeries grid_truncate(const LogSeries& a, long order) {
    LogSeries out;
    for (const auto& [k, c] : a.terms())
        if (k.second <= order) out.add(k.first, k.second, c);
    return out;
}

// d/dz of sum c log(z)^j z^k.
LogSeries grid_diff(const LogSeries& a) {
    LogSeries out;
    for (const auto& [k, c] : a.terms()) {
        if (k.second != 0) out.add(k.first, k.second - 1, c * RationalFunction(k.second));
        if (k.first != 0) out.add(k.first - 1, k.second - 1, c * RationalFunction(k.first));
    }
    return out;
}

double to_d(const RationalFunction& c) { return c.constant_value().get_d(); }

double grid_eval(const LogSeries& g, double z) {
    double s = 0;
    for (const auto& [k, c] : g.terms())
        s += to_d(c) * std::pow(std::log(z), (double)k.first) *
             std::pow(z, (double)k.second);
    return s;
}

// L_w at a numeric point inside the convergence disk, through the Taylor
// series (letters must be constant).
double eval_word(const Word& w, double z, long order = 60) {
    double s = 0, zp = 1;
    auto a = word_series(w, order);
    for (long k = 0; k <= order; k++) {
        s += to_d(a[(size_t)k]) * zp;
        zp *= z;
    }
    return s;
}

double eval_expression(const Expression& e, double zval, Sym z, long order = 60) {
    std::map<Sym, std::complex<double>> pt{{z, zval}};
    double s = 0;
    for (const auto& [fs, c] : e.terms()) {
        double term = c.eval_c(pt).real();
        for (const PolylogAtom& a : fs) {
            REQUIRE(a.kind == PolylogAtom::Kind::Hlog);
            term *= eval_word(a.word, a.arg.eval_c(pt).real(), order);
        }
        s += term;
    }
    return s;
}

}  // namespace

TEST_CASE("word series of depth-one and depth-two words") {
    auto a = word_series(Word{lc(1)}, 6);
    for (long k = 1; k <= 6; k++) CHECK(a[(size_t)k] == RationalFunction(-1) / RationalFunction(k));
    CHECK(a[0].is_zero());

    auto b = word_series(Word{lc(0), lc(1)}, 6);
    for (long k = 1; k <= 6; k++)
        CHECK(b[(size_t)k] == RationalFunction(-1) / RationalFunction(k * k));

    auto c = word_series(Word{lc(-1)}, 6);
    for (long k = 1; k <= 6; k++)
        CHECK(c[(size_t)k] == RationalFunction(k % 2 ? 1 : -1) / RationalFunction(k));

    auto unit = word_series(Word(), 3);
    CHECK(unit[0] == RationalFunction(1));
    CHECK(unit[1].is_zero());

    CHECK_THROWS_AS(word_series(Word{lc(1), lc(0)}, 3), std::invalid_argument);
}

TEST_CASE("series at zero: pure log powers") {
    Sym z = sym("z");
    HlogExpr e = HlogExpr::hyperlog(z, Word{lc(0), lc(0), lc(0)});
    LogSeries s = series_at_zero(e, 4);
    CHECK(s.get(3, 0) == rf("1/6"));
    CHECK(s.terms().size() == 1);

    LogSeries one = series_at_zero(HlogExpr::constant(z, RationalFunction(1)), 2);
    CHECK(one.get(0, 0) == RationalFunction(1));
    CHECK(one.terms().size() == 1);
}

TEST_CASE("series at zero: trailing zero letters mix log and power terms") {
    Sym z = sym("z");
    // L_{[1,0]} = log(z) L_{[1]} - L_{[0,1]}
    LogSeries s = series_at_zero(HlogExpr::hyperlog(z, Word{lc(1), lc(0)}), 5);
    for (long k = 1; k <= 5; k++) {
        CHECK(s.get(1, k) == RationalFunction(-1) / RationalFunction(k));
        CHECK(s.get(0, k) == RationalFunction(1) / RationalFunction(k * k));
    }
    CHECK(s.get(0, 0).is_zero());
}

TEST_CASE("series at zero: coefficients contribute their Laurent expansion") {
    Sym z = sym("z");
    HlogExpr e(z);
    e.add(Word{lc(1)}, rf("1/z^2"));
    LogSeries s = series_at_zero(e, 8);
    CHECK(s.get(0, -1) == rf("-1"));
    CHECK(s.get(0, 0) == rf("-1/2"));
    CHECK(s.get(0, 8) == rf("-1/10"));

    HlogExpr g(z);
    g.add(Word(), rf("1/(1 - z)"));
    LogSeries t = series_at_zero(g, 6);
    for (long k = 0; k <= 6; k++) CHECK(t.get(0, k) == RationalFunction(1));

    // coefficients in other symbols pass through
    HlogExpr h(z);
    h.add(Word{lc(2)}, rf("a/(z - 1)"));
    LogSeries u = series_at_zero(h, 3);
    CHECK(u.get(0, 2) == rf("5*a/8"));  // (-a - a*z - ...) * (-z/2 - z^2/8 - ...)
}

TEST_CASE("series multiplication matches the shuffle product") {
    Sym z = sym("z");
    std::vector<Letter> pool{lc(0), lc(1), lc(-1), lc(2)};
    const long order = 8;
    for (int i = 0; i < 100; i++) {
        HlogExpr a(z), b(z);
        a.add(rand_word((size_t)rand_int(0, 3), pool),
              RationalFunction(rand_poly({z}, 2, 2, true)));
        b.add(rand_word((size_t)rand_int(0, 3), pool),
              RationalFunction(rand_poly({z}, 2, 2, true)));
        LogSeries sa = series_at_zero(a, order);
        LogSeries sb = series_at_zero(b, order);
        CHECK(series_at_zero(a * b, order) == grid_mul(sa, sb, order));
    }
}

TEST_CASE("series of the derivative is the derivative of the series") {
    Sym z = sym("z");
    std::vector<Letter> pool{lc(0), lc(1), lc(-1), lc(3)};
    const long order = 8;
    for (int i = 0; i < 100; i++) {
        HlogExpr e(z);
        long terms = rand_int(1, 2);
        for (long t = 0; t < terms; t++) {
            RationalFunction g(rand_poly({z}, 2, 2, true));
            if (rand_int(0, 1)) g = g / rf("z").pow(rand_int(1, 2));
            e.add(rand_word((size_t)rand_int(0, 3), pool), g);
        }
        CHECK(series_at_zero(hlog_diff(e, z), order - 1) ==
              grid_truncate(grid_diff(series_at_zero(e, order)), order - 1));
    }
}

TEST_CASE("distinct words have distinct series") {
    std::vector<Letter> pool{lc(0), lc(1), lc(-1), lc(2)};
    Sym z = sym("z");
    for (int i = 0; i < 100; i++) {
        Word a = rand_word((size_t)rand_int(1, 3), pool);
        Word b = rand_word((size_t)rand_int(1, 3), pool);
        if (a == b) continue;
        if (!a.empty() && a.back().is_zero()) a = a.with_back(lc(1));
        if (!b.empty() && b.back().is_zero()) b = b.with_back(lc(1));
        if (a == b) continue;
        CHECK(series_at_zero(HlogExpr::hyperlog(z, a), 12) !=
              series_at_zero(HlogExpr::hyperlog(z, b), 12));
    }
}

TEST_CASE("numeric series evaluation: multiplicativity and classical values") {
    // Li_1(1/3) = log(3/2) = -L_{[3]}(1)
    CHECK(std::abs(-eval_word(Word{lc(3)}, 1.0) - std::log(1.5)) < 1e-12);
    // L_{[1]}(1/2) = log(1/2)
    CHECK(std::abs(eval_word(Word{lc(1)}, 0.5) - std::log(0.5)) < 1e-12);
    // dilog at 1/2: Li_2(1/2) = pi^2/12 - log(2)^2/2 = -L_{[0,1]}(1/2)
    double li2 = M_PI * M_PI / 12 - std::log(2.0) * std::log(2.0) / 2;
    CHECK(std::abs(-eval_word(Word{lc(0), lc(1)}, 0.5) - li2) < 1e-12);

    Sym z = sym("z");
    std::vector<Letter> pool{lc(1), lc(-1), lc(2), lc(-3)};
    for (int i = 0; i < 20; i++) {
        Word u = rand_word((size_t)rand_int(1, 3), pool);
        Word v = rand_word((size_t)rand_int(1, 2), pool);
        HlogExpr prod = HlogExpr::hyperlog(z, u) * HlogExpr::hyperlog(z, v);
        double direct = eval_word(u, 0.4) * eval_word(v, 0.4);
        double shuffled = 0;
        for (const auto& [w, c] : prod.terms())
            shuffled += to_d(c) * eval_word(w, 0.4);
        CHECK(std::abs(direct - shuffled) < 1e-10);
    }
}

TEST_CASE("path splitting reproduces values at a regular interior point") {
    Sym z = sym("z");
    std::vector<Letter> pool{lc(1), lc(-1), lc(2)};
    RationalFunction s = rf("1/3");
    BranchTag tag{z, s, +1};
    for (int i = 0; i < 100; i++) {
        Word w = rand_word((size_t)rand_int(1, 3), pool);
        HlogExpr e = HlogExpr::hyperlog(z, w);
        Expression past = split_past(e, s, tag);
        double lhs = eval_word(w, 0.6);
        double rhs = eval_expression(past, 0.6, z);
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("expansion at infinity: logarithms") {
    Sym z = sym("z");
    auto g = expand_at_infinity(HlogExpr::hyperlog(z, Word{lc(0)}), 4);
    CHECK(g.get(1, 0) == RegInfExpr::constant(RationalFunction(1)));
    CHECK(g.terms().size() == 1);

    // log(1 + z) = log z + RegInf([-1]) + 1/z - 1/(2 z^2) + ...
    auto h = expand_at_infinity(HlogExpr::hyperlog(z, Word{lc(-1)}), 4);
    CHECK(h.get(1, 0) == RegInfExpr::constant(RationalFunction(1)));
    RegInfExpr tail;
    tail.add(RationalFunction(1), {Word{lc(-1)}});
    CHECK(h.get(0, 0) == tail);
    CHECK(h.get(0, -1) == RegInfExpr::constant(RationalFunction(1)));
    CHECK(h.get(0, -2) == RegInfExpr::constant(rf("-1/2")));
    CHECK(h.get(0, -3) == RegInfExpr::constant(rf("1/3")));
}

TEST_CASE("expansion at infinity: the dilogarithm inversion") {
    Sym z = sym("z");
    // L_{[0,-1]}(z) = zeta_2 + log^2(z)/2 + Li_2(-1/z) with the constant
    // appearing as the value RegInf([0, -1])
    auto g = expand_at_infinity(HlogExpr::hyperlog(z, Word{lc(0), lc(-1)}), 4);
    CHECK(g.get(2, 0) == RegInfExpr::constant(rf("1/2")));
    RegInfExpr logc;
    logc.add(RationalFunction(1), {Word{lc(-1)}});
    CHECK(g.get(1, 0) == logc);
    RegInfExpr constant;
    constant.add(RationalFunction(1), {Word{lc(0), lc(-1)}});
    CHECK(g.get(0, 0) == constant);
    CHECK(g.get(0, -1) == RegInfExpr::constant(rf("-1")));
    CHECK(g.get(0, -2) == RegInfExpr::constant(rf("1/4")));
}

TEST_CASE("expansion at infinity: rational coefficients") {
    Sym z = sym("z");
    HlogExpr grow(z);
    grow.add(Word{lc(0)}, rf("z"));
    auto g = expand_at_infinity(grow, 2);
    CHECK(g.get(1, 1) == RegInfExpr::constant(RationalFunction(1)));

    HlogExpr r(z);
    r.add(Word(), rf("(z + 1)/z"));
    auto h = expand_at_infinity(r, 3);
    CHECK(h.get(0, 0) == RegInfExpr::constant(RationalFunction(1)));
    CHECK(h.get(0, -1) == RegInfExpr::constant(RationalFunction(1)));
    CHECK(h.get(0, -2).is_zero());

    HlogExpr q(z);
    q.add(Word(), rf("1/(1 + z)"));
    auto k = expand_at_infinity(q, 3);
    CHECK(k.get(0, -1) == RegInfExpr::constant(RationalFunction(1)));
    CHECK(k.get(0, -2) == RegInfExpr::constant(rf("-1")));
    CHECK(k.get(0, -3) == RegInfExpr::constant(RationalFunction(1)));
}

#include "hyperlog/series.hpp"

#include <stdexcept>

namespace hlog {

namespace {

const Letter& zero_letter() {
    static const Letter z;
    return z;
}

BigRational factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), (unsigned long)n);
    return BigRational(f);
}

// z-coefficient lists of a polynomial, c[i] free of z.
std::vector<RationalFunction> coeff_list(const Polynomial& p, Sym z, long from, long count) {
    std::vector<RationalFunction> c((size_t)count);
    for (long i = 0; i < count; i++) c[(size_t)i] = RationalFunction(p.coeff(z, from + i));
    return c;
}

// Series inverse of a list with d[0] != 0.
std::vector<RationalFunction> invert_series(const std::vector<RationalFunction>& d) {
    std::vector<RationalFunction> s(d.size());
    RationalFunction lead = d[0].reciprocal();
    s[0] = lead;
    for (size_t m = 1; m < d.size(); m++) {
        RationalFunction acc;
        for (size_t j = 1; j <= m; j++) acc += d[j] * s[m - j];
        s[m] = -lead * acc;
    }
    return s;
}

std::vector<RationalFunction> cauchy(const std::vector<RationalFunction>& a,
                                     const std::vector<RationalFunction>& b, long count) {
    std::vector<RationalFunction> c((size_t)count);
    for (size_t i = 0; i < a.size() && (long)i < count; i++) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && (long)(i + j) < count; j++)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

long valuation(const Polynomial& p, Sym z) {
    long v = 0;
    while (p.coeff(z, v).is_zero()) v++;
    return v;
}

// g = sum_i c[i] z^{kmin+i} + O(z^{order+1}); c may be empty when the
// valuation exceeds order.
void laurent_at_zero(const RationalFunction& g, Sym z, long order, long& kmin,
                     std::vector<RationalFunction>& c) {
    long vn = valuation(g.num(), z), vd = valuation(g.den(), z);
    kmin = vn - vd;
    long count = order - kmin + 1;
    if (count <= 0) {
        c.clear();
        return;
    }
    auto n = coeff_list(g.num(), z, vn, count);
    auto d = coeff_list(g.den(), z, vd, count);
    c = cauchy(n, invert_series(d), count);
}

// g = sum_i c[i] z^{kmax-i} + O(z^{kmax-count}), read off from the reversed
// coefficient lists.
void laurent_at_inf(const RationalFunction& g, Sym z, long count, long& kmax,
                    std::vector<RationalFunction>& c) {
    long dn = g.num().degree(z), dd = g.den().degree(z);
    kmax = dn - dd;
    if (count <= 0) {
        c.clear();
        return;
    }
    std::vector<RationalFunction> n((size_t)count), d((size_t)count);
    for (long i = 0; i < count; i++) {
        if (dn - i >= 0) n[(size_t)i] = RationalFunction(g.num().coeff(z, dn - i));
        if (dd - i >= 0) d[(size_t)i] = RationalFunction(g.den().coeff(z, dd - i));
    }
    c = cauchy(n, invert_series(d), count);
}

}  // namespace

std::vector<RationalFunction> word_series(const Word& u, long order) {
    if (!u.empty() && u.back().is_zero())
        throw std::invalid_argument("word_series: trailing zero letter");
    std::vector<RationalFunction> a((size_t)order + 1);
    a[0] = RationalFunction(1);
    for (size_t i = u.weight(); i-- > 0;) {
        const Letter& sigma = u[i];
        std::vector<RationalFunction> out((size_t)order + 1);
        if (sigma.is_zero()) {
            // a[0] = 0 here: a zero letter is always followed by a deeper
            // letter whose integral vanished at 0
            for (long n = 1; n <= order; n++) out[(size_t)n] = a[(size_t)n] / RationalFunction(n);
        } else {
            // int_0^z x^j dx/(x - sigma) = -sum_m z^{j+m+1}/((j+m+1) sigma^{m+1})
            std::vector<RationalFunction> pw((size_t)order + 1);
            pw[0] = RationalFunction(1);
            RationalFunction inv = sigma.reciprocal();
            for (long m = 1; m <= order; m++) pw[(size_t)m] = pw[(size_t)m - 1] * inv;
            for (long n = 1; n <= order; n++) {
                RationalFunction acc;
                for (long j = 0; j < n; j++) {
                    if (a[(size_t)j].is_zero()) continue;
                    acc += a[(size_t)j] * pw[(size_t)(n - j)];
                }
                out[(size_t)n] = -acc / RationalFunction(n);
            }
        }
        a = std::move(out);
    }
    return a;
}

LogSeries series_at_zero(const HlogExpr& e, long order) {
    Sym z = e.variable();
    LogSeries out;
    for (const auto& [w, g] : e.terms()) {
        long kmin;
        std::vector<RationalFunction> gc;
        laurent_at_zero(g, z, order, kmin, gc);
        if (gc.empty()) continue;
        long wlen = order - kmin;
        std::vector<WordSum> parts = strip_trailing(w, zero_letter());
        for (size_t j = 0; j < parts.size(); j++) {
            RationalFunction inv_fact(BigRational(1) / factorial((long)j));
            for (const auto& [u, uc] : parts[j].terms()) {
                auto a = word_series(u, wlen);
                auto prod = cauchy(gc, a, wlen + 1);
                for (long i = 0; i <= wlen; i++)
                    out.add((long)j, kmin + i, prod[(size_t)i] * uc * inv_fact);
            }
        }
    }
    return out;
}

LogGrid<RegInfExpr> expand_at_infinity(const HlogExpr& e, long order) {
    Sym z = e.variable();
    LogGrid<RegInfExpr> out;
    for (const auto& [w, g] : e.terms()) {
        long kmax;
        std::vector<RationalFunction> gc;
        long dn = g.num().degree(z), dd = g.den().degree(z);
        laurent_at_inf(g, z, (dn - dd) + order + 1, kmax, gc);
        if (gc.empty()) continue;
        long mlen = kmax + order;  // largest 1/z power that can reach z^{-order}
        for (size_t k = 0; k <= w.weight(); k++) {
            RegInfExpr tail;
            tail.add(RationalFunction(1), {w.suffix_from(k)});
            if (tail.is_zero()) continue;
            WordSum yw = moebius_transform(w.prefix(k), MoebiusMap::reciprocal());
            for (const auto& [u, c] : yw.terms()) {
                std::vector<WordSum> parts = strip_trailing(u, zero_letter());
                for (size_t j = 0; j < parts.size(); j++) {
                    RationalFunction fac(BigRational(1) / factorial((long)j));
                    if (j % 2) fac = -fac;  // log(1/z) = -log z
                    for (const auto& [v, vc] : parts[j].terms()) {
                        auto a = word_series(v, mlen);
                        for (long m = 0; m <= mlen; m++) {
                            if (a[(size_t)m].is_zero()) continue;
                            for (size_t i = 0; i < gc.size(); i++) {
                                long power = kmax - (long)i - m;
                                if (power < -order) break;
                                RationalFunction cc =
                                    gc[i] * a[(size_t)m] * c * vc * fac;
                                if (!cc.is_zero()) out.add((long)j, power, tail * cc);
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace hlog

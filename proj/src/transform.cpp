#include "hyperlog/limits.hpp"

#include <iterator>
#include <utility>

namespace hlog {

namespace {

// Accumulates the t-poles of dlog p with weight sign * multiplicity: each
// factor linear in t contributes 1/(t - root), t-free factors drop, and
// anything of higher t-degree has no rational root and is rejected.
void dlog_poles(const Polynomial& p, Sym t, long sign,
                std::map<RationalFunction, long>& out) {
    if (!p.depends_on(t)) return;
    for (const FactorPart& part : poly_factor(p).factors) {
        long dt = part.poly.degree(t);
        if (dt == 0) continue;
        if (dt > 1)
            throw NonLinearLetterDifference(
                "letter difference with a zero nonlinear in " + sym_name(t), part.poly);
        RationalFunction tau = RationalFunction(-part.poly.coeff(t, 0)) /
                               RationalFunction(part.poly.coeff(t, 1));
        out[tau] += sign * part.multiplicity;
    }
}

using Pairs = std::map<Word, RegInfExpr>;

// The t-derivative of the value deletes one letter at a time:
//   d RegLim L_w = sum_k RegLim L_{w\k} [dlog(s_k - s_{k-1}) - dlog(s_{k+1} - s_k)]
// with s_{n+1} = 0, the k = 1 difference against s_0 = z dropped by the
// regularization at infinity, and dlog of an identically zero difference 0.
// Integrating each pole 1/(t - tau) prepends the letter tau; the t -> 0
// constant is reglim_word, since hyperlogarithms of nonempty words vanish
// there.
Pairs transform_rec(const Word& w, Sym t, std::map<Word, Pairs>& memo) {
    if (w.empty()) return {{Word(), RegInfExpr::constant(RationalFunction(1))}};
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    size_t n = w.weight();
    Pairs out;
    for (size_t k = 0; k < n; k++) {
        std::map<RationalFunction, long> poles;
        auto add_dlog = [&](const RationalFunction& f, long sign) {
            if (f.is_zero()) return;
            dlog_poles(f.num(), t, sign, poles);
            dlog_poles(f.den(), t, -sign, poles);
        };
        if (k > 0) add_dlog(w[k] - w[k - 1], +1);
        add_dlog((k + 1 < n ? w[k + 1] : Letter()) - w[k], -1);
        if (poles.empty()) continue;
        std::vector<Letter> rest;
        rest.reserve(n - 1);
        for (size_t i = 0; i < n; i++)
            if (i != k) rest.push_back(w[i]);
        Pairs inner = transform_rec(Word(std::move(rest)), t, memo);
        for (const auto& [tau, lam] : poles) {
            if (lam == 0) continue;
            RationalFunction c{BigRational(lam)};
            for (const auto& [u, e] : inner) out[u.with_front(tau)] += e * c;
        }
    }
    RegInfExpr c0;
    for (const auto& [v, c] : reglim_word(w, t).terms()) c0.add(c, {v});
    if (!c0.is_zero()) out[Word()] += c0;
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    memo.emplace(w, out);
    return out;
}

}  // namespace

std::map<Word, RegInfExpr> transform_word(const Word& w, Sym t) {
    std::map<Word, Pairs> memo;
    return transform_rec(w, t, memo);
}

}  // namespace hlog

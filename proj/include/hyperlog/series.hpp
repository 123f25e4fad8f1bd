#pragma once
// Expansions of hyperlogarithm expressions at the two ends of the
// integration path. At z = 0 an expression sum g_i(z) L_{w_i}(z) has a
// Laurent series with powers of log z; at z = infinity the coefficients are
// values at infinity (RegInfExpr) instead of rationals. Both live on a
// common grid indexed by (log z power, z power).

#include <map>
#include <utility>
#include <vector>

#include "hyperlog/expr.hpp"

namespace hlog {

// Coefficients of log(z)^j * z^k; zero entries are not stored.
template <typename T>
class LogGrid {
public:
    using Key = std::pair<long, long>;  // {log power, z power}

    void add(long log_pow, long power, const T& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{log_pow, power}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Zero when absent.
    T get(long log_pow, long power) const {
        auto it = terms_.find(Key{log_pow, power});
        return it == terms_.end() ? T() : it->second;
    }

    const std::map<Key, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const LogGrid& o) const { return terms_ == o.terms_; }
    bool operator!=(const LogGrid& o) const { return !(*this == o); }

private:
    std::map<Key, T> terms_;
};

using LogSeries = LogGrid<RationalFunction>;

// Taylor coefficients a_0..a_order of L_u(z) at z = 0. The word must not end
// in the zero letter (then L_u is analytic at 0 and a_0 = 0 for nonempty u);
// otherwise throws.
std::vector<RationalFunction> word_series(const Word& u, long order);

// Expansion at z = 0, exact through z^order; higher powers are dropped.
// Trailing zero letters contribute the log z powers, coefficient poles at 0
// the negative z powers. The (0,0) entry is the regularized limit at 0.
LogSeries series_at_zero(const HlogExpr& e, long order = 10);

// Expansion at z = infinity, exact through z^{-order}; lower powers are
// dropped. Prefixes of each word are carried to the expansion variable 1/z
// (log(1/z) = -log z flips the sign of odd log powers), suffixes stay behind
// as values at infinity, so entries are RegInfExpr. Entries with a positive
// z power or a log power at z^0 are the divergent part; the (0,0) entry is
// the regularized limit at infinity.
LogGrid<RegInfExpr> expand_at_infinity(const HlogExpr& e, long order = 10);

}  // namespace hlog

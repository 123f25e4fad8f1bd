#include "hyperlog/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlog {

BigRational rat(long num, long den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

void Mono::normalize() {
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
}

long Mono::total_degree() const {
    long d = 0;
    for (int32_t e : exps) d += e;
    return d;
}

bool Mono::divides(const Mono& other) const {
    if (exps.size() > other.exps.size()) return false;
    for (size_t i = 0; i < exps.size(); i++)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
    for (size_t i = 0; i < exps.size(); i++) r.exps[i] += exps[i];
    for (size_t i = 0; i < o.exps.size(); i++) r.exps[i] += o.exps[i];
    return r;
}

Mono Mono::operator/(const Mono& o) const {
    Mono r = *this;
    for (size_t i = 0; i < o.exps.size(); i++) {
        r.exps[i] -= o.exps[i];
        if (r.exps[i] < 0) throw std::domain_error("Mono division not exact");
    }
    r.normalize();
    return r;
}

bool mono_less(const Mono& a, const Mono& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    size_t n = std::max(a.exps.size(), b.exps.size());
    for (size_t i = 0; i < n; i++) {
        int32_t ea = i < a.exps.size() ? a.exps[i] : 0;
        int32_t eb = i < b.exps.size() ? b.exps[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(const BigRational& c) {
    if (sgn(c) != 0) terms_.emplace(Mono{}, c);
}

Polynomial::Polynomial(long c) {
    if (c != 0) terms_.emplace(Mono{}, BigRational(c));
}

Polynomial Polynomial::variable(Sym v) {
    Mono m;
    m.exps.assign((size_t)v + 1, 0);
    m.exps[(size_t)v] = 1;
    Polynomial p;
    p.terms_.emplace(std::move(m), BigRational(1));
    return p;
}

Polynomial Polynomial::monomial(const Mono& m, const BigRational& c) {
    Polynomial p;
    if (sgn(c) != 0) {
        Mono mm = m;
        mm.normalize();
        p.terms_.emplace(std::move(mm), c);
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() &&
           terms_.begin()->second == 1;
}

BigRational Polynomial::constant_value() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? BigRational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

void Polynomial::add_term(const Mono& m, const BigRational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    if (terms_.empty() || o.terms_.empty()) return r;
    // Multiply by the smaller operand's terms on the outside.
    const Polynomial* a = this;
    const Polynomial* b = &o;
    if (a->terms_.size() < b->terms_.size()) std::swap(a, b);
    for (const auto& [mb, cb] : b->terms_)
        for (const auto& [ma, ca] : a->terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
    Polynomial r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::pow(long n) const {
    if (n < 0) throw std::domain_error("Polynomial::pow: negative exponent");
    Polynomial r(1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

long Polynomial::degree(Sym v) const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, (long)m.exp(v));
    return d;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::vector<Sym> Polynomial::variables() const {
    std::vector<char> seen;
    for (const auto& [m, c] : terms_) {
        if (m.exps.size() > seen.size()) seen.resize(m.exps.size(), 0);
        for (size_t i = 0; i < m.exps.size(); i++)
            if (m.exps[i] > 0) seen[i] = 1;
    }
    std::vector<Sym> vs;
    for (size_t i = 0; i < seen.size(); i++)
        if (seen[i]) vs.push_back((Sym)i);
    return vs;
}

Polynomial Polynomial::coeff(Sym v, long k) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exp(v) != k) continue;
        Mono mm = m;
        if (v < (Sym)mm.exps.size()) mm.exps[(size_t)v] = 0;
        mm.normalize();
        r.add_term(mm, c);
    }
    return r;
}

Polynomial Polynomial::derivative(Sym v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        int32_t e = m.exp(v);
        if (e == 0) continue;
        Mono mm = m;
        mm.exps[(size_t)v] = e - 1;
        mm.normalize();
        r.add_term(mm, c * e);
    }
    return r;
}

std::pair<Mono, BigRational> Polynomial::leading_term() const {
    if (terms_.empty()) return {Mono{}, BigRational(0)};
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

int Polynomial::canonical_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.rbegin()->second) > 0 ? 1 : -1;
}

Polynomial Polynomial::subst(Sym v, const Polynomial& value) const {
    long d = degree(v);
    if (d == 0) return *this;
    // Horner over the v-coefficients.
    Polynomial r = coeff(v, d);
    for (long k = d - 1; k >= 0; k--) r = r * value + coeff(v, k);
    return r;
}

BigRational Polynomial::eval(const std::map<Sym, BigRational>& point) const {
    BigRational total(0);
    for (const auto& [m, c] : terms_) {
        BigRational t = c;
        for (size_t i = 0; i < m.exps.size(); i++) {
            if (m.exps[i] == 0) continue;
            auto it = point.find((Sym)i);
            if (it == point.end())
                throw std::domain_error("Polynomial::eval: unassigned symbol " +
                                        sym_name((Sym)i));
            BigRational base = it->second;
            for (int32_t k = 0; k < m.exps[i]; k++) t *= base;
        }
        total += t;
    }
    return total;
}

std::complex<double> Polynomial::eval_c(
    const std::map<Sym, std::complex<double>>& point) const {
    std::complex<double> total(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        std::complex<double> t(c.get_d(), 0.0);
        for (size_t i = 0; i < m.exps.size(); i++) {
            if (m.exps[i] == 0) continue;
            auto it = point.find((Sym)i);
            if (it == point.end())
                throw std::domain_error("Polynomial::eval_c: unassigned symbol " +
                                        sym_name((Sym)i));
            for (int32_t k = 0; k < m.exps[i]; k++) t *= it->second;
        }
        total += t;
    }
    return total;
}

BigRational Polynomial::content() const {
    if (terms_.empty()) return BigRational(0);
    BigInt num(0), den(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    BigRational r(num, den);
    r.canonicalize();
    if (canonical_sign() < 0) r = -r;
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    BigRational c = content();
    Polynomial r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc / c);
    return r;
}

Polynomial Polynomial::content_wrt(Sym v) const {
    long d = degree(v);
    Polynomial g;
    for (long k = 0; k <= d; k++) {
        Polynomial ck = coeff(v, k);
        if (!ck.is_zero()) g = poly_gcd(g, ck);
        if (g.is_one()) break;
    }
    return g;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q;
    Polynomial r = *this;
    auto [dm, dc] = d.leading_term();
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!dm.divides(rm)) return std::nullopt;
        Mono qm = rm / dm;
        BigRational qc = rc / dc;
        q.add_term(qm, qc);
        r -= d * Polynomial::monomial(qm, qc);
    }
    return q;
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    auto q = try_divide(d);
    if (!q) throw std::domain_error("Polynomial::divexact: not divisible");
    return *q;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.rbegin(), ea = a.terms_.rend();
    auto ib = b.terms_.rbegin(), eb = b.terms_.rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (mono_less(ia->first, ib->first)) return -1;
        if (mono_less(ib->first, ia->first)) return 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

Polynomial operator*(const BigRational& c, const Polynomial& p) {
    return p.scaled(c);
}

namespace {

void print_term(std::ostream& os, const Mono& m, const BigRational& c,
                bool first) {
    BigRational a = c;
    if (first) {
        if (sgn(a) < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (sgn(a) < 0 ? " - " : " + ");
        if (sgn(a) < 0) a = -a;
    }
    bool printed = false;
    if (a != 1 || m.is_one()) {
        os << a.get_str();
        printed = true;
    }
    for (size_t i = 0; i < m.exps.size(); i++) {
        if (m.exps[i] == 0) continue;
        if (printed) os << "*";
        os << sym_name((Sym)i);
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        printed = true;
    }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        print_term(os, it->first, it->second, first);
        first = false;
    }
    return os;
}

std::string Polynomial::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

namespace {

// Pseudo-remainder of a by b in v, up to a factor of lc(b)^k (the caller
// strips content anyway): r = lc(b)^j*a - q*b with deg_v r < deg_v b.
Polynomial prem(const Polynomial& a, const Polynomial& b, Sym v) {
    long db = b.degree(v);
    Polynomial lcb = b.coeff(v, db);
    Polynomial r = a;
    Polynomial xv = Polynomial::variable(v);
    long da;
    while (!r.is_zero() && (da = r.degree(v)) >= db) {
        Polynomial lcr = r.coeff(v, da);
        r = r * lcb - b * lcr * xv.pow(da - db);
    }
    return r;
}

BigInt coeff_height(const Polynomial& p) {
    BigInt h;
    for (const auto& [m, c] : p.terms()) {
        BigInt a = abs(c.get_num());
        if (cmp(a, h) > 0) h = a;
    }
    return h;
}

Polynomial eval_var(const Polynomial& p, Sym v, const BigInt& xi) {
    BigRational x{xi};
    Polynomial r;
    for (long k = p.degree(v); k >= 0; k--) r = r.scaled(x) + p.coeff(v, k);
    return r;
}

// Balanced remainder in (-xi/2, xi/2].
BigInt balanced_mod(const BigInt& a, const BigInt& xi) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), xi.get_mpz_t());
    if (r * 2 > xi) r -= xi;
    return r;
}

// Heuristic gcd for integer-coefficient inputs: evaluate one variable at a
// point xi exceeding twice the coefficient height, take the gcd one level
// down, and lift it back through its balanced base-xi digits. Candidates are
// accepted only after exact trial division, so a miss (lift too tall, or an
// unlucky evaluation sharing a spurious factor) costs a retry at a larger xi
// and never a wrong answer.
bool heu_gcd(const Polynomial& a, const Polynomial& b, Polynomial& out) {
    if (a.is_constant() && b.is_constant()) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_num_mpz_t(),
                b.constant_value().get_num_mpz_t());
        out = Polynomial(BigRational(g));
        return true;
    }
    std::vector<Sym> va = a.variables(), vb = b.variables();
    Sym v = -1;
    for (Sym x : va)
        if (std::find(vb.begin(), vb.end(), x) != vb.end()) { v = x; break; }
    if (v < 0) v = std::min(va.empty() ? vb.front() : va.front(),
                            vb.empty() ? va.front() : vb.front());

    long da = a.degree(v), db = b.degree(v);
    BigInt ha = coeff_height(a), hb = coeff_height(b);
    BigInt xi = 2 * std::min(ha, hb) + 29;
    Polynomial xv = Polynomial::variable(v);
    for (int attempt = 0; attempt < 6; attempt++) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (std::max(da, db) + 1) > 120000)
            return false;
        Polynomial ea = eval_var(a, v, xi), eb = eval_var(b, v, xi);
        Polynomial gamma;
        if (!ea.is_zero() && !eb.is_zero() && heu_gcd(ea, eb, gamma)) {
            Polynomial h, vk(1);
            long k = 0, dmin = std::min(da, db);
            bool ok = true;
            while (!gamma.is_zero()) {
                if (k > dmin) { ok = false; break; }
                Polynomial digit;
                for (const auto& [m, c] : gamma.terms())
                    digit.add_term(m, BigRational(balanced_mod(c.get_num(), xi)));
                h += digit * vk;
                gamma = (gamma - digit).scaled(BigRational(1) / BigRational(xi));
                vk = vk * xv;
                k++;
            }
            if (ok && !h.is_zero() && a.try_divide(h) && b.try_divide(h)) {
                out = h;
                return true;
            }
        }
        xi = xi * 73794 / 27011 + 29;
    }
    return false;
}

Mono mono_gcd(const Mono& a, const Mono& b) {
    Mono g;
    size_t n = std::min(a.exps.size(), b.exps.size());
    g.exps.resize(n);
    for (size_t i = 0; i < n; i++) g.exps[i] = std::min(a.exps[i], b.exps[i]);
    g.normalize();
    return g;
}

Mono common_mono(const Polynomial& p) {
    Mono g;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        g = first ? m : mono_gcd(g, m);
        first = false;
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return a.primitive_part();

    // Strip the common monomial factor first; it is the only gcd contribution
    // from variables present in just one operand's every term.
    Mono ma = common_mono(a), mb = common_mono(b);
    Mono mg = mono_gcd(ma, mb);
    Polynomial pa = a, pb = b;
    if (!ma.is_one()) pa = pa.divexact(Polynomial::monomial(ma, BigRational(1)));
    if (!mb.is_one()) pb = pb.divexact(Polynomial::monomial(mb, BigRational(1)));
    Polynomial shell = Polynomial::monomial(mg, BigRational(1));
    if (pa.is_constant() || pb.is_constant()) return shell;

    // Main variable: lowest id occurring in both. If none, the (monomial-free)
    // polynomials are coprime.
    std::vector<Sym> va = pa.variables(), vb = pb.variables();
    Sym v = -1;
    for (Sym x : va)
        if (std::find(vb.begin(), vb.end(), x) != vb.end()) { v = x; break; }
    if (v < 0) return shell;

    Polynomial h;
    if (heu_gcd(pa.primitive_part(), pb.primitive_part(), h))
        return shell * h.primitive_part();

    Polynomial ca = pa.content_wrt(v), cb = pb.content_wrt(v);
    Polynomial ppa = pa.divexact(ca), ppb = pb.divexact(cb);
    Polynomial cont_gcd = poly_gcd(ca, cb);

    // Primitive PRS in v.
    Polynomial f = ppa, g = ppb;
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    while (true) {
        Polynomial r = prem(f, g, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) { g = Polynomial(1); break; }
        r = r.divexact(r.content_wrt(v)).primitive_part();
        f = g;
        g = r;
    }
    // Factors are primitive with positive leading sign, hence so is the
    // product.
    return shell * cont_gcd * g.primitive_part();
}

}  // namespace hlog

#include "hyperlog/word.hpp"

#include <algorithm>
#include <sstream>

namespace hlog {

Word Word::prefix(size_t k) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + k));
}

Word Word::suffix_from(size_t k) const {
    return Word(std::vector<Letter>(letters_.begin() + k, letters_.end()));
}

Word Word::reversed() const {
    return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

Word Word::concat(const Word& o) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(ls));
}

Word Word::with_front(const Letter& l) const {
    std::vector<Letter> ls;
    ls.reserve(letters_.size() + 1);
    ls.push_back(l);
    ls.insert(ls.end(), letters_.begin(), letters_.end());
    return Word(std::move(ls));
}

Word Word::with_back(const Letter& l) const {
    std::vector<Letter> ls = letters_;
    ls.push_back(l);
    return Word(std::move(ls));
}

int Word::compare(const Word& a, const Word& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
    for (size_t i = 0; i < a.weight(); i++) {
        int c = RationalFunction::compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Word::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    os << '[';
    for (size_t i = 0; i < w.weight(); i++) {
        if (i) os << ", ";
        os << w[i];
    }
    return os << ']';
}

void WordSum::add(const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordSum WordSum::operator+(const WordSum& o) const {
    WordSum r = *this;
    r += o;
    return r;
}

WordSum WordSum::operator-(const WordSum& o) const {
    WordSum r = *this;
    r -= o;
    return r;
}

WordSum WordSum::operator-() const {
    WordSum r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

WordSum WordSum::operator*(const RationalFunction& c) const {
    WordSum r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

RationalFunction WordSum::counit() const {
    auto it = terms_.find(Word());
    return it == terms_.end() ? RationalFunction() : it->second;
}

std::string WordSum::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const WordSum& s) {
    if (s.is_zero()) return os << '0';
    bool first = true;
    for (const auto& [w, c] : s.terms()) {
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
        if (cstr == "1")
            os << w;
        else if (cstr.find(' ') != std::string::npos)
            os << '(' << cstr << ")*" << w;
        else
            os << cstr << '*' << w;
    }
    return os;
}

void TensorSum::add(const Word& l, const Word& r, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(Key(l, r), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSum TensorSum::operator+(const TensorSum& o) const {
    TensorSum r = *this;
    r += o;
    return r;
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

namespace {

void shuffle_rec(const std::vector<Letter>& a, size_t i, const std::vector<Letter>& b,
                 size_t j, std::vector<Letter>& acc, WordSum& out) {
    if (i == a.size() && j == b.size()) {
        out.add(Word(acc), RationalFunction(1));
        return;
    }
    if (i < a.size()) {
        acc.push_back(a[i]);
        shuffle_rec(a, i + 1, b, j, acc, out);
        acc.pop_back();
    }
    if (j < b.size()) {
        acc.push_back(b[j]);
        shuffle_rec(a, i, b, j + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

WordSum shuffle(const Word& v, const Word& w) {
    WordSum out;
    std::vector<Letter> acc;
    acc.reserve(v.weight() + w.weight());
    shuffle_rec(v.letters(), 0, w.letters(), 0, acc, out);
    return out;
}

WordSum shuffle(const WordSum& v, const WordSum& w) {
    WordSum out;
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms()) out += shuffle(a, b) * (ca * cb);
    return out;
}

TensorSum coproduct(const Word& w) {
    TensorSum out;
    for (size_t k = 0; k <= w.weight(); k++)
        out.add(w.prefix(k), w.suffix_from(k), RationalFunction(1));
    return out;
}

TensorSum coproduct(const WordSum& s) {
    TensorSum out;
    for (const auto& [w, c] : s.terms())
        for (size_t k = 0; k <= w.weight(); k++) out.add(w.prefix(k), w.suffix_from(k), c);
    return out;
}

WordSum antipode(const Word& w) {
    RationalFunction sign(w.weight() % 2 == 0 ? 1 : -1);
    return WordSum(w.reversed(), sign);
}

WordSum antipode(const WordSum& s) {
    WordSum out;
    for (const auto& [w, c] : s.terms())
        out.add(w.reversed(), w.weight() % 2 == 0 ? c : -c);
    return out;
}

namespace {

bool in_set(const Letter& l, const std::vector<Letter>& set) {
    for (const auto& x : set)
        if (x == l) return true;
    return false;
}

}  // namespace

// Split w = b_1..b_r u a_1..a_s into the maximal prefix over B, the maximal
// following suffix over A and the middle u, then sum the signed shuffles of
// the reversed outer pieces against the contiguous middle over all cuts
// (k, l) of the prefix and suffix.
WordSum reg(const Word& w, const std::vector<Letter>& A, const std::vector<Letter>& B) {
    size_t n = w.weight();
    size_t r = 0;
    while (r < n && in_set(w[r], B)) r++;
    size_t s = 0;
    while (s < n - r && in_set(w[n - 1 - s], A)) s++;

    if (r == 0 && s == 0) return WordSum(w);
    WordSum out;
    for (size_t k = 0; k <= r; k++) {
        std::vector<Letter> left(w.letters().begin(), w.letters().begin() + k);
        std::reverse(left.begin(), left.end());
        for (size_t l = 0; l <= s; l++) {
            Word mid(std::vector<Letter>(w.letters().begin() + k,
                                         w.letters().begin() + (n - s + l)));
            std::vector<Letter> right(w.letters().begin() + (n - s + l), w.letters().end());
            std::reverse(right.begin(), right.end());
            RationalFunction sign((k + s - l) % 2 == 0 ? 1 : -1);
            out += shuffle(shuffle(Word(left), mid), WordSum(Word(right))) * sign;
        }
    }
    return out;
}

WordSum reg(const WordSum& sum, const std::vector<Letter>& A, const std::vector<Letter>& B) {
    WordSum out;
    for (const auto& [w, c] : sum.terms()) out += reg(w, A, B) * c;
    return out;
}

WordSum reg_inf(const Word& w) {
    if (w.empty()) return WordSum::one();
    Letter minus_one{RationalFunction(-1)};
    WordSum out;
    for (size_t k = 1; k <= w.weight(); k++) {
        Word pad(std::vector<Letter>(k - 1, minus_one));
        WordSum tail = shuffle(pad, w.suffix_from(k));
        RationalFunction sign((k - 1) % 2 == 0 ? 1 : -1);
        for (const auto& [t, c] : tail.terms()) {
            out.add(t.with_front(w[k - 1]), c * sign);
            out.add(t.with_front(minus_one), -(c * sign));
        }
    }
    return out;
}

WordSum reg_inf(const WordSum& sum) {
    WordSum out;
    for (const auto& [w, c] : sum.terms()) out += reg_inf(w) * c;
    return out;
}

std::vector<WordSum> strip_trailing(const Word& w, const Letter& tau) {
    size_t run = 0;
    while (run < w.weight() && w[w.weight() - 1 - run] == tau) run++;
    std::vector<WordSum> out;
    out.reserve(run + 1);
    for (size_t j = 0; j <= run; j++)
        out.push_back(reg(w.prefix(w.weight() - j), {tau}, {}));
    return out;
}

std::vector<Word> lyndon_words(const std::vector<Letter>& alphabet, int max_weight) {
    std::vector<Letter> alpha = alphabet;
    std::sort(alpha.begin(), alpha.end(),
              [](const Letter& a, const Letter& b) { return a < b; });
    alpha.erase(std::unique(alpha.begin(), alpha.end()), alpha.end());

    std::vector<Word> out;
    if (alpha.empty() || max_weight < 1) return out;
    size_t q = alpha.size(), n = (size_t)max_weight;

    // Duval's generation: emit, extend periodically to full length, then
    // strip maximal letters and increment; lexicographic by construction.
    std::vector<size_t> x{0};
    while (!x.empty()) {
        std::vector<Letter> ls;
        ls.reserve(x.size());
        for (size_t i : x) ls.push_back(alpha[i]);
        out.push_back(Word(std::move(ls)));
        size_t period = x.size();
        while (x.size() < n) x.push_back(x[x.size() - period]);
        while (!x.empty() && x.back() == q - 1) x.pop_back();
        if (!x.empty()) x.back()++;
    }
    return out;
}

}  // namespace hlog

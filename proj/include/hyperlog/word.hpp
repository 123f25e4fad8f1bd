#pragma once
// Words over rational-function letters and the shuffle Hopf algebra built on
// them: shuffle product, deconcatenation coproduct, antipode, Lyndon words,
// and the shuffle regularizations used to strip divergent prefixes/suffixes.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperlog/ratfun.hpp"

namespace hlog {

// A letter is the point sigma of the form dz/(z - sigma); it may depend on
// later integration variables. The zero letter has value 0.
using Letter = RationalFunction;

// Finite sequence of letters; the empty word is the algebra unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
    Word(std::initializer_list<Letter> ls) : letters_(ls) {}

    const std::vector<Letter>& letters() const { return letters_; }
    size_t weight() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](size_t i) const { return letters_[i]; }
    const Letter& front() const { return letters_.front(); }
    const Letter& back() const { return letters_.back(); }

    // First k letters / all but the first k letters.
    Word prefix(size_t k) const;
    Word suffix_from(size_t k) const;
    Word reversed() const;
    Word concat(const Word& o) const;
    Word with_front(const Letter& l) const;
    Word with_back(const Letter& l) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    // Weight first, then letterwise canonical order; total.
    static int compare(const Word& a, const Word& b);
    bool operator<(const Word& o) const { return compare(*this, o) < 0; }

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Finite linear combination of words with rational-function coefficients.
// Zero coefficients are never stored.
class WordSum {
public:
    WordSum() = default;
    WordSum(const Word& w) { add(w, RationalFunction(1)); }
    WordSum(const Word& w, const RationalFunction& c) { add(w, c); }
    static WordSum one() { return WordSum(Word()); }

    const std::map<Word, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add(const Word& w, const RationalFunction& c);

    WordSum operator+(const WordSum& o) const;
    WordSum operator-(const WordSum& o) const;
    WordSum operator-() const;
    WordSum operator*(const RationalFunction& c) const;
    WordSum& operator+=(const WordSum& o);
    WordSum& operator-=(const WordSum& o);
    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const WordSum& o) const { return !(*this == o); }

    // Coefficient of the empty word (the counit).
    RationalFunction counit() const;
    std::string str() const;

private:
    std::map<Word, RationalFunction> terms_;
};

std::ostream& operator<<(std::ostream& os, const WordSum& s);

// Sum of two-sided tensors w_(1) (x) w_(2); equal pairs are merged and zero
// coefficients dropped.
class TensorSum {
public:
    using Key = std::pair<Word, Word>;

    TensorSum() = default;
    const std::map<Key, RationalFunction>& terms() const { return terms_; }
    void add(const Word& l, const Word& r, const RationalFunction& c);
    TensorSum operator+(const TensorSum& o) const;
    TensorSum& operator+=(const TensorSum& o);
    bool operator==(const TensorSum& o) const { return terms_ == o.terms_; }
    bool is_zero() const { return terms_.empty(); }

private:
    std::map<Key, RationalFunction> terms_;
};

// Shuffle product, bilinear in both arguments; shuffle(1, w) = w.
WordSum shuffle(const Word& v, const Word& w);
WordSum shuffle(const WordSum& v, const WordSum& w);

// Deconcatenation coproduct: sum of prefix (x) suffix over all cut points.
TensorSum coproduct(const Word& w);
TensorSum coproduct(const WordSum& w);

// Antipode: (-1)^|w| times the reversed word.
WordSum antipode(const Word& w);
WordSum antipode(const WordSum& w);

// Shuffle regularization onto words that neither begin with a letter of B
// nor end with a letter of A; a projection and a shuffle character.
WordSum reg(const Word& w, const std::vector<Letter>& A, const std::vector<Letter>& B);
WordSum reg(const WordSum& w, const std::vector<Letter>& A, const std::vector<Letter>& B);

// Regularization at infinity, mapping into words over the alphabet extended
// by the letter -1. Every word is reconstructed from its image by
//   w = sum_k [-1]^k sh reg_inf(suffix after k).
WordSum reg_inf(const Word& w);
WordSum reg_inf(const WordSum& w);

// Trailing-letter decomposition w = sum_j tau^j sh out[j], where out[j] =
// reg(prefix before the last j letters, {tau}, {}) carries no trailing tau.
// out has one entry beyond the trailing-tau run of w.
std::vector<WordSum> strip_trailing(const Word& w, const Letter& tau);

// All Lyndon words of weight <= max_weight over the ordered alphabet, in
// lexicographic order.
std::vector<Word> lyndon_words(const std::vector<Letter>& alphabet, int max_weight);

}  // namespace hlog

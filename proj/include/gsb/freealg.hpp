#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsb/error.hpp"

namespace gsb {

/// Exact rational coefficient. Always stored in canonical reduced form with
/// a positive denominator; a Poly never keeps zero coefficients.
using Coeff = boost::multiprecision::cpp_rational;

Coeff parse_coeff(std::string_view text);
std::string coeff_to_string(const Coeff& c);

/// A letter is an index into the presentation's alphabet.
using Letter = std::int32_t;

/// Ranked list of named generators. The listing order is the letter ranking
/// used by deg-lex. Formal inverses (x1 / x1-) are independent letters with
/// a symmetric inverse-pair annotation.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(Letter id) const;
    std::optional<Letter> find(std::string_view name) const;
    Letter require(std::string_view name) const;

    void link_inverse(Letter a, Letter b);
    std::optional<Letter> inverse_of(Letter a) const;
    const std::vector<std::pair<Letter, Letter>>& inverse_pairs() const { return pairs_; }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Letter> index_;
    std::vector<Letter> inverse_;
    std::vector<std::pair<Letter, Letter>> pairs_;
};

/// A word of the free monoid X*: a finite letter sequence. The empty word
/// is the monoid identity and prints as "1".
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    int degree() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word subword(int pos, int len) const;
    Word prefix(int len) const { return subword(0, len); }
    Word suffix(int len) const { return subword(degree() - len, len); }

    friend Word operator*(const Word& u, const Word& v);

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

/// Structural comparison (degree, then letter ids): a fixed total order used
/// for canonical container layout, independent of the active WordOrder.
struct WordKeyLess {
    bool operator()(const Word& u, const Word& v) const;
};

/// All start offsets at which `needle` occurs in `haystack`.
std::vector<int> subword_occurrences(const Word& haystack, const Word& needle);
bool contains_subword(const Word& haystack, const Word& needle);
bool is_suffix(const Word& haystack, const Word& needle);

/// Every word over letters {0..alphabet_size-1} of degree <= maxlen, listed
/// degree first and lexicographically by letter id inside a degree level.
std::vector<Word> words_up_to(int alphabet_size, int maxlen);

class WordOrder;

/// Element of k<X>: a finite mapping Word -> nonzero Coeff.
class Poly {
public:
    using TermMap = std::map<Word, Coeff, WordKeyLess>;

    Poly() = default;
    static Poly monomial(Word w, Coeff c = 1);
    static Poly constant(Coeff c) { return monomial(Word{}, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(const Word& w) const;

    /// Merge c into the coefficient of w, dropping the term when it cancels.
    void add_term(const Word& w, const Coeff& c);

    Poly& operator+=(const Poly& g);
    Poly& operator-=(const Poly& g);
    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator-(const Poly& f);
    friend Poly operator*(const Coeff& c, const Poly& f);
    friend Poly operator*(const Poly& f, const Poly& g);

    bool operator==(const Poly&) const = default;

private:
    TermMap terms_;
};

Poly left_mul(const Word& w, const Poly& f);
Poly right_mul(const Poly& f, const Word& w);

/// The ord-maximal word of supp(f) with its coefficient. Throws on zero f.
std::pair<Word, Coeff> leading_word(const Poly& f, const WordOrder& ord);

/// f divided by its leading coefficient. Throws on zero f.
Poly make_monic(const Poly& f, const WordOrder& ord);

std::string word_to_string(const Word& w, const Alphabet& alphabet);

/// Canonical print: terms descending under ord when given, otherwise
/// descending in the structural key order.
std::string poly_to_string(const Poly& f, const Alphabet& alphabet, const WordOrder* ord = nullptr);

}  // namespace gsb

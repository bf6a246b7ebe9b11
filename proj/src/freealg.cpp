#include "gsb/freealg.hpp"

#include <algorithm>
#include <sstream>

#include "gsb/orders.hpp"

namespace gsb {

Coeff parse_coeff(std::string_view text) {
    // [-]digits[/digits], exact.
    if (text.empty()) throw ParseError("empty rational literal");
    std::string s(text);
    auto slash = s.find('/');
    try {
        using boost::multiprecision::cpp_int;
        if (slash == std::string::npos) return Coeff(cpp_int(s));
        cpp_int num(s.substr(0, slash));
        cpp_int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Coeff(num, den);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

std::string coeff_to_string(const Coeff& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    inverse_.assign(names_.size(), -1);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        if (n.empty() || n == "1" || n == "0" || n == "+" || n == "=")
            throw ParseError("invalid letter name '" + n + "'");
        if (n.find_first_of(" \t") != std::string::npos || (std::isdigit(static_cast<unsigned char>(n[0])) != 0) ||
            n[0] == '-' || n[0] == '/')
            throw ParseError("invalid letter name '" + n + "'");
        if (!index_.emplace(n, static_cast<Letter>(i)).second)
            throw ParseError("duplicate letter name '" + n + "'");
    }
}

const std::string& Alphabet::name(Letter id) const {
    if (id < 0 || id >= size()) throw Error("letter id out of range");
    return names_[static_cast<std::size_t>(id)];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Letter Alphabet::require(std::string_view name) const {
    auto id = find(name);
    if (!id) throw ParseError("unknown letter '" + std::string(name) + "'");
    return *id;
}

void Alphabet::link_inverse(Letter a, Letter b) {
    if (a < 0 || a >= size() || b < 0 || b >= size()) throw Error("inverse pair out of range");
    inverse_[static_cast<std::size_t>(a)] = b;
    inverse_[static_cast<std::size_t>(b)] = a;
    pairs_.emplace_back(a, b);
}

std::optional<Letter> Alphabet::inverse_of(Letter a) const {
    if (a < 0 || a >= size()) return std::nullopt;
    Letter b = inverse_[static_cast<std::size_t>(a)];
    if (b < 0) return std::nullopt;
    return b;
}

Word Word::subword(int pos, int len) const {
    if (pos < 0 || len < 0 || pos + len > degree()) throw Error("subword range out of bounds");
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word operator*(const Word& u, const Word& v) {
    std::vector<Letter> out;
    out.reserve(u.letters_.size() + v.letters_.size());
    out.insert(out.end(), u.letters_.begin(), u.letters_.end());
    out.insert(out.end(), v.letters_.begin(), v.letters_.end());
    return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Letter l : w) h = (h ^ static_cast<std::size_t>(l + 1)) * 0x100000001b3ull;
    return h;
}

bool WordKeyLess::operator()(const Word& u, const Word& v) const {
    if (u.degree() != v.degree()) return u.degree() < v.degree();
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::vector<int> subword_occurrences(const Word& haystack, const Word& needle) {
    std::vector<int> out;
    const int n = haystack.degree(), m = needle.degree();
    if (m == 0 || m > n) return out;
    for (int i = 0; i + m <= n; ++i) {
        bool hit = true;
        for (int j = 0; j < m; ++j)
            if (haystack[i + j] != needle[j]) {
                hit = false;
                break;
            }
        if (hit) out.push_back(i);
    }
    return out;
}

bool contains_subword(const Word& haystack, const Word& needle) {
    const int n = haystack.degree(), m = needle.degree();
    if (m == 0) return true;
    if (m > n) return false;
    for (int i = 0; i + m <= n; ++i) {
        bool hit = true;
        for (int j = 0; j < m; ++j)
            if (haystack[i + j] != needle[j]) {
                hit = false;
                break;
            }
        if (hit) return true;
    }
    return false;
}

bool is_suffix(const Word& haystack, const Word& needle) {
    const int n = haystack.degree(), m = needle.degree();
    if (m > n) return false;
    for (int j = 0; j < m; ++j)
        if (haystack[n - m + j] != needle[j]) return false;
    return true;
}

std::vector<Word> words_up_to(int alphabet_size, int maxlen) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= maxlen; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Letter l = 0; l < alphabet_size; ++l) {
                std::vector<Letter> ext = out[i].letters();
                ext.push_back(l);
                out.emplace_back(std::move(ext));
            }
        level_begin = level_end;
    }
    return out;
}

Poly Poly::monomial(Word w, Coeff c) {
    Poly f;
    f.add_term(w, c);
    return f;
}

Coeff Poly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void Poly::add_term(const Word& w, const Coeff& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& g) {
    for (const auto& [w, c] : g.terms_) add_term(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& g) {
    for (const auto& [w, c] : g.terms_) add_term(w, -c);
    return *this;
}

Poly operator-(const Poly& f) {
    Poly out;
    for (const auto& [w, c] : f.terms()) out.terms_.emplace(w, -c);
    return out;
}

Poly operator*(const Coeff& c, const Poly& f) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [w, k] : f.terms()) out.terms_.emplace(w, c * k);
    return out;
}

Poly operator*(const Poly& f, const Poly& g) {
    Poly out;
    for (const auto& [u, a] : f.terms())
        for (const auto& [v, b] : g.terms()) out.add_term(u * v, a * b);
    return out;
}

Poly left_mul(const Word& w, const Poly& f) {
    Poly out;
    for (const auto& [u, c] : f.terms()) out.add_term(w * u, c);
    return out;
}

Poly right_mul(const Poly& f, const Word& w) {
    Poly out;
    for (const auto& [u, c] : f.terms()) out.add_term(u * w, c);
    return out;
}

std::pair<Word, Coeff> leading_word(const Poly& f, const WordOrder& ord) {
    if (f.is_zero()) throw Error("leading word of the zero polynomial");
    auto it = f.terms().begin();
    const Word* best = &it->first;
    const Coeff* bc = &it->second;
    for (++it; it != f.terms().end(); ++it)
        if (ord.compare(it->first, *best) == std::strong_ordering::greater) {
            best = &it->first;
            bc = &it->second;
        }
    return {*best, *bc};
}

Poly make_monic(const Poly& f, const WordOrder& ord) {
    auto [w, c] = leading_word(f, ord);
    if (c == 1) return f;
    return Coeff(1) / c * f;
}

std::string word_to_string(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string out;
    for (int i = 0; i < w.degree(); ++i) {
        if (i) out += ' ';
        out += alphabet.name(w[i]);
    }
    return out;
}

std::string poly_to_string(const Poly& f, const Alphabet& alphabet, const WordOrder* ord) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const Word, Coeff>*> terms;
    terms.reserve(static_cast<std::size_t>(f.term_count()));
    for (const auto& t : f.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        if (ord) return ord->compare(a->first, b->first) == std::strong_ordering::greater;
        return WordKeyLess{}(b->first, a->first);
    });
    std::ostringstream out;
    bool first = true;
    for (const auto* t : terms) {
        const Coeff& c = t->second;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        const Coeff mag = abs(c);
        if (t->first.empty())
            out << coeff_to_string(mag);
        else if (mag == 1)
            out << word_to_string(t->first, alphabet);
        else
            out << coeff_to_string(mag) << " " << word_to_string(t->first, alphabet);
        first = false;
    }
    return out.str();
}

}  // namespace gsb

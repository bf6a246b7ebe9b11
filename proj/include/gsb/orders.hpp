#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsb/freealg.hpp"
#include "gsb/groups.hpp"

namespace gsb {

/// Total comparison strategy on words. Instances are immutable and safe to
/// share between workers. claims_monomial reports whether the order promises
/// u < v  =>  w1 u w2 < w1 v w2; the hnn weight order deliberately does not.
class WordOrder {
public:
    virtual ~WordOrder() = default;

    virtual std::strong_ordering compare(const Word& u, const Word& v) const = 0;
    virtual bool claims_monomial() const = 0;
    virtual int alphabet_size() const = 0;
    virtual std::string describe() const = 0;

    bool less(const Word& u, const Word& v) const { return compare(u, v) == std::strong_ordering::less; }
    bool greater(const Word& u, const Word& v) const { return compare(u, v) == std::strong_ordering::greater; }
};

/// Degree first, then lexicographically by letter ranking.
std::strong_ordering deglex_compare(const Word& u, const Word& v, const std::vector<int>& rank);

class DegLexOrder final : public WordOrder {
public:
    /// Ranking = letter id order.
    explicit DegLexOrder(int alphabet_size);
    /// rank[letter] = position in the ranking (smaller = earlier).
    explicit DegLexOrder(std::vector<int> rank);

    std::strong_ordering compare(const Word& u, const Word& v) const override;
    bool claims_monomial() const override { return true; }
    int alphabet_size() const override { return static_cast<int>(rank_.size()); }
    std::string describe() const override { return "deglex"; }

private:
    std::vector<int> rank_;
};

/// Element comparison mode: plain listing order, or through the coset
/// decomposition relative to the subgroup A resp. B.
enum class GMode { Absolute, A, B };

/// Everything the hnn weight order needs to compare words: the base group,
/// both coset decompositions, and the letter <-> element dictionary.
struct HnnOrderContext {
    std::shared_ptr<const FiniteGroup> group;
    CosetData cosets_a;
    CosetData cosets_b;
    int alphabet_size = 0;
    Letter t = -1;
    Letter t_inv = -1;
    std::vector<int> letter_to_element;   // -1 for the stable letters
    std::vector<Letter> element_to_letter;  // identity -> -1

    bool is_stable(Letter l) const { return l == t || l == t_inv; }
    int element_of(Letter l) const;
};

/// Listing order / A-order / B-order on group elements; A and B compare the
/// pairs (representative position, remainder) lexicographically.
std::strong_ordering element_compare(int g, int h, GMode mode, const HnnOrderContext& ctx);

/// deg-lex / deg-lex_A / deg-lex_B on words over G1: length first, all but
/// the last position by listing order, the last position by the mode order.
std::strong_ordering segment_compare(std::span<const Letter> u, std::span<const Letter> v, GMode mode,
                                     const HnnOrderContext& ctx);
std::strong_ordering segment_compare(const Word& u, const Word& v, GMode mode, const HnnOrderContext& ctx);

/// wt(u) = (k, exponents, segments, tail): the unique split of u at its
/// stable letters.
struct WeightTuple {
    int k = 0;
    std::vector<int> exponents;   // +1 for t, -1 for t^-1
    std::vector<Word> segments;   // k words over G1, possibly empty
    Word tail;

    Word reassemble(const HnnOrderContext& ctx) const;
};

WeightTuple hnn_weight(const Word& u, const HnnOrderContext& ctx);

/// The order > of the weight tuples, read lexicographically: k, then the
/// exponent signs (t beats t^-1), then segment i in A- or B-mode as
/// exponent i directs, then the tails in absolute deg-lex.
std::strong_ordering hnn_compare(const Word& u, const Word& v, const HnnOrderContext& ctx);

class HnnWeightOrder final : public WordOrder {
public:
    explicit HnnWeightOrder(std::shared_ptr<const HnnOrderContext> ctx) : ctx_(std::move(ctx)) {}

    std::strong_ordering compare(const Word& u, const Word& v) const override { return hnn_compare(u, v, *ctx_); }
    bool claims_monomial() const override { return false; }
    int alphabet_size() const override { return ctx_->alphabet_size; }
    std::string describe() const override { return "hnn-weight"; }
    const HnnOrderContext& context() const { return *ctx_; }

private:
    std::shared_ptr<const HnnOrderContext> ctx_;
};

struct MonomialityWitness {
    Word u, v, left, right;  // u > v but left*u*right <= left*v*right
};

struct OrderDiagnostics {
    bool budget_exceeded = false;
    bool totality = false;
    bool antisymmetry = false;
    bool transitivity = false;
    std::optional<std::vector<Word>> axiom_witness;  // the offending pair/triple
    std::string axiom_failed;
    std::optional<MonomialityWitness> witness;  // nullopt: none up to the bound
    std::uint64_t operations = 0;

    bool axioms_pass() const { return totality && antisymmetry && transitivity; }
};

/// Exhaustively checks the strict-order axioms on all words of degree
/// <= maxlen and searches the same sample for a monomial-law violation.
OrderDiagnostics order_diagnostics(const WordOrder& ord, int maxlen, std::uint64_t budget = 200000000);

}  // namespace gsb

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsb/freealg.hpp"
#include "gsb/orders.hpp"

namespace gsb {

/// A monic rewrite rule: lead -> remainder, with poly = lead - remainder.
struct Rule {
    Poly poly;
    Word lead;
    Poly remainder;

    /// u - v with unit coefficients; rewriting such a rule into a single
    /// word always yields a single word again.
    bool is_semigroup() const;
};

/// Normalizes p to a monic rule under ord. Throws on zero or constant p.
Rule make_rule(Poly p, const WordOrder& ord);

struct Presentation {
    Alphabet alphabet;
    std::shared_ptr<const WordOrder> order;
    std::vector<Rule> rules;

    void add_relation(Poly p);  // drops polynomials that are identically zero
};

enum class CompositionKind { Intersection, Inclusion };

/// (f,g)_w. Intersection: w = lead_f b = a lead_g with a proper overlap,
/// value = f b - a g. Inclusion: w = lead_f = a lead_g b, value = f - a g b.
struct CompositionItem {
    Word w;
    CompositionKind kind;
    int left_rule = -1;
    int right_rule = -1;
    Word a, b;
    Poly value;
};

/// All compositions over ordered rule pairs (self-overlaps included),
/// sorted by w ascending under the active order, then rule indices.
std::vector<CompositionItem> find_compositions(const Presentation& p);

struct CertificateItem {
    Coeff alpha;
    Word a;
    int rule = -1;
    Word b;
};

/// Records (f,g)_w = sum alpha_i a_i s_i b_i with every a_i lead(s_i) b_i < w.
struct TrivialityCertificate {
    std::vector<CertificateItem> items;
};

/// sum alpha_i a_i poly(s_i) b_i, for re-expansion checks.
Poly expand_certificate(const TrivialityCertificate& cert, const Presentation& p);

enum class TrivialityStatus {
    Trivial,
    NonzeroResidue,
    NotBelowOverlap,  // reduced to zero, but some step rewrote a word >= w
    BudgetExceeded,
};

struct TrivialityResult {
    TrivialityStatus status = TrivialityStatus::BudgetExceeded;
    TrivialityCertificate certificate;
    Poly residue;
    std::optional<Word> offending;  // the a*lead*b that failed to stay below w
};

TrivialityResult check_triviality(const CompositionItem& item, const Presentation& p,
                                  std::uint64_t max_steps = 1000000);

/// Single ELW step: f - c a poly(g) b where c is the coefficient of
/// a lead(g) b in f. Throws when that word does not occur in f.
Poly elw_step(const Poly& f, const Rule& g, const Word& a, const Word& b);

/// Deterministic strategy: always eliminate the order-greatest reducible
/// word of the support, first matching rule, leftmost occurrence.
Poly normal_form(const Poly& f, const Presentation& p, std::uint64_t max_steps = 1000000);

/// Same fixpoint reached through uniformly random (word, rule, occurrence)
/// choices; agreement with normal_form witnesses confluence.
Poly normal_form_randomized(const Poly& f, const Presentation& p, std::uint64_t seed,
                            std::uint64_t max_steps = 1000000);

bool is_reduced_word(const Word& w, const Presentation& p);

struct InequalityWitness {
    int composition = -1;
    int item = -1;
    Word c, d;
};

struct CompositionReport {
    CompositionItem item;
    TrivialityResult result;
};

struct BasisReport {
    bool pass = false;
    int compositions = 0;
    int trivial = 0;
    std::vector<CompositionReport> failures;
    bool generalized_checked = false;  // the condition (B) context sampling ran
    int cd_bound = 0;
    std::optional<InequalityWitness> inequality_witness;
    bool budget_exceeded = false;
};

struct GeneralizedBounds {
    int cd_len = 2;
};

/// Runs check_triviality on every composition. For a non-monomial order and
/// given bounds, additionally samples contexts c,d up to cd_len and checks
/// c a_i lead(t_i) b_i d < c w d for every certificate item.
BasisReport is_gs_basis(const Presentation& p, std::optional<GeneralizedBounds> generalized = std::nullopt,
                        std::uint64_t max_steps = 1000000);

struct ConditionAWitness {
    int rule = -1;
    Word u;  // the non-leading support word that overtook the lead
    Word a, b;
};

struct ConditionAReport {
    bool pass = false;
    int bound = 0;
    std::optional<ConditionAWitness> witness;
};

/// Condition (A) of the generalized composition lemma, sampled: for every
/// rule s, every u in supp(s) \ {lead}, and all contexts of degree <= maxlen,
/// a u b < a lead b.
ConditionAReport check_condition_A(const Presentation& p, int maxlen);

struct CompletionBudget {
    int max_rules = 1000;
    int max_degree = 64;
    int max_iterations = 100000;
    std::uint64_t max_steps = 1000000;  // per normal-form call
};

struct CompletionResult {
    Presentation presentation;
    bool completed = false;
    int added = 0;
    std::string stop_reason;
};

/// Shirshov completion under a monomial order: adjoin normalized nonzero
/// composition residues, inter-reducing, until every composition is trivial
/// or the budget stops it. Throws std::invalid_argument on non-monomial
/// orders.
CompletionResult shirshov_complete(const Presentation& p, const CompletionBudget& budget = {});

struct RedEnumeration {
    std::vector<Word> words;
    bool finite = false;  // false means truncated at the length bound
    int max_explored = 0;
};

/// Red(S) breadth-first by degree. An empty degree level proves finiteness
/// (Red(S) is subword-closed). Without maxlen, enumeration must either
/// detect finiteness or exhaust max_words, which throws BudgetExceeded.
RedEnumeration red_enumerate(const Presentation& p, std::optional<int> maxlen = std::nullopt,
                             std::uint64_t max_words = 2000000);

struct CrosscheckReport {
    bool pass = false;
    std::string failure;
    std::optional<Word> witness;
    int words_checked = 0;
    int reduced_image_count = 0;  // distinct normal forms seen
};

/// Bounded-degree content of the composition lemma: reduction is idempotent,
/// lands in Red(S), and acts linearly on sampled combinations.
CrosscheckReport cd_crosscheck(const Presentation& p, int maxdeg, std::uint64_t seed = 12345,
                               std::uint64_t max_steps = 1000000);

}  // namespace gsb

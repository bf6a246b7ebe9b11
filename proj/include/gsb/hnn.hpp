#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gsb/groups.hpp"
#include "gsb/orders.hpp"
#include "gsb/rewrite.hpp"

namespace gsb {

/// A concrete HNN extension gp<G, t ; t^-1 a t = phi(a), a in A> of a finite
/// base group, carried as a semigroup presentation over G1 u {t, t^-1} with
/// the weight order attached.
struct HnnInstance {
    std::shared_ptr<const FiniteGroup> group;
    Subgroup subgroup_a;
    Subgroup subgroup_b;
    Isomorphism phi;
    CosetData cosets_a;
    CosetData cosets_b;
    std::shared_ptr<const HnnOrderContext> context;
    Presentation presentation;
    Letter t = -1;
    Letter t_inv = -1;

    /// Letter naming a non-identity element; the identity has no letter.
    Letter letter_of(int element) const;
    /// Single-letter word, or the empty word for the identity.
    Word word_of(int element) const;
};

/// Builds the relation families g g' = [g g'], g t = g_A t phi(a_g),
/// g t^-1 = g_B t^-1 phi^-1(b_g), t t^-1 = t^-1 t = 1, omitting the
/// degenerate instances (g = g_A resp. g = g_B), and attaches the weight
/// order. phi must verify as an isomorphism A -> B.
HnnInstance build_hnn(std::shared_ptr<const FiniteGroup> group, std::vector<int> a_members,
                      std::vector<int> b_members, std::vector<std::pair<int, int>> phi_pairs);

struct HnnVerifyReport {
    bool pass = false;
    ConditionAReport condition_a;
    BasisReport basis;
};

/// check_condition_A at ab_len plus is_gs_basis with context sampling at
/// cd_len, aggregated.
HnnVerifyReport verify_hnn_instance(const HnnInstance& inst, int ab_len, int cd_len,
                                    std::uint64_t max_steps = 1000000);

/// Rewrite-engine normal form of a word; the semigroup relations keep it a
/// single word.
Word hnn_normal_form(const HnnInstance& inst, const Word& u, std::uint64_t max_steps = 1000000);

/// Theorem-4 shape report for u = g_1 t^{e_1} ... g_n t^{e_n} g_{n+1}.
struct BrittonShapeReport {
    bool segments_single = false;  // every g_l is one element or absent
    std::vector<int> long_segments;
    bool rep_before_t = false;       // e_l = +1  =>  g_l is an A-representative
    bool rep_before_t_inv = false;   // e_l = -1  =>  g_l is a B-representative
    bool no_pinch = false;           // no t t^-1 or t^-1 t subword
    bool tail_arbitrary = true;      // condition (4) constrains nothing
    std::optional<int> witness_segment;

    bool all_pass() const { return segments_single && rep_before_t && rep_before_t_inv && no_pinch; }
};

BrittonShapeReport check_britton_shape(const HnnInstance& inst, const Word& u);

}  // namespace gsb

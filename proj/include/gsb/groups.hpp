#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/error.hpp"

namespace gsb {

/// Permutation of {0..n-1} in image form: p[i] is the image of point i.
/// Cycle notation in files and messages is 1-based.
using Permutation = std::vector<int>;

Permutation identity_perm(int n);
/// Apply p first, then q.
Permutation compose_perm(const Permutation& p, const Permutation& q);
Permutation inverse_perm(const Permutation& p);
bool is_even_perm(const Permutation& p);
std::string cycle_string(const Permutation& p);
/// Parses "(1,2)(3,4)" onto n points; "()" is the identity.
Permutation parse_cycles(std::string_view text, int n);

/// Closure of a generator set under composition, identity included,
/// elements sorted by image vector (identity sorts first).
std::vector<Permutation> permutation_closure(const std::vector<Permutation>& generators,
                                             std::size_t max_order = 1000000);

/// Finite group by multiplication table. Element 0 is the identity; the
/// listing order of elements is the absolute order used everywhere else.
class FiniteGroup {
public:
    /// Validates the table exhaustively: identity at index 0, closure by
    /// construction, two-sided inverses, associativity (witnessed failure).
    static std::shared_ptr<const FiniteGroup> from_table(std::vector<std::string> names,
                                                         std::vector<std::vector<int>> table);

    /// Closure of permutation generators; associativity holds by
    /// construction, so only identity/inverse bookkeeping is validated.
    /// Element names are "e" and cycle strings.
    static std::shared_ptr<const FiniteGroup> from_permutations(const std::vector<Permutation>& generators,
                                                                std::size_t max_order = 10000);

    int size() const { return static_cast<int>(names_.size()); }
    int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * names_.size() + static_cast<std::size_t>(h)]; }
    int inv(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
    const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
    std::optional<int> find(std::string_view name) const;
    int require(std::string_view name) const;

    /// Permutation realization when built from generators, empty otherwise.
    const std::vector<Permutation>& realization() const { return realization_; }

private:
    FiniteGroup() = default;
    void validate_table() const;
    void fill_inverses();

    std::vector<std::string> names_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<Permutation> realization_;
};

/// Validated subgroup: closed under product and inverse, contains identity.
class Subgroup {
public:
    Subgroup(std::shared_ptr<const FiniteGroup> group, std::vector<int> members);

    const FiniteGroup& group() const { return *group_; }
    std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int g) const { return g >= 0 && g < static_cast<int>(mask_.size()) && mask_[static_cast<std::size_t>(g)]; }

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<int> members_;
    std::vector<char> mask_;
};

/// A mapping A -> B between subgroups of one group. The constructor checks
/// shape (total, values inside B); verify_isomorphism checks the rest.
class Isomorphism {
public:
    Isomorphism(Subgroup domain, Subgroup codomain, std::vector<std::pair<int, int>> mapping);

    const Subgroup& domain() const { return domain_; }
    const Subgroup& codomain() const { return codomain_; }
    int apply(int a) const;
    /// Requires the map to be bijective; throws otherwise.
    int apply_inverse(int b) const;

private:
    Subgroup domain_;
    Subgroup codomain_;
    std::vector<int> forward_;   // element -> image, -1 outside A
    std::vector<int> backward_;  // element -> preimage, -1 when not bijective there
};

struct IsomorphismReport {
    bool pass = false;
    bool total = false;
    bool injective = false;
    bool surjective = false;
    bool homomorphism = false;
    bool identity_fixed = false;
    std::optional<std::pair<int, int>> witness;  // offending pair (x, y) for the hom check
    std::string detail;
};

/// Exhaustive bijectivity + homomorphism check with a witness on failure.
IsomorphismReport verify_isomorphism(const Isomorphism& phi);

/// Left cosets gH with absolute-minimal representatives and the
/// decomposition g = rep(g) * remainder(g), remainder in H.
struct CosetData {
    Subgroup subgroup;
    std::vector<int> representatives;  // ascending; identity first
    std::vector<int> rep_of;           // element -> representative element
    std::vector<int> rep_pos;          // element -> index of rep_of[g] in representatives
    std::vector<int> remainder;        // element -> h with g = rep_of[g] * h

    bool is_representative(int g) const { return rep_of[static_cast<std::size_t>(g)] == g; }
};

CosetData left_cosets(const std::shared_ptr<const FiniteGroup>& group, const Subgroup& subgroup);

}  // namespace gsb

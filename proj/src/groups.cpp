#include "gsb/groups.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gsb {

Permutation identity_perm(int n) {
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Permutation compose_perm(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw Error("permutation size mismatch");
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
    return r;
}

Permutation inverse_perm(const Permutation& p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

bool is_even_perm(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::string cycle_string(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
            seen[i] = 1;
            continue;
        }
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            if (!first) out += ',';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, int n) {
    Permutation p = identity_perm(n);
    std::size_t i = 0;
    if (text == "()") return p;
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
        ++i;
        std::vector<int> cycle;
        std::string num;
        for (; i < text.size() && text[i] != ')'; ++i) {
            if (text[i] == ',') {
                if (num.empty()) throw ParseError("empty entry in cycle '" + std::string(text) + "'");
                cycle.push_back(std::stoi(num));
                num.clear();
            } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                num += text[i];
            } else {
                throw ParseError("bad character in cycle notation '" + std::string(text) + "'");
            }
        }
        if (i >= text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
        ++i;  // ')'
        if (!num.empty()) cycle.push_back(std::stoi(num));
        if (cycle.empty()) continue;
        for (int v : cycle)
            if (v < 1 || v > n) throw ParseError("cycle point " + std::to_string(v) + " outside 1.." + std::to_string(n));
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) throw ParseError("repeated point in cycle '" + std::string(text) + "'");
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j] - 1;
            int to = cycle[(j + 1) % cycle.size()] - 1;
            if (p[static_cast<std::size_t>(from)] != from)
                throw ParseError("point " + std::to_string(from + 1) + " appears in two cycles");
            p[static_cast<std::size_t>(from)] = to;
        }
    }
    return p;
}

std::vector<Permutation> permutation_closure(const std::vector<Permutation>& generators, std::size_t max_order) {
    if (generators.empty()) return {};
    const std::size_t n = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != n) throw Error("generators act on different point counts");
        Permutation sorted = g;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != identity_perm(static_cast<int>(n))) throw Error("not a permutation: " + cycle_string(g));
    }
    std::set<Permutation> seen;
    std::vector<Permutation> frontier;
    seen.insert(identity_perm(static_cast<int>(n)));
    frontier.push_back(identity_perm(static_cast<int>(n)));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : generators) {
                Permutation q = compose_perm(p, g);
                if (seen.insert(q).second) {
                    if (seen.size() > max_order)
                        throw BudgetExceeded("permutation closure exceeds " + std::to_string(max_order) + " elements");
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};  // std::set of vectors: lexicographic, identity first
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

int FiniteGroup::require(std::string_view name) const {
    auto i = find(name);
    if (!i) throw ParseError("unknown group element '" + std::string(name) + "'");
    return *i;
}

void FiniteGroup::validate_table() const {
    const int m = size();
    for (int g = 0; g < m; ++g) {
        if (mul(0, g) != g)
            throw GroupValidationError("identity", {0, g, -1},
                                       "element 0 is not a left identity at '" + name(g) + "'");
        if (mul(g, 0) != g)
            throw GroupValidationError("identity", {g, 0, -1},
                                       "element 0 is not a right identity at '" + name(g) + "'");
    }
    for (int g = 0; g < m; ++g) {
        bool has_inv = false;
        for (int h = 0; h < m; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                has_inv = true;
                break;
            }
        if (!has_inv)
            throw GroupValidationError("inverse", {g, -1, -1}, "no two-sided inverse for '" + name(g) + "'");
    }
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h)
            for (int k = 0; k < m; ++k)
                if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                    throw GroupValidationError(
                        "associativity", {g, h, k},
                        "(" + name(g) + "*" + name(h) + ")*" + name(k) + " != " + name(g) + "*(" + name(h) + "*" + name(k) + ")");
}

void FiniteGroup::fill_inverses() {
    const int m = size();
    inverse_.assign(static_cast<std::size_t>(m), -1);
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h)
            if (mul(g, h) == 0 && mul(h, g) == 0) {
                inverse_[static_cast<std::size_t>(g)] = h;
                break;
            }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(std::vector<std::string> names,
                                                           std::vector<std::vector<int>> table) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    const std::size_t m = names.size();
    if (m == 0) throw ParseError("empty element list");
    if (table.size() != m) throw ParseError("table must have one row per element");
    g->names_ = std::move(names);
    g->table_.reserve(m * m);
    for (const auto& row : table) {
        if (row.size() != m) throw ParseError("table row length mismatch");
        for (int v : row) {
            if (v < 0 || v >= static_cast<int>(m)) throw ParseError("table entry out of range");
            g->table_.push_back(v);
        }
    }
    g->validate_table();
    g->fill_inverses();
    return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                                                  std::size_t max_order) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    if (generators.empty()) {
        g->names_ = {"e"};
        g->table_ = {0};
        g->inverse_ = {0};
        g->realization_ = {Permutation{}};
        return g;
    }
    auto elements = permutation_closure(generators, max_order);
    const std::size_t m = elements.size();
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < m; ++i) index.emplace(elements[i], static_cast<int>(i));
    g->names_.reserve(m);
    for (std::size_t i = 0; i < m; ++i) g->names_.push_back(i == 0 ? "e" : cycle_string(elements[i]));
    g->table_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            g->table_[i * m + j] = index.at(compose_perm(elements[i], elements[j]));
    g->realization_ = std::move(elements);
    g->fill_inverses();
    return g;
}

Subgroup::Subgroup(std::shared_ptr<const FiniteGroup> group, std::vector<int> members)
    : group_(std::move(group)), members_(std::move(members)) {
    if (!group_) throw Error("subgroup without a parent group");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(static_cast<std::size_t>(group_->size()), 0);
    for (int g : members_) {
        if (g < 0 || g >= group_->size()) throw Error("subgroup member out of range");
        mask_[static_cast<std::size_t>(g)] = 1;
    }
    if (members_.empty() || members_[0] != 0) throw Error("subgroup must contain the identity");
    for (int a : members_) {
        if (!contains(group_->inv(a)))
            throw Error("subgroup not closed under inverse at '" + group_->name(a) + "'");
        for (int b : members_)
            if (!contains(group_->mul(a, b)))
                throw Error("subgroup not closed under product at '" + group_->name(a) + "','" + group_->name(b) + "'");
    }
}

Isomorphism::Isomorphism(Subgroup domain, Subgroup codomain, std::vector<std::pair<int, int>> mapping)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    const int m = domain_.group().size();
    forward_.assign(static_cast<std::size_t>(m), -1);
    backward_.assign(static_cast<std::size_t>(m), -1);
    for (auto [a, b] : mapping) {
        if (!domain_.contains(a)) throw Error("mapping key '" + domain_.group().name(a) + "' outside the domain subgroup");
        if (!codomain_.contains(b)) throw Error("mapping value '" + codomain_.group().name(b) + "' outside the codomain subgroup");
        if (forward_[static_cast<std::size_t>(a)] != -1) throw Error("mapping defined twice at '" + domain_.group().name(a) + "'");
        forward_[static_cast<std::size_t>(a)] = b;
        if (backward_[static_cast<std::size_t>(b)] == -1) backward_[static_cast<std::size_t>(b)] = a;
    }
    for (int a : domain_.members())
        if (forward_[static_cast<std::size_t>(a)] == -1)
            throw Error("mapping not defined at '" + domain_.group().name(a) + "'");
}

int Isomorphism::apply(int a) const {
    if (a < 0 || a >= static_cast<int>(forward_.size()) || forward_[static_cast<std::size_t>(a)] == -1)
        throw Error("isomorphism applied outside its domain");
    return forward_[static_cast<std::size_t>(a)];
}

int Isomorphism::apply_inverse(int b) const {
    if (b < 0 || b >= static_cast<int>(backward_.size()) || backward_[static_cast<std::size_t>(b)] == -1)
        throw Error("inverse isomorphism applied outside its image");
    return backward_[static_cast<std::size_t>(b)];
}

IsomorphismReport verify_isomorphism(const Isomorphism& phi) {
    IsomorphismReport r;
    const auto& A = phi.domain();
    const auto& B = phi.codomain();
    r.total = true;  // the constructor enforces totality
    if (A.size() != B.size()) {
        r.detail = "domain and codomain sizes differ";
        return r;
    }
    std::set<int> image;
    for (int a : A.members()) image.insert(phi.apply(a));
    r.injective = static_cast<int>(image.size()) == A.size();
    r.surjective = r.injective;  // equal finite sizes
    if (!r.injective) {
        r.detail = "mapping is not injective";
        return r;
    }
    r.identity_fixed = phi.apply(0) == 0;
    if (!r.identity_fixed) {
        r.detail = "identity is not fixed";
        return r;
    }
    r.homomorphism = true;
    const FiniteGroup& G = A.group();
    for (int x : A.members()) {
        for (int y : A.members()) {
            if (phi.apply(G.mul(x, y)) != G.mul(phi.apply(x), phi.apply(y))) {
                r.homomorphism = false;
                r.witness = {x, y};
                r.detail = "phi(" + G.name(x) + "*" + G.name(y) + ") != phi(" + G.name(x) + ")*phi(" + G.name(y) + ")";
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

CosetData left_cosets(const std::shared_ptr<const FiniteGroup>& group, const Subgroup& subgroup) {
    if (&subgroup.group() != group.get()) throw Error("subgroup belongs to a different group");
    const int m = group->size();
    CosetData data{subgroup, {}, std::vector<int>(static_cast<std::size_t>(m), -1),
                   std::vector<int>(static_cast<std::size_t>(m), -1), std::vector<int>(static_cast<std::size_t>(m), -1)};
    for (int g = 0; g < m; ++g) {
        if (data.rep_of[static_cast<std::size_t>(g)] != -1) continue;
        // ascending scan: g is the minimal element of its (not yet seen) coset
        int pos = static_cast<int>(data.representatives.size());
        data.representatives.push_back(g);
        for (int h : subgroup.members()) {
            int x = group->mul(g, h);
            data.rep_of[static_cast<std::size_t>(x)] = g;
            data.rep_pos[static_cast<std::size_t>(x)] = pos;
            data.remainder[static_cast<std::size_t>(x)] = h;
        }
    }
    return data;
}

}  // namespace gsb

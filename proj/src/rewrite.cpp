#include "gsb/rewrite.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gsb {

bool Rule::is_semigroup() const {
    if (remainder.is_zero()) return false;
    return remainder.term_count() == 1 && remainder.terms().begin()->second == 1;
}

Rule make_rule(Poly p, const WordOrder& ord) {
    if (p.is_zero()) throw Error("cannot make a rule out of the zero polynomial");
    Poly monic = make_monic(p, ord);
    auto [lead, c] = leading_word(monic, ord);
    if (lead.empty()) throw Error("constant relation: the ideal contains 1");
    Poly remainder = Poly::monomial(lead) - monic;
    return Rule{std::move(monic), std::move(lead), std::move(remainder)};
}

void Presentation::add_relation(Poly p) {
    if (p.is_zero()) return;  // degenerate relation, both sides coincide
    rules.push_back(make_rule(std::move(p), *order));
}

namespace {

struct Occurrence {
    int rule = -1;
    int pos = -1;
};

// first rule in index order with an occurrence inside w, leftmost position
Occurrence first_occurrence(const Word& w, const std::vector<Rule>& rules, int skip_rule) {
    Occurrence best;
    for (int r = 0; r < static_cast<int>(rules.size()); ++r) {
        if (r == skip_rule) continue;
        const Word& lead = rules[static_cast<std::size_t>(r)].lead;
        const int n = w.degree(), m = lead.degree();
        if (m > n) continue;
        for (int i = 0; i + m <= n; ++i) {
            bool hit = true;
            for (int j = 0; j < m; ++j)
                if (w[i + j] != lead[j]) {
                    hit = false;
                    break;
                }
            if (hit) return {r, i};
        }
    }
    return best;
}

struct StepRecord {
    Coeff alpha;
    Word a;
    int rule;
    Word b;
    Word rewritten;
};

// f -= c * a * poly * b, termwise
void subtract_conjugate(Poly& f, const Coeff& c, const Word& a, const Poly& poly, const Word& b) {
    for (const auto& [u, k] : poly.terms()) f.add_term(a * u * b, -c * k);
}

Poly reduce_full(Poly f, const std::vector<Rule>& rules, const WordOrder& ord, std::uint64_t max_steps,
                 std::vector<StepRecord>* trace, int skip_rule = -1) {
    std::uint64_t steps = 0;
    for (;;) {
        const Word* target = nullptr;
        Occurrence occ;
        for (const auto& [w, c] : f.terms()) {
            Occurrence o = first_occurrence(w, rules, skip_rule);
            if (o.rule < 0) continue;
            if (!target || ord.greater(w, *target)) {
                target = &w;
                occ = o;
            }
        }
        if (!target) return f;
        if (++steps > max_steps)
            throw BudgetExceeded("normal form exceeded " + std::to_string(max_steps) +
                                 " elimination steps (order unverified or rules non-terminating?)");
        const Rule& rule = rules[static_cast<std::size_t>(occ.rule)];
        Word w = *target;  // copy: the term is about to vanish
        Word a = w.prefix(occ.pos);
        Word b = w.suffix(w.degree() - occ.pos - rule.lead.degree());
        Coeff c = f.coeff(w);
        subtract_conjugate(f, c, a, rule.poly, b);
        if (trace) trace->push_back({c, std::move(a), occ.rule, std::move(b), std::move(w)});
    }
}

}  // namespace

Poly elw_step(const Poly& f, const Rule& g, const Word& a, const Word& b) {
    Word target = a * g.lead * b;
    Coeff c = f.coeff(target);
    if (c == 0) throw Error("occurrence does not match: no term " + std::to_string(target.degree()) + "-word to eliminate");
    Poly out = f;
    subtract_conjugate(out, c, a, g.poly, b);
    return out;
}

Poly normal_form(const Poly& f, const Presentation& p, std::uint64_t max_steps) {
    return reduce_full(f, p.rules, *p.order, max_steps, nullptr);
}

Poly normal_form_randomized(const Poly& f, const Presentation& p, std::uint64_t seed, std::uint64_t max_steps) {
    std::mt19937_64 rng(seed);
    Poly cur = f;
    std::uint64_t steps = 0;
    for (;;) {
        struct Cand {
            Word w;
            int rule;
            int pos;
        };
        std::vector<Cand> cands;
        for (const auto& [w, c] : cur.terms())
            for (int r = 0; r < static_cast<int>(p.rules.size()); ++r) {
                for (int pos : subword_occurrences(w, p.rules[static_cast<std::size_t>(r)].lead))
                    cands.push_back({w, r, pos});
            }
        if (cands.empty()) return cur;
        if (++steps > max_steps) throw BudgetExceeded("randomized normal form exceeded the step budget");
        const Cand& pick = cands[rng() % cands.size()];
        const Rule& rule = p.rules[static_cast<std::size_t>(pick.rule)];
        Word a = pick.w.prefix(pick.pos);
        Word b = pick.w.suffix(pick.w.degree() - pick.pos - rule.lead.degree());
        Coeff c = cur.coeff(pick.w);
        subtract_conjugate(cur, c, a, rule.poly, b);
    }
}

bool is_reduced_word(const Word& w, const Presentation& p) {
    for (const auto& rule : p.rules)
        if (contains_subword(w, rule.lead)) return false;
    return true;
}

std::vector<CompositionItem> find_compositions(const Presentation& p) {
    std::vector<CompositionItem> out;
    const auto& rules = p.rules;
    const int n = static_cast<int>(rules.size());
    for (int i = 0; i < n; ++i) {
        const Word& lf = rules[static_cast<std::size_t>(i)].lead;
        for (int j = 0; j < n; ++j) {
            const Word& lg = rules[static_cast<std::size_t>(j)].lead;
            // intersection: a proper overlap, both sides sticking out
            for (int k = 1; k < std::min(lf.degree(), lg.degree()); ++k) {
                bool match = true;
                for (int q = 0; q < k; ++q)
                    if (lf[lf.degree() - k + q] != lg[q]) {
                        match = false;
                        break;
                    }
                if (!match) continue;
                Word a = lf.prefix(lf.degree() - k);
                Word b = lg.suffix(lg.degree() - k);
                Word w = lf * b;
                Poly value = right_mul(rules[static_cast<std::size_t>(i)].poly, b) -
                             left_mul(a, rules[static_cast<std::size_t>(j)].poly);
                out.push_back({std::move(w), CompositionKind::Intersection, i, j, std::move(a), std::move(b),
                               std::move(value)});
            }
            // inclusion: lg inside lf; the identity self-occurrence is vacuous
            if (lg.degree() <= lf.degree()) {
                for (int pos : subword_occurrences(lf, lg)) {
                    if (i == j && lf.degree() == lg.degree()) continue;
                    Word a = lf.prefix(pos);
                    Word b = lf.suffix(lf.degree() - pos - lg.degree());
                    Poly value = rules[static_cast<std::size_t>(i)].poly -
                                 left_mul(a, right_mul(rules[static_cast<std::size_t>(j)].poly, b));
                    out.push_back({lf, CompositionKind::Inclusion, i, j, std::move(a), std::move(b), std::move(value)});
                }
            }
        }
    }
    const WordOrder& ord = *p.order;
    std::stable_sort(out.begin(), out.end(), [&](const CompositionItem& x, const CompositionItem& y) {
        auto c = ord.compare(x.w, y.w);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (x.left_rule != y.left_rule) return x.left_rule < y.left_rule;
        if (x.right_rule != y.right_rule) return x.right_rule < y.right_rule;
        if (x.kind != y.kind) return x.kind == CompositionKind::Intersection;
        return x.a.degree() < y.a.degree();
    });
    return out;
}

Poly expand_certificate(const TrivialityCertificate& cert, const Presentation& p) {
    Poly sum;
    for (const auto& item : cert.items) {
        for (const auto& [u, k] : p.rules[static_cast<std::size_t>(item.rule)].poly.terms())
            sum.add_term(item.a * u * item.b, item.alpha * k);
    }
    return sum;
}

TrivialityResult check_triviality(const CompositionItem& item, const Presentation& p, std::uint64_t max_steps) {
    TrivialityResult res;
    std::vector<StepRecord> trace;
    Poly residue;
    try {
        residue = reduce_full(item.value, p.rules, *p.order, max_steps, &trace);
    } catch (const BudgetExceeded&) {
        res.status = TrivialityStatus::BudgetExceeded;
        return res;
    }
    for (const auto& step : trace) {
        res.certificate.items.push_back({step.alpha, step.a, step.rule, step.b});
        if (!res.offending && p.order->compare(step.rewritten, item.w) != std::strong_ordering::less)
            res.offending = step.rewritten;
    }
    res.residue = std::move(residue);
    if (!res.residue.is_zero())
        res.status = TrivialityStatus::NonzeroResidue;
    else if (res.offending)
        res.status = TrivialityStatus::NotBelowOverlap;
    else
        res.status = TrivialityStatus::Trivial;
    return res;
}

BasisReport is_gs_basis(const Presentation& p, std::optional<GeneralizedBounds> generalized, std::uint64_t max_steps) {
    BasisReport report;
    auto comps = find_compositions(p);
    report.compositions = static_cast<int>(comps.size());
    std::vector<TrivialityResult> results;
    results.reserve(comps.size());
    for (const auto& item : comps) {
        TrivialityResult res = check_triviality(item, p, max_steps);
        if (res.status == TrivialityStatus::Trivial) {
            ++report.trivial;
        } else {
            if (res.status == TrivialityStatus::BudgetExceeded) report.budget_exceeded = true;
            report.failures.push_back({item, res});
        }
        results.push_back(std::move(res));
    }
    report.pass = report.trivial == report.compositions;

    if (generalized && !p.order->claims_monomial() && report.pass) {
        report.generalized_checked = true;
        report.cd_bound = generalized->cd_len;
        const auto contexts = words_up_to(p.alphabet.size(), generalized->cd_len);
        for (std::size_t ci = 0; ci < comps.size() && !report.inequality_witness; ++ci) {
            const auto& cert = results[ci].certificate;
            for (std::size_t ii = 0; ii < cert.items.size() && !report.inequality_witness; ++ii) {
                const auto& it = cert.items[ii];
                Word base = it.a * p.rules[static_cast<std::size_t>(it.rule)].lead * it.b;
                for (const Word& c : contexts) {
                    bool stop = false;
                    for (const Word& d : contexts) {
                        if (p.order->compare(c * base * d, c * comps[ci].w * d) != std::strong_ordering::less) {
                            report.inequality_witness =
                                InequalityWitness{static_cast<int>(ci), static_cast<int>(ii), c, d};
                            report.pass = false;
                            stop = true;
                            break;
                        }
                    }
                    if (stop) break;
                }
            }
        }
    }
    return report;
}

ConditionAReport check_condition_A(const Presentation& p, int maxlen) {
    ConditionAReport report;
    report.bound = maxlen;
    const auto contexts = words_up_to(p.alphabet.size(), maxlen);
    for (int r = 0; r < static_cast<int>(p.rules.size()); ++r) {
        const Rule& rule = p.rules[static_cast<std::size_t>(r)];
        for (const auto& [u, c] : rule.poly.terms()) {
            if (u == rule.lead) continue;
            for (const Word& a : contexts)
                for (const Word& b : contexts) {
                    if (p.order->compare(a * u * b, a * rule.lead * b) != std::strong_ordering::less) {
                        report.witness = ConditionAWitness{r, u, a, b};
                        return report;
                    }
                }
        }
    }
    report.pass = true;
    return report;
}

namespace {

void inter_reduce(Presentation& p, std::uint64_t max_steps) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < p.rules.size(); ++i) {
            Poly q = reduce_full(p.rules[i].poly, p.rules, *p.order, max_steps, nullptr, static_cast<int>(i));
            if (q == p.rules[i].poly) continue;
            changed = true;
            if (q.is_zero()) {
                p.rules.erase(p.rules.begin() + static_cast<std::ptrdiff_t>(i));
                --i;
            } else {
                p.rules[i] = make_rule(std::move(q), *p.order);
            }
        }
    }
}

void sort_rules(Presentation& p) {
    std::stable_sort(p.rules.begin(), p.rules.end(), [&](const Rule& x, const Rule& y) {
        auto c = p.order->compare(x.lead, y.lead);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return WordKeyLess{}(x.lead, y.lead);
    });
}

}  // namespace

CompletionResult shirshov_complete(const Presentation& p, const CompletionBudget& budget) {
    if (!p.order->claims_monomial())
        throw std::invalid_argument("completion requires a monomial order; '" + p.order->describe() +
                                    "' does not claim monomiality");
    CompletionResult result;
    result.presentation = p;
    Presentation& cur = result.presentation;
    inter_reduce(cur, budget.max_steps);

    for (int iter = 0;; ++iter) {
        if (iter >= budget.max_iterations) {
            result.stop_reason = "iteration budget exhausted";
            return result;
        }
        auto comps = find_compositions(cur);
        bool added_rule = false;
        for (const auto& item : comps) {
            Poly residue = reduce_full(item.value, cur.rules, *cur.order, budget.max_steps, nullptr);
            if (residue.is_zero()) continue;
            Rule next = make_rule(std::move(residue), *cur.order);
            if (next.lead.degree() > budget.max_degree) {
                result.stop_reason = "degree budget exceeded by a residue of degree " +
                                     std::to_string(next.lead.degree());
                sort_rules(cur);
                return result;
            }
            cur.rules.push_back(std::move(next));
            ++result.added;
            if (static_cast<int>(cur.rules.size()) > budget.max_rules) {
                result.stop_reason = "rule budget exceeded";
                sort_rules(cur);
                return result;
            }
            inter_reduce(cur, budget.max_steps);
            added_rule = true;
            break;  // rule set changed: recompute the compositions
        }
        if (!added_rule) break;
    }
    sort_rules(cur);
    result.completed = true;
    return result;
}

RedEnumeration red_enumerate(const Presentation& p, std::optional<int> maxlen, std::uint64_t max_words) {
    RedEnumeration out;
    std::vector<Word> level{Word{}};
    out.words.push_back(Word{});
    for (int len = 1;; ++len) {
        if (maxlen && len > *maxlen) return out;  // truncated: finiteness unknown
        std::vector<Word> next;
        for (const Word& u : level)
            for (Letter l = 0; l < p.alphabet.size(); ++l) {
                std::vector<Letter> ext = u.letters();
                ext.push_back(l);
                Word w(std::move(ext));
                // u is reduced, so a new occurrence can only end at the last letter
                bool reduced = true;
                for (const auto& rule : p.rules)
                    if (is_suffix(w, rule.lead)) {
                        reduced = false;
                        break;
                    }
                if (reduced) next.push_back(std::move(w));
            }
        if (next.empty()) {
            out.finite = true;
            out.max_explored = len;
            return out;
        }
        if (out.words.size() + next.size() > max_words)
            throw BudgetExceeded("Red(S) enumeration exceeded " + std::to_string(max_words) +
                                 " words without " + (maxlen ? "reaching the length bound" : "detecting finiteness"));
        out.words.insert(out.words.end(), next.begin(), next.end());
        out.max_explored = len;
        level = std::move(next);
    }
}

CrosscheckReport cd_crosscheck(const Presentation& p, int maxdeg, std::uint64_t seed, std::uint64_t max_steps) {
    CrosscheckReport report;
    const auto words = words_up_to(p.alphabet.size(), maxdeg);
    report.words_checked = static_cast<int>(words.size());
    std::unordered_set<std::string> images;
    std::vector<Poly> reduced;
    reduced.reserve(words.size());
    for (const Word& u : words) {
        Poly v = normal_form(Poly::monomial(u), p, max_steps);
        for (const auto& [w, c] : v.terms())
            if (!is_reduced_word(w, p)) {
                report.failure = "normal form has support outside Red(S)";
                report.witness = u;
                return report;
            }
        if (normal_form(v, p, max_steps) != v) {
            report.failure = "normal form is not idempotent";
            report.witness = u;
            return report;
        }
        images.insert(poly_to_string(v, p.alphabet));
        reduced.push_back(std::move(v));
    }
    report.reduced_image_count = static_cast<int>(images.size());

    std::mt19937_64 rng(seed);
    const Coeff pool[] = {Coeff(1), Coeff(2), Coeff(-1), Coeff(1, 2), Coeff(-3, 5)};
    for (int s = 0; s < 200; ++s) {
        std::size_t i = rng() % words.size(), j = rng() % words.size();
        const Coeff& alpha = pool[rng() % 5];
        const Coeff& beta = pool[rng() % 5];
        Poly f = alpha * Poly::monomial(words[i]) + beta * Poly::monomial(words[j]);
        Poly direct = normal_form(f, p, max_steps);
        Poly split = alpha * reduced[i] + beta * reduced[j];
        if (direct != split) {
            report.failure = "normal form is not linear on sampled combinations";
            report.witness = words[i];
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace gsb

#include "gsb/orders.hpp"

#include <algorithm>

namespace gsb {

std::strong_ordering deglex_compare(const Word& u, const Word& v, const std::vector<int>& rank) {
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    for (int i = 0; i < u.degree(); ++i) {
        Letter a = u[i], b = v[i];
        if (a < 0 || a >= static_cast<int>(rank.size()) || b < 0 || b >= static_cast<int>(rank.size()))
            throw Error("letter outside the ranked alphabet");
        if (rank[static_cast<std::size_t>(a)] != rank[static_cast<std::size_t>(b)])
            return rank[static_cast<std::size_t>(a)] <=> rank[static_cast<std::size_t>(b)];
    }
    return std::strong_ordering::equal;
}

DegLexOrder::DegLexOrder(int alphabet_size) {
    rank_.resize(static_cast<std::size_t>(alphabet_size));
    for (int i = 0; i < alphabet_size; ++i) rank_[static_cast<std::size_t>(i)] = i;
}

DegLexOrder::DegLexOrder(std::vector<int> rank) : rank_(std::move(rank)) {}

std::strong_ordering DegLexOrder::compare(const Word& u, const Word& v) const {
    return deglex_compare(u, v, rank_);
}

int HnnOrderContext::element_of(Letter l) const {
    if (l < 0 || l >= static_cast<int>(letter_to_element.size())) throw Error("letter outside the hnn alphabet");
    return letter_to_element[static_cast<std::size_t>(l)];
}

std::strong_ordering element_compare(int g, int h, GMode mode, const HnnOrderContext& ctx) {
    const int m = ctx.group->size();
    if (g < 0 || g >= m || h < 0 || h >= m) throw Error("element outside the group");
    switch (mode) {
        case GMode::Absolute:
            return g <=> h;
        case GMode::A:
        case GMode::B: {
            const CosetData& cd = mode == GMode::A ? ctx.cosets_a : ctx.cosets_b;
            int pg = cd.rep_pos[static_cast<std::size_t>(g)], ph = cd.rep_pos[static_cast<std::size_t>(h)];
            if (pg != ph) return pg <=> ph;
            return cd.remainder[static_cast<std::size_t>(g)] <=> cd.remainder[static_cast<std::size_t>(h)];
        }
    }
    throw Error("unreachable");
}

namespace {

int segment_element(Letter l, const HnnOrderContext& ctx) {
    if (ctx.is_stable(l)) throw Error("stable letter inside a G1 segment");
    int e = ctx.element_of(l);
    if (e < 0) throw Error("letter does not name a group element");
    return e;
}

}  // namespace

std::strong_ordering segment_compare(std::span<const Letter> u, std::span<const Letter> v, GMode mode,
                                     const HnnOrderContext& ctx) {
    if (u.size() != v.size()) return u.size() <=> v.size();
    if (u.empty()) return std::strong_ordering::equal;
    const std::size_t n = u.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto c = element_compare(segment_element(u[i], ctx), segment_element(v[i], ctx), GMode::Absolute, ctx);
        if (c != std::strong_ordering::equal) return c;
    }
    return element_compare(segment_element(u[n - 1], ctx), segment_element(v[n - 1], ctx), mode, ctx);
}

std::strong_ordering segment_compare(const Word& u, const Word& v, GMode mode, const HnnOrderContext& ctx) {
    return segment_compare(std::span<const Letter>(u.letters()), std::span<const Letter>(v.letters()), mode, ctx);
}

WeightTuple hnn_weight(const Word& u, const HnnOrderContext& ctx) {
    WeightTuple wt;
    std::vector<Letter> current;
    for (Letter l : u) {
        if (ctx.is_stable(l)) {
            wt.exponents.push_back(l == ctx.t ? 1 : -1);
            wt.segments.emplace_back(std::move(current));
            current = {};
        } else {
            segment_element(l, ctx);  // validates
            current.push_back(l);
        }
    }
    wt.tail = Word(std::move(current));
    wt.k = static_cast<int>(wt.exponents.size());
    return wt;
}

Word WeightTuple::reassemble(const HnnOrderContext& ctx) const {
    std::vector<Letter> out;
    for (int i = 0; i < k; ++i) {
        const auto& seg = segments[static_cast<std::size_t>(i)].letters();
        out.insert(out.end(), seg.begin(), seg.end());
        out.push_back(exponents[static_cast<std::size_t>(i)] == 1 ? ctx.t : ctx.t_inv);
    }
    out.insert(out.end(), tail.letters().begin(), tail.letters().end());
    return Word(std::move(out));
}

std::strong_ordering hnn_compare(const Word& u, const Word& v, const HnnOrderContext& ctx) {
    // Single pass over each word records the stable-letter positions; the
    // weight tuple is then compared component by component without
    // materializing the segments.
    std::vector<int> pu, pv;
    pu.reserve(8);
    pv.reserve(8);
    for (int i = 0; i < u.degree(); ++i)
        if (ctx.is_stable(u[i])) pu.push_back(i);
        else
            segment_element(u[i], ctx);
    for (int i = 0; i < v.degree(); ++i)
        if (ctx.is_stable(v[i])) pv.push_back(i);
        else
            segment_element(v[i], ctx);

    if (pu.size() != pv.size()) return pu.size() <=> pv.size();
    const int k = static_cast<int>(pu.size());
    for (int i = 0; i < k; ++i) {
        int eu = u[pu[static_cast<std::size_t>(i)]] == ctx.t ? 1 : -1;
        int ev = v[pv[static_cast<std::size_t>(i)]] == ctx.t ? 1 : -1;
        if (eu != ev) return eu <=> ev;
    }
    const auto& lu = u.letters();
    const auto& lv = v.letters();
    for (int i = 0; i < k; ++i) {
        int bu = i == 0 ? 0 : pu[static_cast<std::size_t>(i - 1)] + 1;
        int bv = i == 0 ? 0 : pv[static_cast<std::size_t>(i - 1)] + 1;
        std::span<const Letter> su(lu.data() + bu, static_cast<std::size_t>(pu[static_cast<std::size_t>(i)] - bu));
        std::span<const Letter> sv(lv.data() + bv, static_cast<std::size_t>(pv[static_cast<std::size_t>(i)] - bv));
        GMode mode = u[pu[static_cast<std::size_t>(i)]] == ctx.t ? GMode::A : GMode::B;
        auto c = segment_compare(su, sv, mode, ctx);
        if (c != std::strong_ordering::equal) return c;
    }
    int bu = k == 0 ? 0 : pu[static_cast<std::size_t>(k - 1)] + 1;
    int bv = k == 0 ? 0 : pv[static_cast<std::size_t>(k - 1)] + 1;
    std::span<const Letter> su(lu.data() + bu, static_cast<std::size_t>(u.degree() - bu));
    std::span<const Letter> sv(lv.data() + bv, static_cast<std::size_t>(v.degree() - bv));
    return segment_compare(su, sv, GMode::Absolute, ctx);
}

OrderDiagnostics order_diagnostics(const WordOrder& ord, int maxlen, std::uint64_t budget) {
    OrderDiagnostics report;
    std::uint64_t count = 1, level = 1;
    const auto m = static_cast<std::uint64_t>(ord.alphabet_size());
    for (int len = 1; len <= maxlen; ++len) {
        level *= m;
        count += level;
        if (count * count > budget) {  // the compare matrix alone would blow the budget
            report.budget_exceeded = true;
            return report;
        }
    }
    const auto words = words_up_to(ord.alphabet_size(), maxlen);
    const std::size_t n = words.size();

    auto spend = [&](std::uint64_t cost) {
        report.operations += cost;
        if (report.operations > budget) {
            report.budget_exceeded = true;
            return false;
        }
        return true;
    };

    // compare matrix: -1 less, 0 equal, +1 greater
    std::vector<signed char> cmp(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!spend(1)) return report;
            auto c = ord.compare(words[i], words[j]);
            cmp[i * n + j] = c == std::strong_ordering::less ? -1 : (c == std::strong_ordering::equal ? 0 : 1);
        }

    report.totality = report.antisymmetry = true;
    for (std::size_t i = 0; i < n && report.antisymmetry; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            signed char ab = cmp[i * n + j], ba = cmp[j * n + i];
            bool ok = (i == j) ? (ab == 0) : (ab != 0 && ab == -ba);
            if (!ok) {
                report.totality = report.antisymmetry = false;
                report.axiom_failed = i == j ? "irreflexivity" : (ab == 0 || ba == 0 ? "totality" : "antisymmetry");
                report.axiom_witness = std::vector<Word>{words[i], words[j]};
                break;
            }
        }

    report.transitivity = true;
    for (std::size_t i = 0; i < n && report.transitivity; ++i)
        for (std::size_t j = 0; j < n && report.transitivity; ++j) {
            if (cmp[i * n + j] != -1) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (!spend(1)) return report;
                if (cmp[j * n + k] == -1 && cmp[i * n + k] != -1) {
                    report.transitivity = false;
                    report.axiom_failed = "transitivity";
                    report.axiom_witness = std::vector<Word>{words[i], words[j], words[k]};
                    break;
                }
            }
        }

    // monomial law: u > v must survive every two-sided context
    for (std::size_t i = 0; i < n && !report.witness; ++i)
        for (std::size_t j = 0; j < n && !report.witness; ++j) {
            if (cmp[i * n + j] != 1) continue;
            for (std::size_t a = 0; a < n && !report.witness; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    if (!spend(1)) return report;
                    Word lu = words[a] * words[i] * words[b];
                    Word lv = words[a] * words[j] * words[b];
                    if (ord.compare(lu, lv) != std::strong_ordering::greater) {
                        report.witness = MonomialityWitness{words[i], words[j], words[a], words[b]};
                        break;
                    }
                }
        }
    return report;
}

}  // namespace gsb

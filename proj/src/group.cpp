#include "acyl/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>

namespace acyl {

int compare_elements(const GroupElement& a, const GroupElement& b) {
    long long ta = total_letters(a), tb = total_letters(b);
    if (ta != tb) return ta < tb ? -1 : 1;
    if (a.syls.size() != b.syls.size()) return a.syls.size() < b.syls.size() ? -1 : 1;
    for (size_t i = 0; i < a.syls.size(); ++i) {
        const Syllable &x = a.syls[i], &y = b.syls[i];
        if (x.tag != y.tag) return x.tag < y.tag ? -1 : 1;
        if (x.w != y.w) return shortlex_less(x.w, y.w) ? -1 : 1;
        if (x.fin != y.fin) return x.fin < y.fin ? -1 : 1;
    }
    if (a.ce != b.ce) return a.ce < b.ce ? -1 : 1;
    if (a.cf != b.cf) return a.cf < b.cf ? -1 : 1;
    return 0;
}

size_t hash_element(const GroupElement& e) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const Syllable& s : e.syls) {
        mix(static_cast<uint64_t>(s.tag) + 0x9e);
        for (Letter l : s.w) mix(static_cast<uint64_t>(static_cast<int64_t>(l)) + 0x100);
        mix(static_cast<uint64_t>(s.fin) + 0x51);
    }
    mix(static_cast<uint64_t>(e.ce) * 2654435761u + 7);
    mix(static_cast<uint64_t>(e.cf) + 13);
    return static_cast<size_t>(h);
}

long long total_letters(const GroupElement& e) {
    long long t = 0;
    for (const Syllable& s : e.syls) t += s.w.empty() ? 1 : static_cast<long long>(s.w.size());
    t += std::llabs(e.ce);
    t += e.cf != 0 ? 1 : 0;
    return t;
}

Group::Group(std::shared_ptr<const GroupPreset> preset) : p_(std::move(preset)) {}

std::optional<long long> Group::c_power_of_free(int tag, const Word& x) const {
    if (p_->has_trivial_c()) return x.empty() ? std::optional<long long>(0) : std::nullopt;
    return power_of(x, p_->w[tag]);
}

std::optional<int> Group::c_index_of_finite(int tag, int x) const {
    const auto& emb = p_->c_embed[tag];
    for (size_t i = 0; i < emb.size(); ++i)
        if (emb[i] == x) return static_cast<int>(i);
    return std::nullopt;
}

int Group::c_mul(int i, int j) const {
    int a = p_->factor[0].mul[p_->c_embed[0][i]][p_->c_embed[0][j]];
    auto idx = c_index_of_finite(0, a);
    assert(idx);
    return *idx;
}

int Group::c_inv(int i) const {
    int a = p_->factor[0].invtab[p_->c_embed[0][i]];
    auto idx = c_index_of_finite(0, a);
    assert(idx);
    return *idx;
}

Group::CosetRep Group::coset_rep_free(int tag, const Word& x) const {
    if (p_->has_trivial_c()) return {x, 0};
    const Word& w = p_->w[tag];
    long long L = static_cast<long long>(w.size());
    long long Q = 2 * static_cast<long long>(x.size()) / L + 2;
    Word best = x;
    long long bq = 0;
    for (long long q = -Q; q <= Q; ++q) {
        if (q == 0) continue;
        Word cand = concat(x, power(w, q));
        if (shortlex_less(cand, best)) {
            best = std::move(cand);
            bq = q;
        }
    }
    return {best, -bq};
}

Group::CosetRepFin Group::coset_rep_finite(int tag, int x) const {
    const Factor& f = p_->factor[tag];
    const auto& emb = p_->c_embed[tag];
    int best = -1, bi = 0;
    for (size_t i = 0; i < emb.size(); ++i) {
        int cand = f.mul[x][emb[i]];
        if (best < 0 || cand < best) {
            best = cand;
            bi = static_cast<int>(i);
        }
    }
    // x = best * c[bi]^-1
    return {best, c_inv(bi)};
}

Group::DCosetMin Group::dcoset_min_free(int tag, const Word& x) const {
    if (p_->has_trivial_c()) return {x, 0, 0};
    assert(!c_power_of_free(tag, x));
    const Word& w = p_->w[tag];
    long long L = static_cast<long long>(w.size());

    auto row = [&](long long pp) {
        Word xp = concat(power(w, pp), x);
        CosetRep r = coset_rep_free(tag, xp);
        return DCosetMin{r.rep, pp, -r.texp};
    };
    auto axis_dist = [&](long long pp) {
        // d(w^-p, x A_w) = (|w^p x w x^-1 w^-p| - L) / 2
        Word u = concat(concat(concat(power(w, pp), x), concat(w, inverse(x))), power(w, -pp));
        return (static_cast<long long>(u.size()) - L) / 2;
    };

    DCosetMin best = row(0);
    long long d0 = axis_dist(0);
    for (int dir : {1, -1}) {
        long long dprev = d0;
        for (long long pp = dir;; pp += dir) {
            long long dp = axis_dist(pp);
            if (dp > static_cast<long long>(best.rep.size()) && dp >= dprev) break;
            DCosetMin r = row(pp);
            if (shortlex_less(r.rep, best.rep)) best = r;
            dprev = dp;
            if (std::llabs(pp) > 8 * (static_cast<long long>(x.size()) + L + 4))
                throw budget_exceeded("double-coset scan did not converge");
        }
    }
    return best;
}

void Group::push_c_power(GroupElement& g, long long e) const {
    if (p_->has_trivial_c()) {
        assert(e == 0);
        return;
    }
    g.ce += e;
}

void Group::push_c_index(GroupElement& g, int cidx) const { g.cf = c_mul(g.cf, cidx); }

void Group::push_free(GroupElement& g, int tag, const Word& value) const {
    if (value.empty()) return;
    Word z = p_->has_trivial_c() || g.ce == 0 ? value : concat(power(p_->w[tag], g.ce), value);
    g.ce = 0;
    if (!g.syls.empty() && g.syls.back().tag == tag) {
        Word u = concat(g.syls.back().w, z);
        g.syls.pop_back();
        if (auto n = c_power_of_free(tag, u)) {
            g.ce = *n;
            return;
        }
        CosetRep r = coset_rep_free(tag, u);
        g.syls.push_back({static_cast<int8_t>(tag), std::move(r.rep), 0});
        g.ce = r.texp;
        return;
    }
    if (auto n = c_power_of_free(tag, z)) {
        g.ce = *n;
        return;
    }
    CosetRep r = coset_rep_free(tag, z);
    g.syls.push_back({static_cast<int8_t>(tag), std::move(r.rep), 0});
    g.ce = r.texp;
}

void Group::push_finite(GroupElement& g, int tag, int value) const {
    if (value == 0) return;
    const Factor& f = p_->factor[tag];
    int z = f.mul[p_->c_embed[tag][g.cf]][value];
    g.cf = 0;
    if (!g.syls.empty() && g.syls.back().tag == tag) {
        int u = f.mul[g.syls.back().fin][z];
        g.syls.pop_back();
        if (auto n = c_index_of_finite(tag, u)) {
            g.cf = *n;
            return;
        }
        CosetRepFin r = coset_rep_finite(tag, u);
        g.syls.push_back({static_cast<int8_t>(tag), {}, r.rep});
        g.cf = r.cidx;
        return;
    }
    if (auto n = c_index_of_finite(tag, z)) {
        g.cf = *n;
        return;
    }
    CosetRepFin r = coset_rep_finite(tag, z);
    g.syls.push_back({static_cast<int8_t>(tag), {}, r.rep});
    g.cf = r.cidx;
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (const Syllable& s : b.syls) {
        if (p_->factor[s.tag].finite)
            push_finite(r, s.tag, s.fin);
        else
            push_free(r, s.tag, s.w);
    }
    if (p_->kind == PresetKind::FiniteAmalgam)
        push_c_index(r, b.cf);
    else
        push_c_power(r, b.ce);
    return r;
}

GroupElement Group::invert(const GroupElement& g) const {
    GroupElement r;
    if (p_->kind == PresetKind::FiniteAmalgam)
        r.cf = c_inv(g.cf);
    else
        r.ce = -g.ce;
    for (auto it = g.syls.rbegin(); it != g.syls.rend(); ++it) {
        if (p_->factor[it->tag].finite)
            push_finite(r, it->tag, p_->factor[it->tag].invtab[it->fin]);
        else
            push_free(r, it->tag, inverse(it->w));
    }
    return r;
}

GroupElement Group::conjugate(const GroupElement& g, const GroupElement& by) const {
    return multiply(multiply(by, g), invert(by));
}

GroupElement Group::normal_form(const std::vector<InputLetter>& letters) const {
    GroupElement r;
    for (const InputLetter& l : letters) {
        if (p_->factor[l.tag].finite)
            push_finite(r, l.tag, l.elem);
        else
            push_free(r, l.tag, Word{l.letter});
    }
    return r;
}

GroupElement Group::parse(const std::string& text) const {
    std::vector<InputLetter> letters;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        std::string base = tok;
        bool invert_tok = false;
        if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
            invert_tok = true;
            base = base.substr(0, base.size() - 3);
        }
        for (int t = 0; t < 2; ++t) {
            const Factor& f = p_->factor[t];
            if (f.finite) {
                auto it = std::find(f.elem_names.begin(), f.elem_names.end(), base);
                if (it != f.elem_names.end()) {
                    int e = static_cast<int>(it - f.elem_names.begin());
                    letters.push_back({t, 0, invert_tok ? f.invtab[e] : e});
                    tok.clear();
                    return;
                }
            } else {
                auto it = std::find(f.gen_names.begin(), f.gen_names.end(), base);
                if (it != f.gen_names.end()) {
                    Letter l = static_cast<Letter>(it - f.gen_names.begin()) + 1;
                    letters.push_back({t, invert_tok ? -l : l, 0});
                    tok.clear();
                    return;
                }
            }
        }
        throw unknown_letter(tok);
    };
    for (char c : text) {
        if (c == ' ' || c == '.' || c == '\t') {
            flush();
        } else {
            tok += c;
        }
    }
    flush();
    return normal_form(letters);
}

std::string Group::render(const GroupElement& g) const {
    if (is_identity(g)) return "1";
    std::string out;
    for (size_t i = 0; i < g.syls.size(); ++i) {
        const Syllable& s = g.syls[i];
        if (i) out += " . ";
        if (p_->factor[s.tag].finite)
            out += p_->factor[s.tag].elem_names[s.fin];
        else
            out += word_to_string(s.w, p_->factor[s.tag].gen_names);
    }
    if (p_->kind == PresetKind::FiniteAmalgam) {
        if (g.cf != 0) out += (g.syls.empty() ? "" : " : ") + ("c" + std::to_string(g.cf));
    } else if (g.ce != 0) {
        out += (g.syls.empty() ? std::string() : std::string(" : ")) + "w^" + std::to_string(g.ce);
    }
    return out;
}

long long Group::c_spell_length(long long e) const {
    if (e == 0) return 0;
    return std::llabs(e) *
           std::min(static_cast<long long>(p_->w[0].size()), static_cast<long long>(p_->w[1].size()));
}

long long Group::c_spell_length_finite(int cidx) const {
    if (cidx == 0) return 0;
    return std::min(p_->factor[0].lentab[p_->c_embed[0][cidx]],
                    p_->factor[1].lentab[p_->c_embed[1][cidx]]);
}

long long Group::factor_len(int tag, const Syllable& s) const {
    const Factor& f = p_->factor[tag];
    if (f.finite) return f.lentab[s.fin];
    return static_cast<long long>(s.w.size());
}

long long Group::scost_free(int tag, const Word& x, long long lq, long long rq) const {
    const Word& w = p_->w[tag];
    Word z = concat(concat(power(w, lq), x), power(w, rq));
    return static_cast<long long>(z.size());
}

long long Group::word_length(const GroupElement& g) const {
    size_t n = g.syls.size();

    if (p_->kind == PresetKind::FreeProduct) {
        long long t = 0;
        for (const Syllable& s : g.syls) t += static_cast<long long>(s.w.size());
        return t;
    }

    if (p_->kind == PresetKind::FiniteAmalgam) {
        if (n == 0) return c_spell_length_finite(g.cf);
        int cs = p_->c_size();
        const long long INF = 1ll << 60;
        std::vector<long long> cost(cs, INF);
        cost[0] = 0;
        for (size_t i = 0; i < n; ++i) {
            const Factor& f = p_->factor[g.syls[i].tag];
            const auto& emb = p_->c_embed[g.syls[i].tag];
            std::vector<long long> next(cs, INF);
            for (int pc = 0; pc < cs; ++pc) {
                if (cost[pc] >= INF) continue;
                for (int q = 0; q < cs; ++q) {
                    long long tele = cost[pc] + c_spell_length_finite(c_mul(c_inv(pc), q));
                    int zl = f.mul[f.invtab[emb[q]]][g.syls[i].fin];
                    for (int pn = 0; pn < cs; ++pn) {
                        long long sc = f.lentab[f.mul[zl][emb[pn]]];
                        if (tele + sc < next[pn]) next[pn] = tele + sc;
                    }
                }
            }
            cost.swap(next);
        }
        long long best = INF;
        for (int pc = 0; pc < cs; ++pc)
            if (cost[pc] < INF)
                best = std::min(best, cost[pc] + c_spell_length_finite(c_mul(c_inv(pc), g.cf)));
        return best;
    }

    // free malnormal amalgam: DP over shift exponents. Teleports (standalone
    // C-blocks) can only help when |w_A| != |w_B|; merging a C-block into the
    // neighbouring syllable never increases cost when the lengths agree.
    long long LA = p_->wlen(0), LB = p_->wlen(1);
    bool teleports = LA != LB;
    long long Lmin = std::min(LA, LB);
    if (n == 0) return c_spell_length(g.ce);

    long long baseline = 0;
    for (size_t i = 0; i < n; ++i) baseline += factor_len(g.syls[i].tag, g.syls[i]);
    baseline += c_spell_length(g.ce);

    std::map<long long, long long> states;
    states[0] = 0;
    for (size_t i = 0; i < n; ++i) {
        int tag = g.syls[i].tag;
        const Word& x = g.syls[i].w;
        long long L = p_->wlen(tag);
        std::map<long long, long long> next;
        long long remaining = static_cast<long long>(n - 1 - i); // each later syllable costs >= 1
        for (auto [pc, c0] : states) {
            long long tele_span = teleports ? (baseline - c0) / Lmin + 1 : 0;
            for (long long q = pc - tele_span; q <= pc + tele_span; ++q) {
                long long tele = c_spell_length(q - pc);
                if (c0 + tele + remaining + 1 > baseline) continue;
                long long pmax = (baseline - c0 - tele + static_cast<long long>(x.size())) / L + 1;
                for (long long pn = -pmax; pn <= pmax; ++pn) {
                    long long lb = std::llabs(pn) * L - static_cast<long long>(x.size()) -
                                   std::llabs(q) * L;
                    if (c0 + tele + std::max(lb, 1ll) + remaining > baseline) continue;
                    long long sc = scost_free(tag, x, -q, pn);
                    long long c2 = c0 + tele + sc;
                    if (c2 + remaining > baseline) continue;
                    auto it = next.find(pn);
                    if (it == next.end() || c2 < it->second) next[pn] = c2;
                }
            }
        }
        states.swap(next);
    }
    long long best = baseline;
    for (auto [pc, c0] : states) best = std::min(best, c0 + c_spell_length(g.ce - pc));
    return best;
}

std::vector<GroupElement> Group::generators() const {
    std::vector<GroupElement> out;
    for (const auto& gen : p_->gens) {
        GroupElement e;
        if (p_->factor[gen.tag].finite)
            push_finite(e, gen.tag, gen.elem);
        else
            push_free(e, gen.tag, Word{gen.letter});
        out.push_back(std::move(e));
    }
    return out;
}

Group::Ball Group::ball(long long alpha, size_t cap) const {
    Ball b;
    b.radius = alpha;
    std::map<GroupElement, long long, ElementLess> seen;
    std::vector<GroupElement> frontier{one()};
    seen[one()] = 0;
    auto gens = generators();
    for (long long level = 1; level <= alpha && !frontier.empty(); ++level) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier) {
            for (const GroupElement& s : gens) {
                GroupElement h = multiply(g, s);
                if (seen.emplace(h, level).second) {
                    next.push_back(std::move(h));
                    if (seen.size() > cap) throw budget_exceeded("ball enumeration cap");
                }
            }
        }
        std::sort(next.begin(), next.end(), ElementLess{});
        frontier.swap(next);
    }
    std::vector<std::pair<long long, GroupElement>> all;
    all.reserve(seen.size());
    for (auto& [e, l] : seen) all.emplace_back(l, e);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return compare_elements(a.second, b.second) < 0;
    });
    for (auto& [l, e] : all) {
        b.elems.push_back(e);
        b.len.push_back(l);
    }
    return b;
}

} // namespace acyl

#include "acyl/preset.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace acyl {

using nlohmann::json;

std::string GroupPreset::letter_name(int tag, Letter l) const {
    const Factor& f = factor[tag];
    if (f.finite) return f.elem_names[l];
    int idx = l > 0 ? l - 1 : -l - 1;
    std::string n = f.gen_names[idx];
    if (l < 0) n += "^-1";
    return n;
}

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

// Parses "a b^-1 a" over a free factor's generator names.
Word parse_free_word(const std::string& s, const Factor& f, const std::string& field) {
    Word w;
    for (const std::string& tok : tokenize(s)) {
        std::string base = tok;
        bool inverse = false;
        if (base.size() > 3 && base.substr(base.size() - 3) == "^-1") {
            inverse = true;
            base = base.substr(0, base.size() - 3);
        }
        auto it = std::find(f.gen_names.begin(), f.gen_names.end(), base);
        if (it == f.gen_names.end())
            throw config_error(field + ": unknown generator '" + tok + "'");
        Letter l = static_cast<Letter>(it - f.gen_names.begin()) + 1;
        w.push_back(inverse ? -l : l);
    }
    return reduced(w);
}

Factor parse_factor(const json& j, const std::string& field) {
    Factor f;
    std::string type = j.value("type", "");
    if (type == "free") {
        f.finite = false;
        f.rank = j.at("rank").get<int>();
        f.gen_names = j.at("generators").get<std::vector<std::string>>();
        if (static_cast<int>(f.gen_names.size()) != f.rank)
            throw config_error(field + ".generators: expected " + std::to_string(f.rank) + " names");
        if (f.rank <= 0) throw config_error(field + ".rank: must be positive");
    } else if (type == "finite") {
        f.finite = true;
        f.elem_names = j.at("elements").get<std::vector<std::string>>();
        f.mul = j.at("table").get<std::vector<std::vector<int>>>();
        int n = static_cast<int>(f.elem_names.size());
        if (static_cast<int>(f.mul.size()) != n)
            throw config_error(field + ".table: wrong number of rows");
        for (auto& row : f.mul) {
            if (static_cast<int>(row.size()) != n) throw config_error(field + ".table: ragged row");
            for (int v : row)
                if (v < 0 || v >= n) throw config_error(field + ".table: entry out of range");
        }
        for (int i = 0; i < n; ++i)
            if (f.mul[0][i] != i || f.mul[i][0] != i)
                throw config_error(field + ".table: element 0 is not an identity");
        for (int i = 0; i < n; ++i)
            for (int j2 = 0; j2 < n; ++j2)
                for (int k = 0; k < n; ++k)
                    if (f.mul[f.mul[i][j2]][k] != f.mul[i][f.mul[j2][k]])
                        throw config_error(field + ".table: not associative");
        f.invtab.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            for (int j2 = 0; j2 < n; ++j2)
                if (f.mul[i][j2] == 0) f.invtab[i] = j2;
            if (f.invtab[i] < 0) throw config_error(field + ".table: missing inverse");
        }
    } else {
        throw config_error(field + ".type: expected 'free' or 'finite'");
    }
    return f;
}

void validate_amalgam_word(const Word& w, const std::string& field) {
    if (w.empty()) throw config_error(field + ": empty amalgam word");
    if (!is_cyclically_reduced(w))
        throw config_error(field + ": amalgam word must be cyclically reduced");
    auto [root, p] = primitive_root(w);
    if (p != 1)
        throw config_error(field + ": amalgam word is a proper power (" + std::to_string(p) +
                           "-th); <w> would not be malnormal");
}

void compute_factor_lengths(Factor& f, const std::vector<GroupPreset::Gen>& gens, int tag,
                            const std::string& field) {
    int n = f.size();
    f.lentab.assign(n, -1);
    f.lentab[0] = 0;
    std::queue<int> q;
    q.push(0);
    std::vector<int> fgens;
    for (const auto& g : gens)
        if (g.tag == tag) fgens.push_back(g.elem);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int s : fgens) {
            int y = f.mul[x][s];
            if (f.lentab[y] < 0) {
                f.lentab[y] = f.lentab[x] + 1;
                q.push(y);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (f.lentab[i] < 0)
            throw config_error(field + ": generating set does not generate the factor");
}

} // namespace

std::shared_ptr<const GroupPreset> parse_preset(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(origin + ": " + e.what());
    }
    auto p = std::make_shared<GroupPreset>();
    std::string kind = j.value("kind", "");
    if (kind == "finite_amalgam")
        p->kind = PresetKind::FiniteAmalgam;
    else if (kind == "free_malnormal_amalgam")
        p->kind = PresetKind::FreeMalnormalAmalgam;
    else if (kind == "free_product")
        p->kind = PresetKind::FreeProduct;
    else
        throw config_error(origin + ": kind must be finite_amalgam | free_malnormal_amalgam | free_product");
    p->name = j.value("name", kind);

    p->factor[0] = parse_factor(j.at("factor_a"), "factor_a");
    p->factor[1] = parse_factor(j.at("factor_b"), "factor_b");

    if (p->kind == PresetKind::FreeMalnormalAmalgam) {
        if (p->factor[0].finite || p->factor[1].finite)
            throw config_error("free_malnormal_amalgam requires free factors");
        p->w[0] = parse_free_word(j.at("amalgam_word_a").get<std::string>(), p->factor[0], "amalgam_word_a");
        p->w[1] = parse_free_word(j.at("amalgam_word_b").get<std::string>(), p->factor[1], "amalgam_word_b");
        validate_amalgam_word(p->w[0], "amalgam_word_a");
        validate_amalgam_word(p->w[1], "amalgam_word_b");
    } else if (p->kind == PresetKind::FiniteAmalgam) {
        if (!p->factor[0].finite || !p->factor[1].finite)
            throw config_error("finite_amalgam requires finite factors");
        p->c_embed[0] = j.at("c_embedding_a").get<std::vector<int>>();
        p->c_embed[1] = j.at("c_embedding_b").get<std::vector<int>>();
        if (p->c_embed[0].size() != p->c_embed[1].size())
            throw config_error("c_embedding: the two embeddings list different numbers of elements");
        size_t cs = p->c_embed[0].size();
        if (cs == 0 || p->c_embed[0][0] != 0 || p->c_embed[1][0] != 0)
            throw config_error("c_embedding: first element must be the identity (index 0)");
        for (int t = 0; t < 2; ++t) {
            for (int v : p->c_embed[t])
                if (v < 0 || v >= p->factor[t].size())
                    throw config_error("c_embedding: element index out of range");
            std::vector<int> sorted = p->c_embed[t];
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw config_error("c_embedding: not injective");
        }
        // C's multiplication must agree through both embeddings.
        for (size_t i = 0; i < cs; ++i)
            for (size_t k = 0; k < cs; ++k) {
                int a = p->factor[0].mul[p->c_embed[0][i]][p->c_embed[0][k]];
                auto it = std::find(p->c_embed[0].begin(), p->c_embed[0].end(), a);
                if (it == p->c_embed[0].end())
                    throw config_error("c_embedding_a: image is not closed under multiplication");
                size_t idx = static_cast<size_t>(it - p->c_embed[0].begin());
                int b = p->factor[1].mul[p->c_embed[1][i]][p->c_embed[1][k]];
                if (b != p->c_embed[1][idx])
                    throw config_error("c_embedding: embeddings are not isomorphic as subgroups");
            }
    }

    // Generating set: listed generators plus inverses.
    for (const std::string& name : j.at("generating_set").get<std::vector<std::string>>()) {
        bool found = false;
        for (int t = 0; t < 2 && !found; ++t) {
            Factor& f = p->factor[t];
            if (f.finite) {
                auto it = std::find(f.elem_names.begin(), f.elem_names.end(), name);
                if (it != f.elem_names.end()) {
                    int e = static_cast<int>(it - f.elem_names.begin());
                    if (e == 0) throw config_error("generating_set: identity listed as generator");
                    p->gens.push_back({t, 0, e});
                    if (f.invtab[e] != e) p->gens.push_back({t, 0, f.invtab[e]});
                    found = true;
                }
            } else {
                auto it = std::find(f.gen_names.begin(), f.gen_names.end(), name);
                if (it != f.gen_names.end()) {
                    Letter l = static_cast<Letter>(it - f.gen_names.begin()) + 1;
                    p->gens.push_back({t, l, 0});
                    p->gens.push_back({t, -l, 0});
                    found = true;
                }
            }
        }
        if (!found) throw config_error("generating_set: unknown name '" + name + "'");
    }
    if (p->gens.empty()) throw config_error("generating_set: empty");

    // dedupe, deterministic order
    std::sort(p->gens.begin(), p->gens.end(), [](const auto& a, const auto& b) {
        if (a.tag != b.tag) return a.tag < b.tag;
        if (a.letter != b.letter) return letter_rank(a.letter) < letter_rank(b.letter);
        return a.elem < b.elem;
    });
    p->gens.erase(std::unique(p->gens.begin(), p->gens.end(),
                              [](const auto& a, const auto& b) {
                                  return a.tag == b.tag && a.letter == b.letter && a.elem == b.elem;
                              }),
                  p->gens.end());

    for (int t = 0; t < 2; ++t) {
        Factor& f = p->factor[t];
        if (f.finite) {
            compute_factor_lengths(f, p->gens, t, t == 0 ? "factor_a" : "factor_b");
        } else {
            // every free generator must appear, otherwise the factor is not generated
            for (Letter l = 1; l <= f.rank; ++l) {
                bool present = std::any_of(p->gens.begin(), p->gens.end(),
                                           [&](const auto& g) { return g.tag == t && g.letter == l; });
                if (!present)
                    throw config_error("generating_set: missing generator '" + f.gen_names[l - 1] + "'");
            }
        }
    }
    return p;
}

std::shared_ptr<const GroupPreset> load_preset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open preset file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_preset(ss.str(), path);
}

std::string builtin_preset_json(const std::string& which) {
    if (which == "free_malnormal") {
        return R"json({
  "kind": "free_malnormal_amalgam",
  "name": "F(a,b) *_{ab=cd} F(c,d)",
  "factor_a": {"type": "free", "rank": 2, "generators": ["a", "b"]},
  "factor_b": {"type": "free", "rank": 2, "generators": ["c", "d"]},
  "amalgam_word_a": "a b",
  "amalgam_word_b": "c d",
  "generating_set": ["a", "b", "c", "d"]
})json";
    }
    if (which == "free_product") {
        return R"json({
  "kind": "free_product",
  "name": "F(a,b) * F(c,d)",
  "factor_a": {"type": "free", "rank": 2, "generators": ["a", "b"]},
  "factor_b": {"type": "free", "rank": 2, "generators": ["c", "d"]},
  "generating_set": ["a", "b", "c", "d"]
})json";
    }
    if (which == "finite_amalgam") {
        // Z6 *_{Z2} Z4: [A:C] = 3, [B:C] = 2.
        return R"json({
  "kind": "finite_amalgam",
  "name": "Z6 *_{Z2} Z4",
  "factor_a": {"type": "finite",
    "elements": ["e", "x", "x2", "x3", "x4", "x5"],
    "table": [[0,1,2,3,4,5],[1,2,3,4,5,0],[2,3,4,5,0,1],[3,4,5,0,1,2],[4,5,0,1,2,3],[5,0,1,2,3,4]]},
  "factor_b": {"type": "finite",
    "elements": ["e", "y", "y2", "y3"],
    "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
  "c_embedding_a": [0, 3],
  "c_embedding_b": [0, 2],
  "generating_set": ["x", "y"]
})json";
    }
    throw config_error("unknown builtin preset: " + which);
}

} // namespace acyl

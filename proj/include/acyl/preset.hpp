#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acyl/error.hpp"
#include "acyl/words.hpp"

namespace acyl {

enum class PresetKind { FiniteAmalgam, FreeMalnormalAmalgam, FreeProduct };

// One of the two amalgam factors. Either a free group of finite rank or a
// finite group given by its multiplication table.
struct Factor {
    bool finite = false;

    // free case
    int rank = 0;
    std::vector<std::string> gen_names;

    // finite case: elements 0..n-1, 0 = identity
    std::vector<std::string> elem_names;
    std::vector<std::vector<int>> mul;
    std::vector<int> invtab;
    std::vector<long long> lentab; // word length over the preset generators inside this factor

    int size() const { return finite ? static_cast<int>(mul.size()) : 0; }
};

// The identified subgroup C. For free factors C = <w> (infinite cyclic); for
// finite factors C is listed element-by-element through both embeddings.
struct GroupPreset {
    PresetKind kind = PresetKind::FreeProduct;
    std::string name;
    Factor factor[2]; // 0 = A, 1 = B

    // free/free_malnormal case: C = <w_a> = <w_b>
    Word w[2];

    // finite case: c_embed[t][i] = image in factor t of the i-th element of C.
    std::vector<int> c_embed[2];

    // generating set: (factor tag, letter-or-element). Symmetric by construction.
    struct Gen {
        int tag;
        Letter letter; // free factor
        int elem;      // finite factor
    };
    std::vector<Gen> gens;

    bool has_cyclic_c() const { return kind == PresetKind::FreeMalnormalAmalgam; }
    bool has_trivial_c() const { return kind == PresetKind::FreeProduct; }
    int c_size() const { return kind == PresetKind::FiniteAmalgam ? static_cast<int>(c_embed[0].size()) : 0; }
    long long wlen(int tag) const { return static_cast<long long>(w[tag].size()); }

    std::string letter_name(int tag, Letter l) const;
};

// Loads and validates a preset definition file (JSON). Throws ConfigError with
// the offending field on malformed input; validation failures report the
// violated invariant (cyclic reduction, proper power, injective embeddings,
// symmetric generating set).
std::shared_ptr<const GroupPreset> load_preset(const std::string& path);
std::shared_ptr<const GroupPreset> parse_preset(const std::string& json_text, const std::string& origin);

// Built-in presets used by tests and as documentation of the file format.
std::string builtin_preset_json(const std::string& which);

} // namespace acyl

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acyl/error.hpp"
#include "acyl/preset.hpp"
#include "acyl/words.hpp"

namespace acyl {

// One syllable of the alternating normal form. For a free factor the value is
// a reduced word (a canonical left <w>-coset representative, never in <w>);
// for a finite factor an element index (a canonical left C-coset
// representative, never in C).
struct Syllable {
    int8_t tag = 0;
    Word w;
    int fin = 0;

    bool operator==(const Syllable& o) const { return tag == o.tag && w == o.w && fin == o.fin; }
};

// g = syl_1 ... syl_n * c_tail, syllable factors alternating. c_tail is w^ce
// for cyclic C, the cf-th element of C for finite C, and trivial for free
// products. Canonical: two elements of G are equal iff their forms coincide.
struct GroupElement {
    std::vector<Syllable> syls;
    long long ce = 0;
    int cf = 0;

    bool operator==(const GroupElement& o) const { return syls == o.syls && ce == o.ce && cf == o.cf; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

// Deterministic total order (size, then structure); any fixed order works for
// canonical minima, this one roughly orders by complexity.
int compare_elements(const GroupElement& a, const GroupElement& b);
struct ElementLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
        return compare_elements(a, b) < 0;
    }
};
size_t hash_element(const GroupElement& e);
struct ElementHash {
    size_t operator()(const GroupElement& e) const { return hash_element(e); }
};

long long total_letters(const GroupElement& e);

class Group {
public:
    explicit Group(std::shared_ptr<const GroupPreset> preset);

    const GroupPreset& preset() const { return *p_; }
    std::shared_ptr<const GroupPreset> preset_ptr() const { return p_; }

    GroupElement one() const { return GroupElement{}; }
    bool is_identity(const GroupElement& g) const { return g.syls.empty() && g.ce == 0 && g.cf == 0; }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement invert(const GroupElement& g) const;
    GroupElement conjugate(const GroupElement& g, const GroupElement& by) const; // by * g * by^-1

    struct InputLetter {
        int tag;
        Letter letter; // free factor
        int elem;      // finite factor
    };
    GroupElement normal_form(const std::vector<InputLetter>& letters) const;
    GroupElement parse(const std::string& text) const;
    std::string render(const GroupElement& g) const;

    // --- factor-level machinery ---

    // x = w^n? (free factor). Free products: only the empty word, n = 0.
    std::optional<long long> c_power_of_free(int tag, const Word& x) const;
    std::optional<int> c_index_of_finite(int tag, int x) const;

    struct CosetRep {
        Word rep;       // ShortLex-minimal element of x<w>
        long long texp; // x = rep * w^texp
    };
    CosetRep coset_rep_free(int tag, const Word& x) const;

    struct CosetRepFin {
        int rep;
        int cidx; // x = rep * c[cidx]
    };
    CosetRepFin coset_rep_finite(int tag, int x) const;

    // ShortLex-minimal element of <w> x <w> together with the witnessing
    // powers: rep = w^p * x * w^q. Requires x not in <w>. The scan terminates
    // by convexity of p -> d(w^-p, x A_w) in the Cayley tree of the factor.
    struct DCosetMin {
        Word rep;
        long long p = 0, q = 0;
    };
    DCosetMin dcoset_min_free(int tag, const Word& x) const;

    // Exact word length over the preset generating set, by dynamic
    // programming over C-shift exponents between syllables.
    long long word_length(const GroupElement& g) const;

    // Cheapest spelling of w^e (resp. the cidx-th element of C).
    long long c_spell_length(long long e) const;
    long long c_spell_length_finite(int cidx) const;

    std::vector<GroupElement> generators() const;

    struct Ball {
        long long radius = 0;
        bool truncated = false;
        std::vector<GroupElement> elems; // sorted by (word length, element order)
        std::vector<long long> len;
    };
    Ball ball(long long alpha, size_t cap = 2'000'000) const;

    // Incremental normal-form pushes.
    void push_free(GroupElement& g, int tag, const Word& value) const;
    void push_finite(GroupElement& g, int tag, int value) const;
    void push_c_power(GroupElement& g, long long e) const;
    void push_c_index(GroupElement& g, int cidx) const;

    int c_mul(int i, int j) const;
    int c_inv(int i) const;

private:
    long long factor_len(int tag, const Syllable& s) const;
    long long scost_free(int tag, const Word& x, long long lq, long long rq) const;

    std::shared_ptr<const GroupPreset> p_;
};

} // namespace acyl

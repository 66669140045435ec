#include "acyl/words.hpp"

#include <algorithm>
#include <cassert>

namespace acyl {

bool is_reduced(const Word& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] == -w[i - 1]) return false;
    return true;
}

Word reduced(Word w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    for (Letter l : b) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word power(const Word& w, long long n) {
    assert(is_cyclically_reduced(w));
    Word base = n >= 0 ? w : inverse(w);
    long long m = n >= 0 ? n : -n;
    Word out;
    out.reserve(static_cast<size_t>(m) * w.size());
    for (long long i = 0; i < m; ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_reduced(w)) return false;
    if (w.size() >= 2 && w.front() == -w.back()) return false;
    return true;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
    return false;
}

std::optional<long long> power_of(const Word& x, const Word& w) {
    if (x.empty()) return 0;
    if (w.empty()) return std::nullopt;
    if (x.size() % w.size() != 0) return std::nullopt;
    long long n = static_cast<long long>(x.size() / w.size());
    if (x == power(w, n)) return n;
    if (x == power(w, -n)) return -n;
    return std::nullopt;
}

std::pair<Word, int> primitive_root(const Word& w) {
    int L = static_cast<int>(w.size());
    for (int d = 1; d <= L; ++d) {
        if (L % d != 0) continue;
        Word r(w.begin(), w.begin() + d);
        if (power(r, L / d) == w) return {r, L / d};
    }
    return {w, 1};
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        Letter l = w[i];
        int idx = l > 0 ? l - 1 : -l - 1;
        out += idx < static_cast<int>(names.size()) ? names[idx] : ("g" + std::to_string(idx));
        if (l < 0) out += "^-1";
    }
    return out;
}

} // namespace acyl

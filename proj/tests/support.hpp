#pragma once

// Shared deterministic generators for tests. Everything is seeded; no test
// may consume entropy from the environment.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qog/types.hpp"

namespace qog::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    size_t below(size_t n) { return n == 0 ? 0 : static_cast<size_t>(next_unit() * static_cast<double>(n)) % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<size_t>(hi - lo + 1))); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline std::string random_word(Rng& rng, int min_len = 1, int max_len = 8) {
    static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz";
    int len = rng.range(min_len, max_len);
    std::string w;
    for (int i = 0; i < len; ++i) w.push_back(alphabet[rng.below(26)]);
    return w;
}

// Words joined by single spaces; free of reserved codec tokens by construction.
inline std::string random_phrase(Rng& rng, int min_words = 1, int max_words = 5) {
    int n = rng.range(min_words, max_words);
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ' ';
        s += random_word(rng);
    }
    return s;
}

inline QOPair random_pair(Rng& rng) {
    QOPair p;
    p.question = "what is " + random_phrase(rng, 1, 4) + "?";
    while (true) {
        for (auto& opt : p.options) opt = random_phrase(rng, 1, 3);
        bool distinct = true;
        for (int i = 0; i < 4 && distinct; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p.options[i] == p.options[j]) { distinct = false; break; }
        if (distinct) break;
    }
    p.answer_index = rng.range(0, 3);
    return p;
}

inline std::vector<QOPair> random_pairs(Rng& rng, int min_n = 0, int max_n = 5) {
    int n = rng.range(min_n, max_n);
    std::vector<QOPair> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(random_pair(rng));
    return out;
}

// Arbitrary bytes (printable-heavy but with control characters mixed in)
// for decoder fuzzing.
inline std::string random_garbage(Rng& rng, int max_len = 120) {
    int len = static_cast<int>(rng.below(static_cast<size_t>(max_len + 1)));
    std::string s;
    for (int i = 0; i < len; ++i) {
        switch (rng.below(8)) {
            case 0: s += '|'; break;
            case 1: s += "question:"; break;
            case 2: s += "options:"; break;
            case 3: s += ", "; break;
            case 4: s.push_back(static_cast<char>(rng.below(256))); break;
            default: s.push_back(static_cast<char>('a' + rng.below(26))); break;
        }
    }
    return s;
}

inline ContextDoc random_doc(Rng& rng, int min_sentences = 1, int max_sentences = 5) {
    int n = rng.range(min_sentences, max_sentences);
    std::string text;
    for (int i = 0; i < n; ++i) {
        if (i) text += ' ';
        text += random_phrase(rng, 3, 7) + ".";
    }
    return make_context_doc("doc-" + std::to_string(rng.below(100000)), "test", text);
}

}  // namespace qog::testing

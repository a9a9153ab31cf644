#pragma once

#include <random>
#include <string>
#include <vector>

#include "slopelab/words.hpp"

namespace testing_support {

// Plain-string model of a free group: lowercase letter = generator,
// uppercase = inverse. Independent of the Word implementation.
inline std::string stack_reduce(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!out.empty() && out.back() != c && std::tolower(out.back()) == std::tolower(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

inline std::string random_letters(std::mt19937_64& rng, const std::string& gens, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
    std::string s;
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t k = pick(rng);
        char c = gens[k / 2];
        s.push_back(k % 2 ? static_cast<char>(std::toupper(c)) : c);
    }
    return s;
}

inline slopelab::Word word_from_letters(const std::string& s) {
    std::vector<slopelab::Syllable> raw;
    for (char c : s) {
        const bool inv = std::isupper(static_cast<unsigned char>(c));
        raw.push_back({std::string(1, static_cast<char>(std::tolower(c))), inv ? -1 : 1});
    }
    return slopelab::Word::reduce(raw);
}

inline std::string letters_of(const slopelab::Word& w) {
    std::string s;
    for (const auto& syl : w.syllables()) {
        char c = syl.gen[0];
        char l = syl.exp > 0 ? c : static_cast<char>(std::toupper(c));
        for (std::int64_t i = 0; i < (syl.exp > 0 ? syl.exp : -syl.exp); ++i) s.push_back(l);
    }
    return s;
}

inline slopelab::Word random_word(std::mt19937_64& rng, const std::string& gens, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return word_from_letters(random_letters(rng, gens, len(rng)));
}

} // namespace testing_support

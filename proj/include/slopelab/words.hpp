#pragma once

// Free-group words in syllable (run-length) form.
//
// A Word is always freely reduced: adjacent syllables carry distinct
// generators and every exponent is nonzero. The empty word is the identity.
// Conventions used throughout the library:
//   conjugate(g, b)  = b^-1 g b        (written g^b)
//   commutator(g, h) = g h g^-1 h^-1

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slopelab/errors.hpp"

namespace slopelab {

struct Syllable {
    std::string gen;
    std::int64_t exp = 0;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
public:
    Word() = default;

    /// Freely reduces an arbitrary syllable sequence (zero exponents dropped).
    static Word reduce(std::span<const Syllable> raw);
    static Word generator(std::string name, std::int64_t exp = 1);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    std::size_t syllable_count() const { return syl_.size(); }
    /// Letter length: sum of |exponent|.
    std::uint64_t length() const;
    /// Exponent sum of one generator.
    std::int64_t exponent_sum(std::string_view gen) const;

    Word inverse() const;
    Word pow(std::int64_t k) const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend bool operator<(const Word& a, const Word& b);

private:
    std::vector<Syllable> syl_;
};

/// Free reduction of a raw syllable sequence; idempotent.
Word free_reduce(std::span<const Syllable> raw);

struct CyclicReduction {
    Word core;
    Word conjugator;
};

/// w = conjugator^-1 * core * conjugator with core cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

/// True when the first and last syllables cannot be merged.
bool is_cyclically_reduced(const Word& w);

Word conjugate(const Word& g, const Word& b);
Word commutator(const Word& g, const Word& h);

/// v^{v^u} v^-2 with v^u = u^-1 v u.
Word bmt_word(const Word& v, const Word& u);

/// Image of w under the homomorphism sending each listed generator to a word;
/// unlisted generators are fixed.
Word substitute(const Word& w, const std::map<std::string, Word>& images);

/// Generator names in order of first appearance.
std::vector<std::string> generators_in(const Word& w);

/// Ordered generator set. Letters used by the numeric kernels are encoded as
/// 2*index for a generator and 2*index+1 for its inverse.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    /// Throws UnknownGenerator for letters outside the alphabet.
    void check(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

bool is_valid_generator_name(std::string_view name);

using Letter = std::uint32_t;
inline constexpr Letter inverse_letter(Letter x) { return x ^ 1u; }

/// Expands w into letters over the alphabet; throws UnknownGenerator.
std::vector<Letter> to_letters(const Word& w, const Alphabet& alphabet);
Word from_letters(std::span<const Letter> letters, const Alphabet& alphabet);
/// Stack-based free reduction on letter sequences.
std::vector<Letter> reduce_letters(std::span<const Letter> letters);

/// Text form "a b^-1 a^-1 b a"; the identity renders as the empty string.
std::string render(const Word& w);

/// Strict syllable syntax: whitespace-separated `g`, `g^k`, `g^-k`.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Extended syntax used on the command line: syllables plus parentheses,
/// commutator brackets `[u,v]`, conjugation `u^v` (v a word, not an integer)
/// and powers `(u)^k`. An empty alphabet accepts any generator name.
Word parse_expression(std::string_view text, const Alphabet& alphabet);

} // namespace slopelab

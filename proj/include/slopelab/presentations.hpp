#pragma once

// Finitely presented groups with a peripheral (meridian, longitude) pair.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slopelab/smith.hpp"
#include "slopelab/words.hpp"

namespace slopelab {

struct Presentation {
    std::string name;
    Alphabet gens;
    std::vector<Word> relators;
    std::optional<Word> meridian;
    std::optional<Word> longitude;

    bool has_peripheral() const { return meridian.has_value() && longitude.has_value(); }
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Finitely generated abelian group Z^rank + Z/d_1 + ... with d_1 | d_2 | ..., d_i >= 2.
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string render(const AbelianGroup& g);

/// Coordinates of a homology class: one entry per torsion factor (reduced
/// into [0, d)), followed by one entry per free factor.
using HomologyClass = std::vector<BigInt>;

bool is_zero(const HomologyClass& c);
std::string render(const HomologyClass& c);

/// Abelianization together with the coordinate map Z^gens -> H_1.
///
/// Coordinates are canonicalized: in each free coordinate the first generator
/// with a nonzero image maps to a positive value, and in each Z/d coordinate it
/// maps to gcd(value, d).
class Abelianizer {
public:
    explicit Abelianizer(const Presentation& p);

    const AbelianGroup& group() const { return group_; }
    HomologyClass class_of(const Word& w) const;

private:
    Alphabet gens_;
    AbelianGroup group_;
    // For each output coordinate: modulus (0 for free) and a column of V.
    std::vector<BigInt> modulus_;
    IntMatrix columns_;
};

Presentation figure_eight();
Presentation torus_knot(std::int64_t p, std::int64_t q);

AbelianGroup abelianization(const Presentation& p);
HomologyClass homology_class(const Presentation& p, const Word& w);

/// Line format:
///   name: <string>
///   gens: a h
///   rel: <word>          (repeatable)
///   meridian: <word>
///   longitude: <word>
/// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
std::string render_presentation(const Presentation& p);

Presentation load_presentation(const std::string& path);

} // namespace slopelab

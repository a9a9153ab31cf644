#pragma once

// Slopes on the boundary torus and Dehn-filled quotient presentations.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slopelab/presentations.hpp"

namespace slopelab {

/// p/q in lowest terms with q >= 0; the slope at infinity is 1/0.
class Slope {
public:
    /// Canonicalizes signs; throws InvalidSlope when gcd(p, q) != 1.
    Slope(std::int64_t p, std::int64_t q);
    static Slope infinity() { return Slope(1, 0); }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_infinity() const { return q_ == 0; }

    /// Ascending by value with infinity last.
    friend bool operator<(const Slope& a, const Slope& b);
    friend bool operator==(const Slope&, const Slope&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

std::string render(const Slope& s);
/// Accepts "p/q", "p" (meaning p/1) and "inf".
Slope parse_slope(std::string_view text);

/// Comma-separated list of slopes, or a window "a..b" with denominator d
/// (pass d separately). Non-coprime window entries are skipped.
std::vector<Slope> slope_window(std::int64_t lo, std::int64_t hi, std::int64_t denom);

/// meridian^p * longitude^q, freely reduced.
Word slope_element(const Presentation& p, const Slope& r);

/// Adds the slope element as a relator; peripheral words are kept.
Presentation fill(const Presentation& p, const Slope& r);

/// |p q' - p' q|.
std::uint64_t slope_distance(const Slope& a, const Slope& b);

} // namespace slopelab

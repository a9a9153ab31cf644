#pragma once

// Brooks counting quasimorphisms on free-group words. Everything here is an
// estimate: homogenization is approximated by a finite power and defects by
// a maximum over a finite sample.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slopelab/words.hpp"

namespace slopelab {

class BrooksSpec {
public:
    /// Throws EmptyPattern for the identity.
    explicit BrooksSpec(Word pattern);
    const Word& pattern() const { return pattern_; }

private:
    Word pattern_;
};

/// Overlapping occurrences of the pattern in the reduced letter sequence of g
/// minus occurrences of the pattern's inverse.
std::int64_t brooks_count(const BrooksSpec& spec, const Word& g);

inline constexpr std::int64_t default_homogenization_power = 64;

/// brooks_count(g^N) / N.
double homogenize_estimate(const BrooksSpec& spec, const Word& g, std::int64_t n = default_homogenization_power);

/// Largest |phi(gh) - phi(g) - phi(h)| over the sample with phi the
/// homogenized estimate at power N. A lower estimate of the defect.
double defect_estimate(const BrooksSpec& spec, const std::vector<std::pair<Word, Word>>& sample,
                       std::int64_t n = default_homogenization_power);

struct SclEstimate {
    double value = 0;
    std::string kind = "heuristic-lower";
    std::int64_t power = 0;
    double defect_bound = 0;
};

/// |homogenize_estimate| / (2 defect_bound). Throws NonpositiveDefect.
SclEstimate bavard_lower_estimate(const BrooksSpec& spec, const Word& g, std::int64_t n, double defect_bound);

} // namespace slopelab

#include "slopelab/quasimorphs.hpp"

#include <cmath>

namespace slopelab {

namespace {

struct SignedLetter {
    const std::string* gen;
    int sign;
    bool operator==(const SignedLetter& o) const { return sign == o.sign && *gen == *o.gen; }
};

std::vector<SignedLetter> expand(const Word& w) {
    std::vector<SignedLetter> out;
    out.reserve(w.length());
    for (const auto& s : w.syllables()) {
        const int sign = s.exp > 0 ? 1 : -1;
        for (std::int64_t i = 0; i < s.exp * sign; ++i) out.push_back({&s.gen, sign});
    }
    return out;
}

std::int64_t occurrences(const std::vector<SignedLetter>& text, const std::vector<SignedLetter>& pat) {
    if (pat.size() > text.size()) return 0;
    std::int64_t n = 0;
    for (std::size_t i = 0; i + pat.size() <= text.size(); ++i) {
        std::size_t k = 0;
        while (k < pat.size() && text[i + k] == pat[k]) ++k;
        if (k == pat.size()) ++n;
    }
    return n;
}

} // namespace

BrooksSpec::BrooksSpec(Word pattern) : pattern_(std::move(pattern)) {
    if (pattern_.is_identity()) throw EmptyPattern("Brooks pattern must be a nonempty reduced word");
}

std::int64_t brooks_count(const BrooksSpec& spec, const Word& g) {
    const Word inv = spec.pattern().inverse();
    const auto text = expand(g);
    return occurrences(text, expand(spec.pattern())) - occurrences(text, expand(inv));
}

double homogenize_estimate(const BrooksSpec& spec, const Word& g, std::int64_t n) {
    if (n < 1) throw Error("homogenization power must be at least 1");
    return static_cast<double>(brooks_count(spec, g.pow(n))) / static_cast<double>(n);
}

double defect_estimate(const BrooksSpec& spec, const std::vector<std::pair<Word, Word>>& sample, std::int64_t n) {
    if (sample.empty()) throw Error("defect_estimate needs a nonempty sample");
    double worst = 0;
    for (const auto& [g, h] : sample) {
        const double d = homogenize_estimate(spec, g * h, n) - homogenize_estimate(spec, g, n) -
                         homogenize_estimate(spec, h, n);
        worst = std::max(worst, std::abs(d));
    }
    return worst;
}

SclEstimate bavard_lower_estimate(const BrooksSpec& spec, const Word& g, std::int64_t n, double defect_bound) {
    if (!(defect_bound > 0)) throw NonpositiveDefect("defect bound must be positive");
    SclEstimate e;
    e.value = std::abs(homogenize_estimate(spec, g, n)) / (2 * defect_bound);
    e.power = n;
    e.defect_bound = defect_bound;
    return e;
}

} // namespace slopelab

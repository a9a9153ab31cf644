#include "slopelab/fillings.hpp"

#include <charconv>
#include <numeric>

namespace slopelab {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (std::gcd(p, q) != 1)
        throw InvalidSlope("slope " + std::to_string(p) + "/" + std::to_string(q) +
                           " is not in lowest terms");
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

bool operator<(const Slope& a, const Slope& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    // q > 0 on both sides
    return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
}

std::string render(const Slope& s) { return std::to_string(s.p()) + "/" + std::to_string(s.q()); }

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || b == e)
        throw SyntaxError("malformed slope '" + std::string(whole) + "'");
    return v;
}

} // namespace

Slope parse_slope(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "1/0") return Slope::infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Slope(parse_int(text, text), 1);
    return Slope(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::vector<Slope> slope_window(std::int64_t lo, std::int64_t hi, std::int64_t denom) {
    if (denom < 0) throw InvalidSlope("window denominator must be nonnegative");
    std::vector<Slope> out;
    for (std::int64_t p = lo; p <= hi; ++p)
        if (std::gcd(p, denom) == 1) out.emplace_back(p, denom);
    return out;
}

Word slope_element(const Presentation& p, const Slope& r) {
    if (!p.has_peripheral())
        throw MissingPeripheral("presentation '" + p.name + "' has no peripheral pair");
    return p.meridian->pow(r.p()) * p.longitude->pow(r.q());
}

Presentation fill(const Presentation& p, const Slope& r) {
    Presentation out = p;
    out.relators.push_back(slope_element(p, r));
    out.name = p.name + "(" + render(r) + ")";
    return out;
}

std::uint64_t slope_distance(const Slope& a, const Slope& b) {
    __int128 d = static_cast<__int128>(a.p()) * b.q() - static_cast<__int128>(b.p()) * a.q();
    return static_cast<std::uint64_t>(d < 0 ? -d : d);
}

} // namespace slopelab

#include "slopelab/torusnf.hpp"

#include <numeric>

namespace slopelab {

namespace {

std::int64_t absval(std::int64_t v) { return v < 0 ? -v : v; }

void check_parameters(std::int64_t p, std::int64_t q) {
    if (absval(p) < 2 || absval(q) < 2 || std::gcd(p, q) != 1)
        throw InvalidTorusParameters("torus parameters need |p|,|q| >= 2 and gcd(p,q) = 1");
}

std::int64_t residue(std::int64_t e, std::int64_t m) {
    std::int64_t r = e % m;
    return r < 0 ? r + m : r;
}

// Stack push with merging; the stack stays alternating with nonzero residues.
void push(std::vector<Syllable>& stack, const Syllable& s, std::int64_t mp, std::int64_t mq) {
    const std::int64_t m = s.gen == "x" ? mp : mq;
    std::int64_t e = residue(s.exp, m);
    if (e == 0) return;
    if (!stack.empty() && stack.back().gen == s.gen) {
        e = residue(stack.back().exp + e, m);
        if (e == 0)
            stack.pop_back();
        else
            stack.back().exp = e;
        return;
    }
    stack.push_back({s.gen, e});
}

// Cyclic reduction in the free product: merge the two ends while they lie in
// the same factor.
std::vector<Syllable> cyclic_core(std::vector<Syllable> s, std::int64_t mp, std::int64_t mq) {
    std::size_t lo = 0, hi = s.size();
    while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen) {
        const std::int64_t m = s[lo].gen == "x" ? mp : mq;
        const std::int64_t e = residue(s[lo].exp + s[hi - 1].exp, m);
        --hi;
        if (e == 0) {
            ++lo;
        } else {
            s[lo].exp = e;
        }
    }
    return {s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi)};
}

} // namespace

std::vector<Syllable> reduce_free_product(std::int64_t p, std::int64_t q, const std::vector<Syllable>& syllables) {
    check_parameters(p, q);
    std::vector<Syllable> stack;
    for (const auto& s : syllables) {
        if (s.gen != "x" && s.gen != "y") throw UnknownGenerator(s.gen);
        push(stack, s, absval(p), absval(q));
    }
    return stack;
}

TorusNormalForm normal_form(std::int64_t p, std::int64_t q, const Word& w) {
    check_parameters(p, q);
    TorusNormalForm nf;
    for (const auto& s : w.syllables()) {
        if (s.gen != "x" && s.gen != "y") throw UnknownGenerator(s.gen);
        nf.degree += (s.gen == "x" ? q : p) * s.exp;
        push(nf.syllables, s, absval(p), absval(q));
    }
    return nf;
}

bool is_trivial_torus(std::int64_t p, std::int64_t q, const Word& w) {
    const auto nf = normal_form(p, q, w);
    return nf.syllables.empty() && nf.degree == 0;
}

bool conjugate_torus(std::int64_t p, std::int64_t q, const Word& w1, const Word& w2) {
    const auto a = normal_form(p, q, w1), b = normal_form(p, q, w2);
    if (a.degree != b.degree) return false;
    const auto ca = cyclic_core(a.syllables, absval(p), absval(q));
    const auto cb = cyclic_core(b.syllables, absval(p), absval(q));
    if (ca.size() != cb.size()) return false;
    if (ca.size() <= 1) return ca == cb;
    const std::size_t n = ca.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) same = ca[(i + shift) % n] == cb[i];
        if (same) return true;
    }
    return false;
}

} // namespace slopelab

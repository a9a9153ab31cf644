#include "slopelab/constructions.hpp"

#include <numeric>
#include <string>

namespace slopelab {

Word torus_gn(std::int64_t p, std::int64_t q, std::int64_t n) {
    if ((p < 0 ? -p : p) < 2 || (q < 0 ? -q : q) < 2 || std::gcd(p, q) != 1)
        throw InvalidTorusParameters("torus parameters need |p|,|q| >= 2 and gcd(p,q) = 1");
    if (n < 1) throw Error("torus_gn needs n >= 1, got " + std::to_string(n));
    const Word x = Word::generator("x"), y = Word::generator("y");
    const Word w = y * (x * y).pow(n + 1);
    return bmt_word(commutator(x, y), w);
}

Word bmt_conjugate(const Word& g, const Word& alpha) { return bmt_word(g, alpha); }

Word separation_commutator(const Word& a, const Word& g_k, const Word& sigma) {
    return commutator(conjugate(g_k, a.inverse()), sigma);
}

Word separation_combine(const Word& h, const Word& g, std::int64_t qstep, std::int64_t n1, std::int64_t n2) {
    if (qstep < 1 || n1 < 1 || n2 < 1) throw Error("separation_combine needs qstep, n1, n2 >= 1");
    return h.pow(qstep * n1 * n2 + 1) * g.pow(n1 * n2);
}

Word powered_product(const Word& g, const Word& h, std::int64_t m, std::int64_t n) {
    if (m == 0 || n == 0) throw ZeroExponent("powered_product exponents");
    return g.pow(m) * h.pow(n);
}

Word nonrigid_alpha(const Word& g, const Word& s, std::int64_t p, std::int64_t m) {
    if (p < 1 || m < 1) throw Error("nonrigid_alpha needs p, m >= 1");
    return g.pow(p + p * m - 1) * s * g.pow(1 - p) * s.inverse();
}

Word fig8_persistent() { return commutator(Word::generator("a"), Word::generator("h")); }

} // namespace slopelab

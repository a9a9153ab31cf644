#pragma once

// Builders for the explicit elements used in slope-set arguments. Every
// output is freely reduced. Each builder states its literal expansion, since
// the conjugation shorthand a^b = b^-1 a b is easy to invert by mistake.

#include <cstdint>

#include "slopelab/words.hpp"

namespace slopelab {

/// g^{g^{w_n}} g^-2 with g = [x, y] and w_n = y (x y)^{n+1}, n >= 1.
Word torus_gn(std::int64_t p, std::int64_t q, std::int64_t n);

/// bmt_word(g, alpha) = (alpha^-1 g alpha)^-1 g (alpha^-1 g alpha) g^-2.
Word bmt_conjugate(const Word& g, const Word& alpha);

/// [a g_k a^-1, sigma] = commutator(conjugate(g_k, a^-1), sigma).
Word separation_commutator(const Word& a, const Word& g_k, const Word& sigma);

/// h^{qstep n1 n2 + 1} g^{n1 n2}; qstep, n1, n2 >= 1.
Word separation_combine(const Word& h, const Word& g, std::int64_t qstep, std::int64_t n1, std::int64_t n2);

/// g^m h^n with m, n nonzero.
Word powered_product(const Word& g, const Word& h, std::int64_t m, std::int64_t n);

/// g^{p + pm - 1} s g^{-p + 1} s^-1; p, m >= 1.
Word nonrigid_alpha(const Word& g, const Word& s, std::int64_t p, std::int64_t m);

/// [a, h] over the figure-eight generators.
Word fig8_persistent();

} // namespace slopelab

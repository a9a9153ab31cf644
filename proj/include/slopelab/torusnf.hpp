#pragma once

// Word and conjugacy problems in the torus-knot group <x, y | x^p = y^q>.
//
// z = x^p = y^q is central and the quotient by <z> is Z_p * Z_q. A word is
// recorded by its degree (x -> q, y -> p, so z has degree pq) and its reduced
// image in the free product.

#include <cstdint>
#include <vector>

#include "slopelab/words.hpp"

namespace slopelab {

struct TorusNormalForm {
    std::int64_t degree = 0;
    /// Alternating x/y syllables with residues in [1, |p|-1] resp. [1, |q|-1].
    std::vector<Syllable> syllables;
    friend bool operator==(const TorusNormalForm&, const TorusNormalForm&) = default;
};

/// Throws InvalidTorusParameters unless |p|,|q| >= 2 and gcd(p,q) = 1, and
/// UnknownGenerator for letters other than x and y.
TorusNormalForm normal_form(std::int64_t p, std::int64_t q, const Word& w);

/// Re-reduces an arbitrary syllable sequence in Z_p * Z_q.
std::vector<Syllable> reduce_free_product(std::int64_t p, std::int64_t q, const std::vector<Syllable>& syllables);

bool is_trivial_torus(std::int64_t p, std::int64_t q, const Word& w);
bool conjugate_torus(std::int64_t p, std::int64_t q, const Word& w1, const Word& w2);

} // namespace slopelab

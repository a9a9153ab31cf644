#pragma once

// Bounded Dehn-style rewriting that proves a word trivial by exhibiting it as
// a product of conjugates of relators in the free group.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "slopelab/presentations.hpp"

namespace slopelab {

/// conjugate(relator^sign, conjugator) = conjugator^-1 relator^sign conjugator.
struct RelatorConjugate {
    Word conjugator;
    std::size_t relator = 0;
    int sign = 1;

    friend bool operator==(const RelatorConjugate&, const RelatorConjugate&) = default;
};

/// w equals the ordered product of the factors in the free group.
struct NormalClosureWitness {
    std::vector<RelatorConjugate> factors;

    friend bool operator==(const NormalClosureWitness&, const NormalClosureWitness&) = default;
};

/// Free-group product of the witness factors.
Word witness_product(const Presentation& p, const NormalClosureWitness& witness);

/// Replays the witness: true iff its product freely reduces to w.
bool check_witness(const Presentation& p, const Word& w, const NormalClosureWitness& witness);

/// Witness for c^-1 w c built from a witness for w.
NormalClosureWitness conjugate_witness(const NormalClosureWitness& witness, const Word& c);
/// Witness for w^-1 built from a witness for w.
NormalClosureWitness invert_witness(const NormalClosureWitness& witness);

/// A word already known to lie in the normal closure, with its witness. Used
/// as an extra relator; each use expands into the lemma's own factors.
struct DerivedRelator {
    Word word;
    NormalClosureWitness witness;
};

/// Greedy rewriting on the cyclic word: repeatedly replace a piece s of a
/// cyclic permutation s t of some relator^+-1 (with |s| > |t|) by t^-1, picking
/// the largest length reduction (earliest position, then earliest relator
/// rotation on ties). Each replacement spends one relator conjugate; gives up
/// after max_steps replacements or when no replacement shortens the word.
/// Lemmas act as additional relators; a step through a lemma counts once.
std::optional<NormalClosureWitness> dehn_certify(const Presentation& p, const Word& w, std::size_t max_steps,
                                                 std::span<const DerivedRelator> lemmas = {});

} // namespace slopelab

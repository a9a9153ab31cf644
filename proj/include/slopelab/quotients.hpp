#pragma once

// Homomorphisms from a finitely presented group onto finite targets.
//
// Enumeration walks generator-image tuples in lexicographic order (first
// generator most significant) and checks each relator as soon as every
// generator it mentions has an image. The serial enumerator is the reference;
// the OpenMP one splits on the first generator's image and must return the
// identical sequence.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slopelab/groups.hpp"
#include "slopelab/presentations.hpp"

namespace slopelab {

using ImageTuple = std::vector<Elem>;

struct HomSearchStats {
    /// Partial and complete assignments examined.
    std::uint64_t assignments = 0;
    /// False when the assignment limit cut the enumeration short.
    bool complete = true;
};

/// Relators compiled to letters over a fixed generator count.
class RelatorSystem {
public:
    RelatorSystem(const Presentation& p);
    RelatorSystem(std::size_t generators, std::vector<std::vector<Letter>> relators);

    std::size_t generators() const { return generators_; }
    const std::vector<std::vector<Letter>>& relators() const { return relators_; }
    /// Relator indices whose largest generator index equals depth.
    const std::vector<std::size_t>& checks_at(std::size_t depth) const { return checks_[depth]; }
    const std::vector<std::size_t>& constant_checks() const { return constant_; }

private:
    void index();

    std::size_t generators_;
    std::vector<std::vector<Letter>> relators_;
    std::vector<std::vector<std::size_t>> checks_;
    std::vector<std::size_t> constant_;
};

Elem evaluate(const FiniteGroup& g, std::span<const Elem> images, std::span<const Letter> letters);

/// Visits homomorphisms in canonical order until the visitor returns false.
/// max_assignments == 0 means unlimited.
void for_each_hom(const FiniteGroup& g, const RelatorSystem& rels, std::uint64_t max_assignments,
                  HomSearchStats& stats, const std::function<bool(const ImageTuple&)>& visit);

std::vector<ImageTuple> enumerate_homs_serial(const FiniteGroup& g, const RelatorSystem& rels,
                                              std::uint64_t max_assignments, HomSearchStats& stats);

/// Same output and statistics as the serial enumerator.
std::vector<ImageTuple> enumerate_homs_parallel(const FiniteGroup& g, const RelatorSystem& rels,
                                                std::uint64_t max_assignments, HomSearchStats& stats);

struct FiniteQuotient {
    std::string target;
    std::vector<std::string> generators;
    ImageTuple images;
    Elem word_image = 0;

    const FiniteGroup& group() const { return standard_group(target); }
    std::vector<std::string> image_labels() const;
};

/// First homomorphism (targets in the given order, tuples in canonical order)
/// under which w is not the identity.
std::optional<FiniteQuotient> finite_quotient_search(const Presentation& p, const Word& w,
                                                     const std::vector<std::string>& targets,
                                                     std::uint64_t max_assignments_per_target,
                                                     HomSearchStats* stats = nullptr);

} // namespace slopelab

#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy with
// lookahead). A completed table is the regular permutation representation of
// the presented group, so it decides the word problem exactly. Running out of
// room is not evidence of infiniteness.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slopelab/presentations.hpp"

namespace slopelab {

class CosetTable {
public:
    CosetTable(Alphabet gens, std::size_t cosets, std::vector<std::int32_t> action);

    const Alphabet& gens() const { return gens_; }
    std::size_t cosets() const { return cosets_; }
    std::size_t columns() const { return 2 * gens_.size(); }
    std::size_t act(std::size_t coset, Letter x) const {
        return static_cast<std::size_t>(action_[coset * columns() + x]);
    }
    std::size_t apply(std::size_t coset, std::span<const Letter> letters) const;
    /// Permutation of cosets induced by a word.
    std::vector<std::size_t> permutation(const Word& w) const;

private:
    Alphabet gens_;
    std::size_t cosets_;
    std::vector<std::int32_t> action_;
};

struct ToddCoxeterOptions {
    std::size_t max_cosets = 200000;
    /// Total coset definitions allowed; 0 means 32 * max_cosets.
    std::uint64_t max_definitions = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct CosetEnumerationStats {
    std::uint64_t defined = 0;
    std::size_t max_alive = 0;
    std::size_t lookaheads = 0;
    bool timed_out = false;
};

struct CosetEnumeration {
    std::optional<CosetTable> table; ///< empty when the budget was exceeded
    CosetEnumerationStats stats;

    bool completed() const { return table.has_value(); }
};

CosetEnumeration todd_coxeter(const Presentation& p, const ToddCoxeterOptions& options);
CosetEnumeration todd_coxeter(const Presentation& p, std::size_t max_cosets);

/// True iff w acts as the identity permutation (the regular representation is faithful).
bool decide_in_finite(const CosetTable& table, const Word& w);

} // namespace slopelab

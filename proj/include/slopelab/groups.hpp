#pragma once

// Finite target groups for homomorphism search, stored as Cayley tables.
//
// Element 0 is always the identity. The remaining elements follow a fixed
// canonical order (lexicographic one-line notation for S_n, lexicographic
// normalized entries for PSL(2,p)), which makes homomorphism enumeration
// order, and hence certificates, reproducible.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slopelab/errors.hpp"

namespace slopelab {

using Elem = std::uint32_t;

class FiniteGroup {
public:
    enum class Kind { Symmetric, PSL2, Table };

    /// S_n acting on {1..n}; products act on the right: i^(gh) = (i^g)^h.
    static FiniteGroup symmetric(int n);
    /// PSL(2, p) for an odd prime p; elements are +-[[a,b],[c,d]] mod p.
    static FiniteGroup psl2(int p);
    /// Explicit multiplication table; validated as a group with identity at 0.
    static FiniteGroup from_table(std::string name, const std::vector<std::vector<Elem>>& table);

    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }
    /// n for S_n, p for PSL(2,p), 0 for tables.
    int parameter() const { return parameter_; }
    std::size_t order() const { return order_; }

    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    static constexpr Elem identity() { return 0; }

    /// Cycle notation "(1 2)(3 4 5)", matrix "[[a,b],[c,d]]", or "e<k>".
    std::string label(Elem e) const;
    std::optional<Elem> find(std::string_view label) const;

private:
    FiniteGroup() = default;
    void finish(std::vector<std::string> labels);

    std::string name_;
    Kind kind_ = Kind::Table;
    int parameter_ = 0;
    std::size_t order_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::vector<std::string> labels_;
};

/// Names "S<n>" (1 <= n <= 6) and "PSL2_<p>" (odd prime p <= 31); tables are
/// built once and cached. Throws Error for unsupported names.
const FiniteGroup& standard_group(std::string_view name);

/// Makes an explicit-table group resolvable by name through standard_group.
/// Throws Error if the name is already taken.
const FiniteGroup& register_group(FiniteGroup g);

/// S_2..S_symmax followed by PSL(2,p) for each listed prime.
std::vector<std::string> target_ladder(int sym_max, const std::vector<int>& psl2_primes);

/// Permutation helpers on {1..n}, used by independent certificate replay.
using Permutation = std::vector<int>; // zero-based images
std::optional<Permutation> parse_cycles(std::string_view text, int degree);
std::string render_cycles(const Permutation& perm);

} // namespace slopelab

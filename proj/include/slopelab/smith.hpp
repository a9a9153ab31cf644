#pragma once

// Smith normal form over the integers with a tracked column transform.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace slopelab {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithForm {
    /// Nonzero diagonal entries d_1 | d_2 | ... (all positive).
    std::vector<BigInt> diagonal;
    /// Unimodular n x n matrix V with U * A * V = D for some unimodular U.
    IntMatrix column_transform;
};

/// A is m x n (rows may be empty; n is passed explicitly for m = 0).
SmithForm smith_normal_form(IntMatrix a, std::size_t columns);

} // namespace slopelab

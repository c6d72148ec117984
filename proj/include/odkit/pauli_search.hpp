#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "odkit/design.hpp"

namespace odkit {

// Search for full designs of order 2^k built from signed-permutation units
// X(v)Z(d): the unit for translation v occupies cells (g, g XOR v) with
// signs eps * (-1)^{d . (g XOR v)}. Each translation carries exactly one
// unit, so supports tile the square; the search assigns each unit a
// variable plus its (d, eps) so that all Gram and anticommutation defects
// cancel class by class.
struct PauliSearchOptions {
    std::uint64_t node_budget = 40'000'000;
};

struct PauliSearchStats {
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

// Full design of order 2^k and the given type (sum must be 2^k).
std::optional<OrthogonalDesign> search_full_od(unsigned k, const std::vector<i64>& type,
                                               const PauliSearchOptions& opt = {},
                                               PauliSearchStats* stats = nullptr);

// Pair of full designs of order 2^k on disjoint variables, every cross
// coefficient pair amicable, ready for the [[X,Y],[-Y,X]] doubling.
struct AmicableODPair {
    OrthogonalDesign x, y;
};
std::optional<AmicableODPair> search_amicable_pair(unsigned k, const std::vector<i64>& type_x,
                                                   const std::vector<i64>& type_y,
                                                   const PauliSearchOptions& opt = {},
                                                   PauliSearchStats* stats = nullptr);

}  // namespace odkit

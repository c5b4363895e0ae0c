#pragma once

#include <cstddef>
#include <cstdint>

namespace oracles {

/// Labeled orders on n points, counted by testing every reflexive 0/1
/// matrix for transitivity (and antisymmetry unless `preorder`).
std::uint64_t count_orders_by_matrix(std::size_t n, bool preorder);

/// Labeled topologies on n points, counted by closing every subbasis
/// family under union and intersection and collecting distinct results.
std::uint64_t count_topologies_by_closure(std::size_t n);

/// Frozen golden values for sizes 0..5 (topologies 0..4).
inline constexpr std::uint64_t kPosets[] = {1, 1, 3, 19, 219, 4231};
inline constexpr std::uint64_t kPreorders[] = {1, 1, 4, 29, 355, 6942};
inline constexpr std::uint64_t kTopologies[] = {1, 1, 4, 29, 355};

}  // namespace oracles

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "revposet/maps.hpp"
#include "revposet/presentation.hpp"
#include "revposet/window.hpp"

namespace revposet {

/// A topology on at most 64 named points; open sets are bitmasks.
class FiniteSpace {
 public:
  /// Throws PreconditionError unless `opens` contains the empty set and the
  /// whole space and is closed under pairwise union and intersection.
  FiniteSpace(std::vector<std::string> points, std::vector<std::uint64_t> opens);
  /// Points named "0", "1", ...
  static FiniteSpace unnamed(std::size_t n, std::vector<std::uint64_t> opens);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  /// Sorted, without duplicates.
  const std::vector<std::uint64_t>& opens() const { return opens_; }
  bool is_open(std::uint64_t set) const;
  std::uint64_t full() const;

  /// {"points": [names], "opens": [[names]]}
  std::string to_json() const;

 private:
  std::vector<std::string> points_;
  std::vector<std::uint64_t> opens_;
};

enum class TopologyKind { Alexandroff, Upper };

/// x <= y iff x lies in the closure of {y}, i.e. every open set containing x
/// contains y. Always flagged as a preorder.
FiniteOrder specialization(const FiniteSpace& s);
/// Opens are all up-sets.
FiniteSpace alexandroff_space(const FiniteOrder& q);
/// Generated by the complements of principal down-sets.
FiniteSpace upper_space(const FiniteOrder& q);
FiniteSpace order_space(const FiniteOrder& q, TopologyKind kind);

/// Membership in x's up-set.
std::function<bool(const ElementId&)> alexandroff_basic(const PosetPresentation& p,
                                                        const ElementId& x);
/// Membership in the complement of x's down-set.
std::function<bool(const ElementId&)> upper_subbasic(const PosetPresentation& p,
                                                     const ElementId& x);

/// Continuity for the Alexandroff topology is order preservation; delegates
/// to is_order_preserving on window n.
CheckReport alexandroff_continuous(const PosetPresentation& p, const SelfMap& h, std::size_t n);

/// Claimed description of h^{-1}(x down-set): the union of the down-sets of
/// `down_generators` and the finite set `finite`.
struct PreimageClaim {
  std::vector<ElementId> down_generators;
  std::vector<ElementId> finite;
};

/// Checks on window n that h(y) <= x exactly when y lies in the claimed set.
/// A violation names the element on which the two sides differ. Throws
/// PreconditionError for claims that reference invalid elements.
CheckReport upper_preimage_certificate_check(const PosetPresentation& p, const SelfMap& h,
                                             const ElementId& x, const PreimageClaim& claim,
                                             std::size_t n);

/// Every continuous bijection has a continuous inverse.
struct SpaceReversibility {
  bool reversible = true;
  std::optional<Permutation> counterexample;
};
/// Throws SizeLimitError above kMaxBruteForcePoints.
SpaceReversibility finite_space_reversible(const FiniteSpace& s);
bool is_continuous(const FiniteSpace& s, const Permutation& p);

/// All topologies on n labeled points, found by testing every family of
/// subsets for the open-set axioms. Throws SizeLimitError for n > 4.
void for_each_topology(std::size_t n, const std::function<void(const FiniteSpace&)>& fn);

/// Levels X_0, X_1, ... : each is the set of minimal points among those not
/// in earlier levels.
struct LevelDecomposition {
  std::vector<std::vector<std::size_t>> levels;

  /// {"levels": [[names]]}
  std::string to_json(const std::vector<std::string>& names) const;
};

/// Throws SizeLimitError when more than `rank_bound` levels are needed.
LevelDecomposition level_sets(const FiniteOrder& f, std::size_t rank_bound = 1024);

/// The minimal points of an up-set U and whether they generate it.
struct MinUp {
  std::vector<std::size_t> minimal;
  bool generates = false;
};
/// Throws PreconditionError when `up` is not an up-set.
MinUp min_up(const FiniteOrder& f, const std::vector<std::size_t>& up);

/// The point i of a finite order as an element id, ":p<i>".
ElementId point_id(std::size_t i);

/// g maps every level onto itself. Throws PreconditionError unless g is an
/// automorphism.
CheckReport level_preserving_check(const FiniteOrder& f, const Permutation& g);

}  // namespace revposet

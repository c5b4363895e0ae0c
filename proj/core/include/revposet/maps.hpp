#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revposet/element.hpp"
#include "revposet/presentation.hpp"
#include "revposet/window.hpp"

namespace revposet {

/// A computable bijection of a presentation's carrier with computable inverse.
class SelfMap {
 public:
  using Fn = std::function<ElementId(const ElementId&)>;

  SelfMap(std::string name, Fn forward, Fn inverse, unsigned displacement_bound,
          bool structured = false);

  static SelfMap identity();

  ElementId operator()(const ElementId& x) const { return forward_(x); }
  ElementId inverse(const ElementId& x) const { return inverse_(x); }
  SelfMap inverted() const;

  const std::string& name() const { return name_; }
  /// Largest index shift of a single application.
  unsigned displacement_bound() const { return bound_; }
  /// Index-affine away from finitely many points (catalog maps and maps
  /// assembled from them); lets the extraction oracle answer exactly.
  bool is_structured() const { return structured_; }

 private:
  std::string name_;
  Fn forward_;
  Fn inverse_;
  unsigned bound_;
  bool structured_;
};

/// h^k: forward composed k times for k > 0, inverse composed -k times for k < 0.
SelfMap power(const SelfMap& h, std::int64_t k);
/// `inner` applied to the component addressed by `prefix`, identity elsewhere.
SelfMap on_component(const SelfMap& inner, std::vector<std::uint64_t> prefix);
/// x^k for k in [from, to].
std::vector<ElementId> orbit(const SelfMap& h, const ElementId& x, std::int64_t from, std::int64_t to);

/// Outcome of a window check. A violation carries the elements that re-fail
/// the named condition.
struct CheckReport {
  bool ok = true;
  std::string condition;
  std::vector<ElementId> witness;
  std::string detail;

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string condition, std::vector<ElementId> witness,
                          std::string detail = {}) {
    return {false, std::move(condition), std::move(witness), std::move(detail)};
  }
  explicit operator bool() const { return ok; }
  std::string to_json() const;
};

/// leq(x,y) => leq(h x, h y) for all x, y among the first n elements. Images
/// are evaluated directly and need not lie in the window.
CheckReport is_order_preserving(const PosetPresentation& p, const SelfMap& h, std::size_t n);
/// Images and preimages are valid and inverse(h(x)) = x = h(inverse(x)) on
/// the first n elements.
CheckReport check_bijection(const PosetPresentation& p, const SelfMap& h, std::size_t n);
/// A pair (u, v) in the window with not(u <= v) but h(u) <= h(v). For posets
/// this is exactly u incomparable to v with comparable images.
std::optional<std::pair<ElementId, ElementId>> non_automorphism_pair(const PosetPresentation& p,
                                                                      const SelfMap& h,
                                                                      std::size_t n);

using Permutation = std::vector<std::size_t>;

struct ReversibilityResult {
  bool reversible = true;
  /// An order-preserving permutation whose inverse is not order-preserving.
  std::optional<Permutation> counterexample;
};

inline constexpr std::size_t kMaxBruteForcePoints = 8;

/// Exhaustive check over all permutations (lexicographic, pruned on order
/// preservation). Throws SizeLimitError above kMaxBruteForcePoints.
ReversibilityResult brute_force_reversible(const FiniteOrder& f);
bool is_order_preserving(const FiniteOrder& f, const Permutation& p);
bool is_automorphism(const FiniteOrder& f, const Permutation& p);

/// All labeled orders on n points (reflexive, transitive, and antisymmetric
/// unless `preorder`), built point by point from closure-consistent
/// down/up-set choices.
void for_each_finite_order(std::size_t n, bool preorder,
                           const std::function<void(const FiniteOrder&)>& fn);
std::vector<FiniteOrder> enumerate_finite_orders(std::size_t n, bool preorder);

}  // namespace revposet

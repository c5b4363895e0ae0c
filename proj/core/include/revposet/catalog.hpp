#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revposet/element.hpp"
#include "revposet/maps.hpp"
#include "revposet/presentation.hpp"

namespace revposet {

enum class Family { F1, F2, F3, F4, F5, F6, F7, F8, G1, G2, G3, G4 };

/// One forbidden structure: a family, possibly order-dualized.
struct ForbiddenKind {
  Family family = Family::F1;
  bool dualized = false;

  ForbiddenKind dual() const { return {family, !dualized}; }
  bool is_preorder_family() const { return family >= Family::G1; }
  /// Stable key: "F1", "F3d", "G2", ...
  std::string key() const;
  /// Key without the dual suffix.
  std::string family_key() const;
  static std::optional<ForbiddenKind> parse(std::string_view key);

  friend bool operator==(const ForbiddenKind&, const ForbiddenKind&) = default;
};

/// The 22 forbidden structures: F1..F8, the duals of the six non-self-dual
/// F's, G1..G4 and their duals.
std::vector<ForbiddenKind> all_kinds();
bool is_self_dual(Family f);

/// Canonical presentation. G kinds are preorders.
PosetPresentation forbidden(ForbiddenKind kind);

/// An order-preserving bijection of a forbidden structure that is not an
/// automorphism, with a pair (x, y) such that not(x <= y) but map(x) <= map(y).
struct WitnessPackage {
  ForbiddenKind kind;
  SelfMap map;
  std::pair<ElementId, ElementId> pair;
};

WitnessPackage witness(ForbiddenKind kind);

/// Relabeling of F3 (p_i <-> q_i) or F8 (a_i <-> b_i) onto the dual. Only
/// defined for the self-dual families.
SelfMap self_duality(Family family);

/// Element constructors for the canonical presentations, named after the
/// families' conventional labels.
namespace ids {
namespace f1 {
ElementId a(std::int64_t n);
ElementId c(std::int64_t n);
}  // namespace f1
namespace f2 {
ElementId p();
ElementId x(std::int64_t n);
ElementId y(std::int64_t n);
}  // namespace f2
namespace f3 {
ElementId a(std::int64_t n);
ElementId p(std::int64_t i);
ElementId q(std::int64_t i);
}  // namespace f3
namespace f4 = f1;
namespace f5 {
ElementId d();
ElementId b(std::int64_t n);
ElementId c(std::int64_t n);
}  // namespace f5
namespace f6 {
ElementId a(std::int64_t i);
ElementId b(std::int64_t i);
ElementId c(std::int64_t n);
}  // namespace f6
namespace f7 {
ElementId a(std::int64_t m);
ElementId c(std::int64_t n);
}  // namespace f7
namespace f8 {
ElementId a(std::int64_t i);
ElementId b(std::int64_t j);
}  // namespace f8
namespace g1 {
ElementId z(std::int64_t n);
ElementId a(std::int64_t n);
}  // namespace g1
namespace g2 = g1;
namespace g3 {
ElementId z(std::int64_t n);
ElementId c(std::int64_t n);
}  // namespace g3
namespace g4 {
ElementId a(std::int64_t n);
/// p_i, q_i for i >= 1 (the i-th two-element cluster).
ElementId p(std::int64_t i);
ElementId q(std::int64_t i);
}  // namespace g4
}  // namespace ids

}  // namespace revposet

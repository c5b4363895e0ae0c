#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revposet/element.hpp"
#include "revposet/maps.hpp"
#include "revposet/presentation.hpp"

namespace fixtures {

/// A presentation with an order-preserving bijection and a pair (x, y) with
/// not(x <= y) but f(x) <= f(y).
struct Fixture {
  std::string name;
  revposet::PosetPresentation p;
  revposet::SelfMap f;
  revposet::ElementId x, y;
  /// Expected dispatcher case, when the fixture targets one.
  std::optional<int> expected_case;
  /// Substring expected in the certificate provenance.
  std::string expected_step;
};

/// Catalog witness packages, one per forbidden kind.
std::vector<Fixture> catalog();
/// Witness maps acting on one component of a larger presentation.
std::vector<Fixture> composites();
/// Two-orbit leaves built to reach dispatcher cases and branches that no
/// catalog witness reaches.
std::vector<Fixture> cases();
/// All of the above.
std::vector<Fixture> matrix();

/// Countably many copies of omega + Dinf beside countably many copies of
/// omega + omega_d.
revposet::PosetPresentation counterexample_poset();
/// Moves the first omega + Dinf copy onto the first omega + omega_d copy and
/// shifts the remaining copies.
revposet::SelfMap counterexample_map();

}  // namespace fixtures

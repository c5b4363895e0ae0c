#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace revposet {

/// Address of an element inside a presentation.
///
/// `path` holds one selector per non-dual combinator node on the way from the
/// root to a generator leaf: 0/1 for the sides of a binary node, the copy
/// number for an infinite disjoint union. `role` names the family inside a
/// multi-family leaf (e.g. "a"/"b" in F8) and `index` the position inside it.
struct ElementId {
  std::vector<std::uint64_t> path;
  std::string role;
  std::int64_t index = 0;

  ElementId() = default;
  ElementId(std::vector<std::uint64_t> p, std::string r, std::int64_t i)
      : path(std::move(p)), role(std::move(r)), index(i) {}

  friend bool operator==(const ElementId&, const ElementId&) = default;
  friend std::strong_ordering operator<=>(const ElementId&, const ElementId&) = default;

  /// "path:roleindex", e.g. "1.3.0:c12" or ":a-3".
  std::string label() const;
  /// Inverse of label(); throws Error on malformed input.
  static ElementId parse(std::string_view text);

  /// Same element with `selector` prepended to the path.
  ElementId prefixed(std::uint64_t selector) const;
  /// Same element with the first path selector removed.
  ElementId stripped() const;
};

struct ElementIdHash {
  std::size_t operator()(const ElementId& e) const noexcept;
};

}  // namespace revposet

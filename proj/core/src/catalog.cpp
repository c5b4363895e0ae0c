#include "revposet/catalog.hpp"

#include <array>

#include "revposet/error.hpp"

namespace revposet {

namespace {

constexpr std::array<std::string_view, 12> kFamilyKeys = {"F1", "F2", "F3", "F4", "F5", "F6",
                                                          "F7", "F8", "G1", "G2", "G3", "G4"};

using Path = std::vector<std::uint64_t>;

bool at(const ElementId& x, const Path& p, std::string_view role) {
  return x.path == p && x.role == role;
}

// f(x) for maps that push the head of one stream into another: the head of
// `feeder` (index 0) becomes the head of `target`, the rest of the feeder
// shifts down by one and the target shifts up by one.
struct Absorb {
  Path feeder_path;
  std::string feeder_role;
  Path target_path;
  std::string target_role;

  ElementId forward(const ElementId& x) const {
    if (at(x, feeder_path, feeder_role)) {
      if (x.index == 0) return {target_path, target_role, 0};
      return {x.path, x.role, x.index - 1};
    }
    if (at(x, target_path, target_role)) return {x.path, x.role, x.index + 1};
    return x;
  }
  ElementId inverse(const ElementId& x) const {
    if (at(x, target_path, target_role)) {
      if (x.index == 0) return {feeder_path, feeder_role, 0};
      return {x.path, x.role, x.index - 1};
    }
    if (at(x, feeder_path, feeder_role)) return {x.path, x.role, x.index + 1};
    return x;
  }
};

SelfMap absorb_map(std::string name, Absorb a) {
  return SelfMap(
      std::move(name), [a](const ElementId& x) { return a.forward(x); },
      [a](const ElementId& x) { return a.inverse(x); }, 1, true);
}

SelfMap f3_map() {
  // a_0 -> p_0, a_1 -> q_0, a_{n+2} -> a_n, copies shift up by one
  auto fwd = [](const ElementId& x) -> ElementId {
    if (x.path.size() == 1) {
      if (x.index == 0) return ids::f3::p(0);
      if (x.index == 1) return ids::f3::q(0);
      return ids::f3::a(x.index - 2);
    }
    ElementId y = x;
    y.path[1] += 1;
    return y;
  };
  auto inv = [](const ElementId& x) -> ElementId {
    if (x.path.size() == 1) return ids::f3::a(x.index + 2);
    if (x.path[1] == 0) return ids::f3::a(x.path[2] == 0 ? 0 : 1);
    ElementId y = x;
    y.path[1] -= 1;
    return y;
  };
  return SelfMap("F3.witness", fwd, inv, 2, true);
}

SelfMap g4_map() {
  // a_0 -> p_1, a_1 -> q_1, a_{n+2} -> a_n, clusters shift up by one
  auto fwd = [](const ElementId& x) -> ElementId {
    if (x.path.size() == 1) {
      if (x.index == 0) return ids::g4::p(1);
      if (x.index == 1) return ids::g4::q(1);
      return ids::g4::a(x.index - 2);
    }
    ElementId y = x;
    y.path[1] += 1;
    return y;
  };
  auto inv = [](const ElementId& x) -> ElementId {
    if (x.path.size() == 1) return ids::g4::a(x.index + 2);
    if (x.path[1] == 0) return ids::g4::a(x.index);
    ElementId y = x;
    y.path[1] -= 1;
    return y;
  };
  return SelfMap("G4.witness", fwd, inv, 2, true);
}

SelfMap f2_map() {
  // p fixed, y_0 -> x_0, y_{n+1} -> y_n, x_n -> x_{n+1}
  return absorb_map("F2.witness", Absorb{{1}, "y", {0, 1}, "x"});
}

SelfMap f5_map() {
  // d fixed, b_0 -> c_0, b_{n+1} -> b_n, c_n -> c_{n+1}
  return absorb_map("F5.witness", Absorb{{0, 1}, "b", {1}, "c"});
}

SelfMap f6_map() {
  // a_0 -> c_1, b_0 -> c_0, a_{i+1} -> a_i, b_{i+1} -> b_i, c_n -> c_{n+2}
  auto fwd = [](const ElementId& x) -> ElementId {
    if (x.role == "c") return ids::f6::c(x.index + 2);
    if (x.index == 0) return ids::f6::c(x.role == "a" ? 1 : 0);
    return {{}, x.role, x.index - 1};
  };
  auto inv = [](const ElementId& x) -> ElementId {
    if (x.role == "c") {
      if (x.index == 0) return ids::f6::b(0);
      if (x.index == 1) return ids::f6::a(0);
      return ids::f6::c(x.index - 2);
    }
    return {{}, x.role, x.index + 1};
  };
  return SelfMap("F6.witness", fwd, inv, 2, true);
}

SelfMap f8_map() {
  auto fwd = [](const ElementId& x) { return ElementId{{}, x.role, x.index + 1}; };
  auto inv = [](const ElementId& x) { return ElementId{{}, x.role, x.index - 1}; };
  return SelfMap("F8.witness", fwd, inv, 1, true);
}

}  // namespace

std::string ForbiddenKind::family_key() const {
  return std::string(kFamilyKeys[static_cast<std::size_t>(family)]);
}

std::string ForbiddenKind::key() const { return family_key() + (dualized ? "d" : ""); }

std::optional<ForbiddenKind> ForbiddenKind::parse(std::string_view key) {
  bool d = false;
  if (key.size() == 3 && key.back() == 'd') {
    d = true;
    key.remove_suffix(1);
  }
  for (std::size_t i = 0; i < kFamilyKeys.size(); ++i)
    if (kFamilyKeys[i] == key) return ForbiddenKind{static_cast<Family>(i), d};
  return std::nullopt;
}

bool is_self_dual(Family f) { return f == Family::F3 || f == Family::F8; }

std::vector<ForbiddenKind> all_kinds() {
  std::vector<ForbiddenKind> out;
  for (std::size_t i = 0; i < kFamilyKeys.size(); ++i) {
    const auto f = static_cast<Family>(i);
    out.push_back({f, false});
    if (!is_self_dual(f)) out.push_back({f, true});
  }
  return out;
}

PosetPresentation forbidden(ForbiddenKind kind) {
  using namespace gen;
  auto base = [&]() -> PosetPresentation {
    switch (kind.family) {
      case Family::F1: return disjoint_union(dinf("a"), omega("c"));
      case Family::F2: return disjoint_union(linear_sum(d1("p"), dinf("x")), dinf("y"));
      case Family::F3:
        return disjoint_union(dinf("a"), infinite_disjoint_union(linear_sum(d1("p"), d1("q"))));
      case Family::F4: return linear_sum(dinf("a"), omega("c"));
      case Family::F5: return linear_sum(disjoint_union(d1("d"), omega_d("b")), omega("c"));
      case Family::F6: return f6();
      case Family::F7: return f7();
      case Family::F8: return f8();
      case Family::G1: return linear_sum(zinf("z"), dinf("a"));
      case Family::G2: return disjoint_union(zinf("z"), dinf("a"));
      case Family::G3: return linear_sum(zinf("z"), omega("c"));
      case Family::G4: return disjoint_union(dinf("a"), infinite_disjoint_union(z2("z")));
    }
    throw Error("unknown family");
  }();
  ForbiddenKind straight{kind.family, false};
  auto p = base.named(straight.key());
  return kind.dualized ? dual(p).named(kind.key()) : p;
}

WitnessPackage witness(ForbiddenKind kind) {
  using namespace ids;
  auto pkg = [&]() -> WitnessPackage {
    const ForbiddenKind k{kind.family, false};
    switch (kind.family) {
      case Family::F1:
        return {k, absorb_map("F1.witness", Absorb{{0}, "a", {1}, "c"}), {f1::a(0), f1::c(0)}};
      case Family::F2: return {k, f2_map(), {f2::p(), f2::y(0)}};
      case Family::F3: return {k, f3_map(), {f3::a(0), f3::a(1)}};
      case Family::F4:
        return {k, absorb_map("F4.witness", Absorb{{0}, "a", {1}, "c"}), {f4::a(1), f4::a(0)}};
      case Family::F5: return {k, f5_map(), {f5::d(), f5::b(0)}};
      case Family::F6: return {k, f6_map(), {f6::b(0), f6::a(0)}};
      case Family::F7:
        return {k, absorb_map("F7.witness", Absorb{{}, "a", {}, "c"}), {f7::a(1), f7::a(0)}};
      case Family::F8: return {k, f8_map(), {f8::a(0), f8::b(0)}};
      case Family::G1:
        return {k, absorb_map("G1.witness", Absorb{{1}, "a", {0}, "z"}), {g1::a(0), g1::z(0)}};
      case Family::G2:
        return {k, absorb_map("G2.witness", Absorb{{1}, "a", {0}, "z"}), {g2::a(0), g2::z(0)}};
      case Family::G3:
        return {k, absorb_map("G3.witness", Absorb{{1}, "c", {0}, "z"}), {g3::c(0), g3::z(0)}};
      case Family::G4: return {k, g4_map(), {g4::a(0), g4::a(1)}};
    }
    throw Error("unknown family");
  }();
  if (kind.dualized) {
    pkg.kind = kind;
    std::swap(pkg.pair.first, pkg.pair.second);
  }
  return pkg;
}

SelfMap self_duality(Family family) {
  if (family == Family::F3) {
    auto swap_pq = [](const ElementId& x) -> ElementId {
      if (x.path.size() != 3) return x;
      return x.path[2] == 0 ? ids::f3::q(static_cast<std::int64_t>(x.path[1]))
                            : ids::f3::p(static_cast<std::int64_t>(x.path[1]));
    };
    return SelfMap("F3.selfdual", swap_pq, swap_pq, 0, true);
  }
  if (family == Family::F8) {
    auto swap_ab = [](const ElementId& x) {
      return ElementId{{}, x.role == "a" ? "b" : "a", x.index};
    };
    return SelfMap("F8.selfdual", swap_ab, swap_ab, 0, true);
  }
  throw PreconditionError("family is not self-dual");
}

namespace ids {
namespace f1 {
ElementId a(std::int64_t n) { return {{0}, "a", n}; }
ElementId c(std::int64_t n) { return {{1}, "c", n}; }
}  // namespace f1
namespace f2 {
ElementId p() { return {{0, 0}, "p", 0}; }
ElementId x(std::int64_t n) { return {{0, 1}, "x", n}; }
ElementId y(std::int64_t n) { return {{1}, "y", n}; }
}  // namespace f2
namespace f3 {
ElementId a(std::int64_t n) { return {{0}, "a", n}; }
ElementId p(std::int64_t i) { return {{1, static_cast<std::uint64_t>(i), 0}, "p", 0}; }
ElementId q(std::int64_t i) { return {{1, static_cast<std::uint64_t>(i), 1}, "q", 0}; }
}  // namespace f3
namespace f5 {
ElementId d() { return {{0, 0}, "d", 0}; }
ElementId b(std::int64_t n) { return {{0, 1}, "b", n}; }
ElementId c(std::int64_t n) { return {{1}, "c", n}; }
}  // namespace f5
namespace f6 {
ElementId a(std::int64_t i) { return {{}, "a", i}; }
ElementId b(std::int64_t i) { return {{}, "b", i}; }
ElementId c(std::int64_t n) { return {{}, "c", n}; }
}  // namespace f6
namespace f7 {
ElementId a(std::int64_t m) { return {{}, "a", m}; }
ElementId c(std::int64_t n) { return {{}, "c", n}; }
}  // namespace f7
namespace f8 {
ElementId a(std::int64_t i) { return {{}, "a", i}; }
ElementId b(std::int64_t j) { return {{}, "b", j}; }
}  // namespace f8
namespace g1 {
ElementId z(std::int64_t n) { return {{0}, "z", n}; }
ElementId a(std::int64_t n) { return {{1}, "a", n}; }
}  // namespace g1
namespace g3 {
ElementId z(std::int64_t n) { return {{0}, "z", n}; }
ElementId c(std::int64_t n) { return {{1}, "c", n}; }
}  // namespace g3
namespace g4 {
ElementId a(std::int64_t n) { return {{0}, "a", n}; }
ElementId p(std::int64_t i) { return {{1, static_cast<std::uint64_t>(i - 1)}, "z", 0}; }
ElementId q(std::int64_t i) { return {{1, static_cast<std::uint64_t>(i - 1)}, "z", 1}; }
}  // namespace g4
}  // namespace ids

}  // namespace revposet

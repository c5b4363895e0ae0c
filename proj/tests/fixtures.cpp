#include "fixtures.hpp"

#include "revposet/catalog.hpp"
#include "revposet/dsl.hpp"

namespace fixtures {

using namespace revposet;

namespace {

ElementId at(std::uint64_t selector, const ElementId& e) { return e.prefixed(selector); }

Fixture on_part(const std::string& expr, const std::string& kind_key,
                std::vector<std::uint64_t> prefix, bool dualized) {
  const auto w = witness(*ForbiddenKind::parse(kind_key));
  auto x = w.pair.first;
  auto y = w.pair.second;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    x = at(*it, x);
    y = at(*it, y);
  }
  if (dualized) std::swap(x, y);
  return {expr, elaborate(expr), on_component(w.map, prefix), x, y, {}, {}};
}

/// Roles u and v over the integers; v_j < u_k is decided by `below`, and u
/// is never below v. The map shifts both roles by one.
struct TwoOrbit {
  std::function<bool(std::int64_t, std::int64_t)> u_leq, v_leq, below;
};

Fixture two_orbit(const std::string& name, const TwoOrbit& t, int expected_case,
                  std::string step) {
  LeafSpec spec;
  spec.name = name;
  spec.roles = {"u", "v"};
  spec.carrier = Carrier::Integer;
  spec.structured = true;
  spec.leq = [t](std::size_t rx, std::int64_t x, std::size_t ry, std::int64_t y) {
    if (rx == 0 && ry == 0) return t.u_leq(x, y);
    if (rx == 1 && ry == 1) return t.v_leq(x, y);
    if (rx == 1 && ry == 0) return t.below(x, y);
    return false;
  };
  auto shift = [](std::int64_t by) {
    return [by](const ElementId& e) { return ElementId{e.path, e.role, e.index + by}; };
  };
  SelfMap f(name + ".shift", shift(1), shift(-1), 1, true);
  return {name, leaf(spec), f, {{}, "v", 0}, {{}, "u", 0}, expected_case, std::move(step)};
}

bool ascending(std::int64_t x, std::int64_t y) { return x <= y; }
bool descending(std::int64_t x, std::int64_t y) { return x >= y; }
bool antichain(std::int64_t x, std::int64_t y) { return x == y; }

}  // namespace

std::vector<Fixture> catalog() {
  std::vector<Fixture> out;
  for (const auto& k : all_kinds()) {
    const auto w = witness(k);
    out.push_back({k.key(), forbidden(k), w.map, w.pair.first, w.pair.second, {}, {}});
  }
  return out;
}

std::vector<Fixture> composites() {
  std::vector<Fixture> out = {
      on_part("du(F4,omega)", "F4", {0}, false),
      on_part("ls(omega_d,F1)", "F1", {1}, false),
      on_part("dual(du(F4,omega))", "F4", {0}, true),
      on_part("du(F8,Dinf)", "F8", {0}, false),
      on_part("ls(F6,omega)", "F6", {0}, false),
      on_part("duinf(F2)", "F2", {3}, false),
  };
  out.push_back({"counterexample", counterexample_poset(), counterexample_map(),
                 ElementId{{0, 0, 1}, "a", 1}, ElementId{{0, 0, 1}, "a", 0}, {}, {}});
  return out;
}

std::vector<Fixture> cases() {
  std::vector<Fixture> out;
  out.push_back(two_orbit(
      "case3-tail", {ascending, descending, [](auto j, auto k) { return j + k >= 2; }}, 3,
      "u above the tail of v's orbit"));
  out.push_back(two_orbit(
      "case3-beside",
      {ascending, descending, [](auto j, auto k) { return k >= 1 && j + k >= 2; }}, 3,
      "u beside the descending orbit of v"));
  out.push_back(two_orbit(
      "case6", {descending, antichain, [](auto j, auto k) { return j >= 1 && k <= j; }}, 6,
      "no_antichains_extract(i)"));
  auto c10 = two_orbit(
      "case10", {descending, antichain, [](auto j, auto k) { return j >= 1 && k <= j; }}, 10,
      "no_antichains_extract(i)");
  c10.p = dual(c10.p);
  std::swap(c10.x, c10.y);
  out.push_back(std::move(c10));
  out.push_back(two_orbit(
      "case12-both-infinite",
      {antichain, antichain, [](auto j, auto k) { return k >= 1 && (j - k) % 2 == 0; }}, 12,
      "case12_extract(i)"));
  return out;
}

std::vector<Fixture> matrix() {
  auto out = catalog();
  for (auto part : {composites(), cases()})
    for (auto& f : part) out.push_back(std::move(f));
  return out;
}

PosetPresentation counterexample_poset() {
  return elaborate("du(duinf(ls(omega,Dinf)),duinf(ls(omega,omega_d)))");
}

SelfMap counterexample_map() {
  // Paths: {0, n, 0} chain c and {0, n, 1} antichain a of copy n on the left;
  // {1, n, 0} chain c and {1, n, 1} descending chain b on the right.
  auto forward = [](const ElementId& e) {
    auto path = e.path;
    if (path[0] == 1) {
      ++path[1];
      return ElementId{path, e.role, e.index};
    }
    if (path[1] > 0) {
      --path[1];
      return ElementId{path, e.role, e.index};
    }
    path[0] = 1;
    return ElementId{path, path[2] == 1 ? "b" : "c", e.index};
  };
  auto inverse = [](const ElementId& e) {
    auto path = e.path;
    if (path[0] == 0) {
      ++path[1];
      return ElementId{path, e.role, e.index};
    }
    if (path[1] > 0) {
      --path[1];
      return ElementId{path, e.role, e.index};
    }
    path[0] = 0;
    return ElementId{path, path[2] == 1 ? "a" : "c", e.index};
  };
  return SelfMap("counterexample.shift", forward, inverse, 1, true);
}

}  // namespace fixtures

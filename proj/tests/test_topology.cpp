#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "revposet/catalog.hpp"
#include "revposet/error.hpp"
#include "revposet/maps.hpp"
#include "revposet/topology.hpp"
#include "revposet/window.hpp"

using namespace revposet;

namespace {

ForbiddenKind kind(const char* key) { return *ForbiddenKind::parse(key); }

FiniteSpace sierpinski() { return FiniteSpace::unnamed(2, {0b00, 0b10, 0b11}); }
FiniteSpace discrete(std::size_t n) {
  std::vector<std::uint64_t> opens;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) opens.push_back(s);
  return FiniteSpace::unnamed(n, opens);
}

bool same_relation(const FiniteOrder& a, const FiniteOrder& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(i, j)) return false;
  return true;
}

FiniteOrder chain3() { return Window::of(gen::omega(), 3).order(); }

}  // namespace

TEST_SUITE("spaces") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(FiniteSpace::unnamed(2, {0b01, 0b11}), PreconditionError);
    CHECK_THROWS_AS(FiniteSpace::unnamed(2, {0b00, 0b01}), PreconditionError);
    CHECK_THROWS_AS(FiniteSpace::unnamed(3, {0b000, 0b001, 0b010, 0b111}), PreconditionError);
    CHECK_THROWS_AS(FiniteSpace::unnamed(2, {0b000, 0b100, 0b11}), PreconditionError);
    CHECK_NOTHROW(sierpinski());
  }

  TEST_CASE("specialization") {
    const auto s = specialization(sierpinski());
    CHECK(s.leq(0, 1));
    CHECK_FALSE(s.leq(1, 0));
    const auto d = specialization(discrete(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(d.leq(i, j) == (i == j));
    const auto z = specialization(FiniteSpace::unnamed(2, {0b00, 0b11}));
    CHECK(z.leq(0, 1));
    CHECK(z.leq(1, 0));
  }

  TEST_CASE("Alexandroff and upper topologies of a chain") {
    const auto a = alexandroff_space(chain3());
    CHECK(a.opens() == std::vector<std::uint64_t>{0b000, 0b100, 0b110, 0b111});
    const auto u = upper_space(chain3());
    CHECK(u.opens() == a.opens());
    const auto anti = upper_space(FiniteOrder(3, false));
    CHECK(anti.opens().size() == 8);
    CHECK(order_space(chain3(), TopologyKind::Upper).opens() == u.opens());
  }

  TEST_CASE("JSON export") {
    CHECK(sierpinski().to_json() == R"({"points":["0","1"],"opens":[[],["1"],["0","1"]]})");
  }

  TEST_CASE("finite reversibility") {
    CHECK(finite_space_reversible(sierpinski()).reversible);
    CHECK(finite_space_reversible(discrete(3)).reversible);
    CHECK(is_continuous(sierpinski(), {0, 1}));
    CHECK_FALSE(is_continuous(sierpinski(), {1, 0}));
  }

  TEST_CASE("every labeled topology on at most 4 points is reversible") {
    for (std::size_t n = 0; n <= 4; ++n)
      for_each_topology(n, [](const FiniteSpace& s) { CHECK(finite_space_reversible(s).reversible); });
  }

  TEST_CASE("specialization and Alexandroff topology are inverse on small preorders") {
    for (std::size_t n = 0; n <= 4; ++n) {
      for_each_finite_order(n, true, [](const FiniteOrder& q) {
        CHECK(same_relation(specialization(alexandroff_space(q)), q));
      });
      for_each_topology(n, [](const FiniteSpace& s) {
        CHECK(alexandroff_space(specialization(s)).opens() == s.opens());
      });
    }
  }
}

TEST_SUITE("order topologies") {
  TEST_CASE("basic and subbasic predicates") {
    const auto up3 = alexandroff_basic(gen::omega(), {{}, "c", 3});
    CHECK(up3({{}, "c", 5}));
    CHECK_FALSE(up3({{}, "c", 2}));
    const auto f4 = forbidden(kind("F4"));
    const auto sub = upper_subbasic(f4, ids::f4::c(0));
    for (const auto& x : f4.enumerate(30))
      CHECK(sub(x) == (x.role == "c" && x.index > 0));
    const auto anti = upper_subbasic(gen::dinf(), {{}, "a", 0});
    for (const auto& x : gen::dinf().enumerate(10)) CHECK(anti(x) == (x.index != 0));
    CHECK_THROWS_AS((void)alexandroff_basic(gen::omega(), {{}, "c", -1}), InvalidElement);
  }

  TEST_CASE("Alexandroff continuity is order preservation") {
    CHECK(alexandroff_continuous(forbidden(kind("F1")), witness(kind("F1")).map, 100).ok);
    CHECK(alexandroff_continuous(gen::omega(), SelfMap::identity(), 20).ok);
    auto swap = [](const ElementId& x) {
      return x.index > 1 ? x : ElementId{x.path, x.role, 1 - x.index};
    };
    CHECK_FALSE(alexandroff_continuous(gen::omega(), SelfMap("swap", swap, swap, 1), 5).ok);
  }

  TEST_CASE("upper preimage certificates") {
    const auto f5 = forbidden(kind("F5"));
    const auto h = witness(kind("F5")).map;
    const PreimageClaim identity_claim{{ids::f5::c(2)}, {}};
    CHECK(upper_preimage_certificate_check(f5, SelfMap::identity(), ids::f5::c(2), identity_claim, 100).ok);

    const PreimageClaim shipped{{ids::f5::b(0)}, {ids::f5::d()}};
    CHECK(upper_preimage_certificate_check(f5, h, ids::f5::c(0), shipped, 100).ok);

    const PreimageClaim missing{{ids::f5::b(0)}, {}};
    const auto r = upper_preimage_certificate_check(f5, h, ids::f5::c(0), missing, 100);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == ids::f5::d());

    const PreimageClaim bad{{ElementId{{4}, "c", 0}}, {}};
    CHECK_THROWS_AS((void)upper_preimage_certificate_check(f5, h, ids::f5::c(0), bad, 10),
                    PreconditionError);
  }
}

TEST_SUITE("levels") {
  TEST_CASE("a chain has one point per level") {
    const auto d = level_sets(chain3());
    CHECK(d.levels == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK_THROWS_AS((void)level_sets(chain3(), 2), SizeLimitError);
  }

  TEST_CASE("F7 window levels") {
    const auto w = Window::of(forbidden(kind("F7")), 12);
    std::vector<std::string> names;
    for (const auto& x : w.elements()) names.push_back(x.label());
    CHECK(level_sets(w.order()).to_json(names) ==
          R"({"levels":[[":a0",":a1",":a2",":a3",":a4",":a5"],[":c0"],[":c1"],[":c2"],[":c3"],[":c4"],[":c5"]]})");
  }

  TEST_CASE("minimal elements generate up-sets") {
    const auto m = min_up(chain3(), {1, 2});
    CHECK(m.minimal == std::vector<std::size_t>{1});
    CHECK(m.generates);
    CHECK_THROWS_AS((void)min_up(chain3(), {1}), PreconditionError);
  }

  TEST_CASE("automorphisms preserve levels") {
    CHECK(level_preserving_check(chain3(), {0, 1, 2}).ok);
    CHECK_THROWS_AS((void)level_preserving_check(chain3(), {1, 0, 2}), PreconditionError);
    for (std::size_t n = 0; n <= 5; ++n)
      for_each_finite_order(n, false, [n](const FiniteOrder& f) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
          if (is_automorphism(f, p)) CHECK(level_preserving_check(f, p).ok);
        } while (std::next_permutation(p.begin(), p.end()));
      });
  }
}

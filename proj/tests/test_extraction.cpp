#include <map>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "revposet/catalog.hpp"
#include "revposet/dsl.hpp"
#include "revposet/error.hpp"
#include "revposet/extraction.hpp"

using namespace revposet;

namespace {

ForbiddenKind kind(const char* key) { return *ForbiddenKind::parse(key); }

ForbiddenCertificate extract(const fixtures::Fixture& fx) {
  return extract_forbidden(fx.p, fx.f, fx.x, fx.y);
}

fixtures::Fixture find(const std::string& name) {
  for (auto& fx : fixtures::matrix())
    if (fx.name == name) return fx;
  FAIL("no fixture " << name);
  throw;
}

Stream role_stream(std::vector<std::uint64_t> path, std::string role) {
  return [path, role](std::int64_t i) { return ElementId{path, role, i}; };
}

}  // namespace

TEST_SUITE("relations") {
  TEST_CASE("relation classifies pairs") {
    const auto p = forbidden(kind("F5"));
    CHECK(relation(p, ids::f5::b(1), ids::f5::b(0)) == Rel::Less);
    CHECK(relation(p, ids::f5::c(0), ids::f5::b(3)) == Rel::Greater);
    CHECK(relation(p, ids::f5::d(), ids::f5::b(0)) == Rel::Incomparable);
    CHECK(relation(p, ids::f5::d(), ids::f5::d()) == Rel::Equal);
    const auto g = forbidden(kind("G1"));
    CHECK(relation(g, ids::g1::z(0), ids::g1::z(3)) == Rel::Equivalent);
  }

  TEST_CASE("case classification and normalization") {
    const auto p5 = forbidden(kind("F5"));
    const auto w5 = witness(kind("F5"));
    const auto c1 = case_classify(p5, w5.map, w5.pair.second, w5.pair.first);
    CHECK(c1.case_id == 1);
    const auto c1s = case_classify(p5, w5.map, w5.pair.first, w5.pair.second);
    CHECK(c1s.case_id == 1);
    CHECK(c1s.swapped);
    const auto p5d = forbidden(kind("F5d"));
    const auto w5d = witness(kind("F5d"));
    const auto c7 = case_classify(p5d, w5d.map, w5d.pair.first, w5d.pair.second);
    CHECK(c7.case_id == 7);
    CHECK(c7.normalized_to == 1);
  }

  TEST_CASE("classification rejects comparable pairs and incomparable images") {
    const auto p = forbidden(kind("F5"));
    const auto w = witness(kind("F5"));
    CHECK_THROWS_AS((void)case_classify(p, w.map, ids::f5::b(0), ids::f5::c(0)), PreconditionError);
    CHECK_THROWS_AS((void)case_classify(p, SelfMap::identity(), ids::f5::d(), ids::f5::b(0)),
                    PreconditionError);
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("exact oracles record nothing") {
    InfinityOracle o(true, 32);
    CHECK(o.infinitely_many("evens", [](std::int64_t k) { return k % 2 == 0; }));
    CHECK_FALSE(o.infinitely_many("small", [](std::int64_t k) { return k < 3; }));
    CHECK(o.find_first("first 5", [](std::int64_t k) { return k == 5; }) == 5);
    CHECK_FALSE(o.find_first("never", [](std::int64_t) { return false; }).has_value());
    CHECK(o.assumptions().empty());
  }

  TEST_CASE("inexact oracles record every decision") {
    InfinityOracle o(false, 32);
    CHECK(o.infinitely_many("evens", [](std::int64_t k) { return k % 2 == 0; }));
    CHECK_FALSE(o.find_first("never", [](std::int64_t) { return false; }).has_value());
    REQUIRE(o.assumptions().size() == 2);
    CHECK(o.assumptions()[0].query == "evens");
    CHECK(o.assumptions()[0].answer);
    CHECK_FALSE(o.assumptions()[1].answer);
  }

  TEST_CASE("integer-indexed questions look both ways") {
    InfinityOracle o(true, 32);
    CHECK(o.infinitely_many_integers("negatives", [](std::int64_t k) { return k < -5; }));
    CHECK_FALSE(o.infinitely_many_integers("near zero", [](std::int64_t k) { return k > -3 && k < 3; }));
  }
}

TEST_SUITE("building blocks") {
  TEST_CASE("orbit profile") {
    const auto p = forbidden(kind("F8"));
    const auto prof = orbit_profile(p, witness(kind("F8")).map, ids::f8::a(0), 10);
    CHECK(prof.forward.size() == 10);
    CHECK_FALSE(prof.first_comparable().has_value());
    const auto p5 = forbidden(kind("F5"));
    const auto prof5 = orbit_profile(p5, witness(kind("F5")).map, ids::f5::c(0), 5);
    CHECK(prof5.first_comparable() == 1);
    CHECK(prof5.forward[0] == Rel::Less);
  }

  TEST_CASE("chain or antichain") {
    const auto chain = chain_or_antichain(gen::omega(), gen::omega().enumerate(20), 8);
    CHECK(chain.chain);
    CHECK(chain.indices.size() >= 8);
    const auto anti = chain_or_antichain(gen::dinf(), gen::dinf().enumerate(20), 8);
    CHECK_FALSE(anti.chain);
    CHECK_THROWS_AS((void)chain_or_antichain(gen::omega(), gen::omega().enumerate(5), 8), Exhausted);
  }

  TEST_CASE("descending chain moves into the down-set") {
    CHECK(descending_chain_in_downset({2, 5, 9}) == std::vector<std::int64_t>{0, -3, -7});
  }
}

TEST_SUITE("sub-procedures") {
  TEST_CASE("no-antichains branches (i), (ii), (iii)") {
    const Budget budget;
    struct Row {
      const char* key;
      const char* step;
    };
    for (const auto& [key, step] : {Row{"F1", "(i)"}, Row{"F4", "(ii)"}, Row{"F7", "(iii)"}}) {
      CAPTURE(key);
      const auto p = forbidden(kind(key));
      const auto a = key == std::string("F7") ? role_stream({}, "a") : role_stream({0}, "a");
      const auto c = key == std::string("F7") ? role_stream({}, "c") : role_stream({1}, "c");
      InfinityOracle oracle(true, budget.horizon);
      const auto cert = no_antichains_extract(p, a, c, oracle, budget);
      CHECK(cert.kind == kind(key));
      CHECK(cert.provenance.find(step) != std::string::npos);
      CHECK(verify_certificate(p, cert, 50).ok);
    }
  }

  TEST_CASE("skyscraper with finitely many coverings yields F5") {
    const auto p = elaborate("ls(du(omega_d,omega_d),omega)");
    InfinityOracle oracle(true, 64);
    const auto cert = skyscraper_extract(p, role_stream({0, 0}, "b"), role_stream({0, 1}, "b"),
                                         role_stream({1}, "c"), oracle, Budget{});
    CHECK(cert.kind == kind("F5"));
    CHECK(cert.provenance.find("finite") != std::string::npos);
    CHECK(verify_certificate(p, cert, 50).ok);
  }

  TEST_CASE("skyscraper with both coverings infinite yields F6") {
    const auto p = forbidden(kind("F6"));
    InfinityOracle oracle(true, 64);
    const auto cert = skyscraper_extract(p, role_stream({}, "a"), role_stream({}, "b"),
                                         role_stream({}, "c"), oracle, Budget{});
    CHECK(cert.kind == kind("F6"));
    CHECK(verify_certificate(p, cert, 50).ok);
  }

  TEST_CASE("skyscraper rejects meeting columns") {
    const auto p = gen::omega();
    InfinityOracle oracle(true, 64);
    CHECK_THROWS_AS((void)skyscraper_extract(p, role_stream({}, "c"), role_stream({}, "c"),
                                             role_stream({}, "c"), oracle, Budget{}),
                    PreconditionError);
  }

  TEST_CASE("case 12 directly") {
    const auto p = forbidden(kind("F8"));
    const auto w = witness(kind("F8"));
    InfinityOracle oracle(true, 64);
    const auto cert = case12_extract(p, w.map, w.pair.second, w.pair.first, oracle, Budget{});
    CHECK(cert.kind == kind("F8"));
    CHECK(verify_certificate(p, cert, 50).ok);
  }
}

TEST_SUITE("extraction") {
  TEST_CASE("every fixture yields a verified certificate without assumptions") {
    for (const auto& fx : fixtures::matrix()) {
      CAPTURE(fx.name);
      const auto cert = extract(fx);
      CHECK(verify_certificate(fx.p, cert, 50).ok);
      CHECK(cert.assumptions.empty());
      CHECK(cert.verified_window == 50);
      if (fx.expected_case) CHECK(cert.case_id == fx.expected_case);
      CHECK(cert.provenance.find(fx.expected_step) != std::string::npos);
    }
  }

  TEST_CASE("catalog outcomes") {
    const std::map<std::string, std::pair<std::string, std::optional<int>>> expected = {
        {"F1", {"F1", 4}},   {"F1d", {"F1d", 11}}, {"F2", {"F2", 9}},   {"F2d", {"F2d", 8}},
        {"F3", {"F3", 12}},  {"F4", {"F4", 4}},    {"F4d", {"F4d", 11}}, {"F5", {"F5", 1}},
        {"F5d", {"F5d", 7}}, {"F6", {"F6", 2}},    {"F6d", {"F6d", 5}}, {"F7", {"F7", 4}},
        {"F7d", {"F7d", 11}}, {"F8", {"F8", 12}},  {"G1", {"G1", {}}},  {"G1d", {"G1d", {}}},
        {"G2", {"G2", {}}},  {"G2d", {"G2", {}}},  {"G3", {"G3", {}}},  {"G3d", {"G3d", {}}},
        {"G4", {"G4", {}}},  {"G4d", {"G4", {}}},
    };
    for (const auto& fx : fixtures::catalog()) {
      CAPTURE(fx.name);
      const auto cert = extract(fx);
      CHECK(cert.kind.key() == expected.at(fx.name).first);
      CHECK(cert.case_id == expected.at(fx.name).second);
    }
  }

  TEST_CASE("every dispatcher case and branch is reached") {
    std::set<int> cases;
    std::set<std::string> branches;
    const char* probes[] = {"no_antichains_extract(i)", "no_antichains_extract(ii)",
                            "skyscraper_extract(both", "case12_extract(i)", "case12_extract(ii)",
                            "case12_extract(iii)"};
    for (const auto& fx : fixtures::matrix()) {
      const auto cert = extract(fx);
      if (cert.case_id) cases.insert(*cert.case_id);
      for (const auto* probe : probes)
        if (cert.provenance.find(probe) != std::string::npos) branches.insert(probe);
    }
    CHECK(cases == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    CHECK(branches.size() == std::size(probes));
  }

  TEST_CASE("counterexample poset contains F3") {
    const auto cert = extract(find("counterexample"));
    CHECK(cert.kind == kind("F3"));
  }

  TEST_CASE("opaque maps make the oracle record its answers") {
    const auto fx = find("F1");
    const SelfMap opaque("opaque", [fx](const ElementId& e) { return fx.f(e); },
                         [fx](const ElementId& e) { return fx.f.inverse(e); },
                         fx.f.displacement_bound(), false);
    const auto cert = extract_forbidden(fx.p, opaque, fx.x, fx.y);
    CHECK(verify_certificate(fx.p, cert, 50).ok);
    CHECK_FALSE(cert.assumptions.empty());
  }

  TEST_CASE("preconditions") {
    const auto fx = find("F5");
    CHECK_THROWS_AS((void)extract_forbidden(fx.p, fx.f, fx.y, fx.y), PreconditionError);
    CHECK_THROWS_AS((void)extract_forbidden(fx.p, SelfMap::identity(), fx.x, fx.y), PreconditionError);
    CHECK_THROWS_AS((void)extract_forbidden(fx.p, fx.f.inverted(), fx.x, fx.y), PreconditionError);
    CHECK_THROWS_AS((void)extract_forbidden(fx.p, fx.f, ElementId{{7}, "q", 0}, fx.y), Error);
  }
}

TEST_SUITE("orbit checks") {
  TEST_CASE("orbit transport, backward no-ascent and index shift across the fixture matrix") {
    for (const auto& fx : fixtures::matrix()) {
      CAPTURE(fx.name);
      for (const auto& x : {fx.x, fx.y}) {
        CHECK(check_orbit_transport(fx.p, fx.f, x, 64).ok);
        CHECK(check_backward_no_ascent(fx.p, fx.f, x, 64).ok);
        CHECK(check_index_shift(fx.p, fx.f, x, 64).ok);
      }
    }
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("JSON round trip re-verifies") {
    for (const char* name : {"F8", "F3", "du(F4,omega)", "case3-tail"}) {
      CAPTURE(name);
      const auto fx = find(name);
      const auto cert = extract(fx);
      const auto back = certificate_from_json(certificate_to_json(cert, 40));
      CHECK(back.kind == cert.kind);
      CHECK(back.case_id == cert.case_id);
      CHECK(verify_certificate(fx.p, back, 40).ok);
      const auto beyond = verify_certificate(fx.p, back, 41);
      CHECK_FALSE(beyond.ok);
      CHECK(beyond.condition == "embedding_missing");
    }
  }

  TEST_CASE("JSON layout") {
    const auto cert = extract(find("F8"));
    const auto text = certificate_to_json(cert, 2);
    for (const auto* key : {"\"kind\": \"F8\"", "\"dual\": false", "\"case\": 12", "\"assumptions\": []",
                            "\"embedding\"", "\"canonical\"", "\"target\"", "\"verified_window\": 50"})
      CHECK(text.find(key) != std::string::npos);
  }

  TEST_CASE("corrupted certificates are rejected with a witness") {
    const auto fx = find("F4");
    const auto good = extract(fx);

    auto collapsed = good;
    collapsed.embedding = [good](const ElementId& x) { return good.embedding(ElementId{x.path, x.role, 0}); };
    const auto inj = verify_certificate(fx.p, collapsed, 20);
    CHECK_FALSE(inj.ok);
    CHECK(inj.condition == "injectivity");
    CHECK(inj.witness.size() == 2);

    auto swapped = good;
    swapped.embedding = [good](const ElementId& x) {
      const auto flip = ElementId{x.path, x.role == "a" ? "c" : "a", x.index};
      return good.embedding(flip);
    };
    const auto ord = verify_certificate(fx.p, swapped, 20);
    CHECK_FALSE(ord.ok);
    CHECK(ord.witness.size() == 2);

    auto wrong_kind = good;
    wrong_kind.kind = kind("F1");
    CHECK_FALSE(verify_certificate(fx.p, wrong_kind, 20).ok);

    auto invalid = good;
    invalid.embedding = [](const ElementId&) { return ElementId{{9}, "q", 0}; };
    const auto inv = verify_certificate(fx.p, invalid, 20);
    CHECK(inv.condition == "embedding_invalid");
  }

  TEST_CASE("malformed JSON is an error") {
    CHECK_THROWS_AS((void)certificate_from_json("{"), Error);
    CHECK_THROWS_AS((void)certificate_from_json(R"({"kind":"F9","embedding":[]})"), Error);
    CHECK_THROWS_AS((void)certificate_from_json(R"({"kind":"F1","dual":true,"embedding":[]})"), Error);
    CHECK_THROWS_AS((void)certificate_from_json(R"({"kind":"F1"})"), Error);
  }
}

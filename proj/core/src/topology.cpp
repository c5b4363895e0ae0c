#include "revposet/topology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "json.hpp"
#include "revposet/error.hpp"

namespace revposet {

namespace {

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

std::vector<std::uint64_t> close_under_union_and_intersection(std::vector<std::uint64_t> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = family;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        for (auto s : {current[i] | current[j], current[i] & current[j]})
          if (!std::binary_search(family.begin(), family.end(), s)) {
            family.insert(std::lower_bound(family.begin(), family.end(), s), s);
            grew = true;
          }
  }
  return family;
}

std::uint64_t image(std::uint64_t set, const Permutation& p) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (set & bit(i)) out |= bit(p[i]);
  return out;
}

std::uint64_t preimage(std::uint64_t set, const Permutation& p) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (set & bit(p[i])) out |= bit(i);
  return out;
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> points, std::vector<std::uint64_t> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  if (points_.size() > 64) throw PreconditionError("finite spaces hold at most 64 points");
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  const auto all = full();
  for (auto o : opens_)
    if (o & ~all) throw PreconditionError("open set mentions a point outside the space");
  if (!is_open(0)) throw PreconditionError("the empty set is not open");
  if (!is_open(all)) throw PreconditionError("the whole space is not open");
  for (auto a : opens_)
    for (auto b : opens_) {
      if (!is_open(a | b)) throw PreconditionError("opens are not closed under union");
      if (!is_open(a & b)) throw PreconditionError("opens are not closed under intersection");
    }
}

FiniteSpace FiniteSpace::unnamed(std::size_t n, std::vector<std::uint64_t> opens) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return FiniteSpace(std::move(names), std::move(opens));
}

bool FiniteSpace::is_open(std::uint64_t set) const {
  return std::binary_search(opens_.begin(), opens_.end(), set);
}

std::uint64_t FiniteSpace::full() const { return full_mask(points_.size()); }

std::string FiniteSpace::to_json() const {
  nlohmann::ordered_json j;
  j["points"] = points_;
  j["opens"] = nlohmann::ordered_json::array();
  for (auto o : opens_) {
    auto set = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (o & bit(i)) set.push_back(points_[i]);
    j["opens"].push_back(set);
  }
  return j.dump();
}

FiniteOrder specialization(const FiniteSpace& s) {
  FiniteOrder f(s.size(), true);
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      bool below = true;
      for (auto o : s.opens())
        if ((o & bit(x)) && !(o & bit(y))) below = false;
      f.set(x, y, below);
    }
  return f;
}

FiniteSpace alexandroff_space(const FiniteOrder& q) {
  const auto n = q.size();
  if (n > 20) throw SizeLimitError("alexandroff_space enumerates subsets; at most 20 points");
  std::vector<std::uint64_t> opens;
  for (std::uint64_t s = 0; s <= full_mask(n); ++s) {
    bool up = true;
    for (std::size_t x = 0; x < n && up; ++x)
      if (s & bit(x))
        for (std::size_t y = 0; y < n && up; ++y)
          if (q.leq(x, y) && !(s & bit(y))) up = false;
    if (up) opens.push_back(s);
  }
  return FiniteSpace::unnamed(n, std::move(opens));
}

FiniteSpace upper_space(const FiniteOrder& q) {
  const auto n = q.size();
  std::vector<std::uint64_t> family = {0, full_mask(n)};
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t down = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (q.leq(y, x)) down |= bit(y);
    family.push_back(full_mask(n) & ~down);
  }
  return FiniteSpace::unnamed(n, close_under_union_and_intersection(std::move(family)));
}

FiniteSpace order_space(const FiniteOrder& q, TopologyKind kind) {
  return kind == TopologyKind::Alexandroff ? alexandroff_space(q) : upper_space(q);
}

std::function<bool(const ElementId&)> alexandroff_basic(const PosetPresentation& p,
                                                        const ElementId& x) {
  if (auto bad = p.validate(x)) throw InvalidElement("invalid element " + x.label(), *bad);
  return [p, x](const ElementId& y) { return p.leq(x, y); };
}

std::function<bool(const ElementId&)> upper_subbasic(const PosetPresentation& p,
                                                     const ElementId& x) {
  if (auto bad = p.validate(x)) throw InvalidElement("invalid element " + x.label(), *bad);
  return [p, x](const ElementId& y) { return !p.leq(y, x); };
}

CheckReport alexandroff_continuous(const PosetPresentation& p, const SelfMap& h, std::size_t n) {
  return is_order_preserving(p, h, n);
}

CheckReport upper_preimage_certificate_check(const PosetPresentation& p, const SelfMap& h,
                                             const ElementId& x, const PreimageClaim& claim,
                                             std::size_t n) {
  for (const auto* list : {&claim.down_generators, &claim.finite})
    for (const auto& e : *list)
      if (auto bad = p.validate(e))
        throw PreconditionError("claim references invalid element " + e.label() + ": " + *bad);
  if (auto bad = p.validate(x)) throw PreconditionError("invalid element " + x.label() + ": " + *bad);
  for (const auto& y : p.enumerate(n)) {
    const bool actual = p.leq_unchecked(h(y), x);
    bool claimed = std::find(claim.finite.begin(), claim.finite.end(), y) != claim.finite.end();
    for (const auto& g : claim.down_generators) claimed = claimed || p.leq_unchecked(y, g);
    if (actual != claimed)
      return CheckReport::fail("preimage_mismatch", {y},
                               actual ? "in the preimage but not claimed"
                                      : "claimed but not in the preimage");
  }
  return CheckReport::pass();
}

bool is_continuous(const FiniteSpace& s, const Permutation& p) {
  for (auto o : s.opens())
    if (!s.is_open(preimage(o, p))) return false;
  return true;
}

SpaceReversibility finite_space_reversible(const FiniteSpace& s) {
  if (s.size() > kMaxBruteForcePoints)
    throw SizeLimitError("finite_space_reversible is limited to " +
                         std::to_string(kMaxBruteForcePoints) + " points");
  Permutation p(s.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!is_continuous(s, p)) continue;
    for (auto o : s.opens())
      if (!s.is_open(image(o, p))) return {false, p};
  } while (std::next_permutation(p.begin(), p.end()));
  return {};
}

void for_each_topology(std::size_t n, const std::function<void(const FiniteSpace&)>& fn) {
  if (n > 4) throw SizeLimitError("topology enumeration is limited to 4 points");
  const auto all = full_mask(n);
  // Candidate opens other than the empty set and the whole space.
  std::vector<std::uint64_t> middle;
  for (std::uint64_t s = 1; s < all; ++s) middle.push_back(s);
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t choice = 0; choice < families; ++choice) {
    std::vector<std::uint64_t> opens = {0};
    if (all != 0) opens.push_back(all);
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (choice & bit(i)) opens.push_back(middle[i]);
    std::sort(opens.begin(), opens.end());
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i)
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
        closed = std::binary_search(opens.begin(), opens.end(), opens[i] | opens[j]) &&
                 std::binary_search(opens.begin(), opens.end(), opens[i] & opens[j]);
    if (closed) fn(FiniteSpace::unnamed(n, std::move(opens)));
  }
}

std::string LevelDecomposition::to_json(const std::vector<std::string>& names) const {
  nlohmann::ordered_json j;
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& level : levels) {
    auto arr = nlohmann::ordered_json::array();
    for (auto i : level) arr.push_back(names.at(i));
    j["levels"].push_back(arr);
  }
  return j.dump();
}

LevelDecomposition level_sets(const FiniteOrder& f, std::size_t rank_bound) {
  LevelDecomposition d;
  std::vector<bool> removed(f.size(), false);
  std::size_t left = f.size();
  while (left > 0) {
    if (d.levels.size() >= rank_bound)
      throw SizeLimitError("more than " + std::to_string(rank_bound) + " levels");
    std::vector<std::size_t> level;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (removed[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < f.size() && minimal; ++y)
        if (!removed[y] && f.less(y, x)) minimal = false;
      if (minimal) level.push_back(x);
    }
    for (auto x : level) removed[x] = true;
    left -= level.size();
    d.levels.push_back(std::move(level));
  }
  return d;
}

MinUp min_up(const FiniteOrder& f, const std::vector<std::size_t>& up) {
  std::vector<bool> in(f.size(), false);
  for (auto x : up) in.at(x) = true;
  for (auto x : up)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (f.leq(x, y) && !in[y])
        throw PreconditionError("set is not an up-set: misses " + std::to_string(y));
  MinUp r;
  for (auto x : up) {
    bool minimal = true;
    for (auto y : up)
      if (f.less(y, x)) minimal = false;
    if (minimal) r.minimal.push_back(x);
  }
  std::sort(r.minimal.begin(), r.minimal.end());
  std::vector<bool> generated(f.size(), false);
  for (auto m : r.minimal)
    for (std::size_t y = 0; y < f.size(); ++y)
      if (f.leq(m, y)) generated[y] = true;
  r.generates = generated == in;
  return r;
}

ElementId point_id(std::size_t i) { return {{}, "p", static_cast<std::int64_t>(i)}; }

CheckReport level_preserving_check(const FiniteOrder& f, const Permutation& g) {
  if (!is_automorphism(f, g)) throw PreconditionError("map is not an automorphism");
  const auto d = level_sets(f);
  for (const auto& level : d.levels) {
    for (auto x : level)
      if (std::find(level.begin(), level.end(), g[x]) == level.end())
        return CheckReport::fail("level_preservation", {point_id(x), point_id(g[x])});
  }
  return CheckReport::pass();
}

}  // namespace revposet

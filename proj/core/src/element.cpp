#include "revposet/element.hpp"

#include <cctype>
#include <charconv>

#include "revposet/error.hpp"

namespace revposet {

std::string ElementId::label() const {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  out += ':';
  out += role;
  out += std::to_string(index);
  return out;
}

ElementId ElementId::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("element label without ':': " + std::string(text));
  ElementId e;
  std::string_view p = text.substr(0, colon);
  while (!p.empty()) {
    const auto dot = p.find('.');
    const auto part = p.substr(0, dot);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw Error("bad path selector in element label: " + std::string(text));
    e.path.push_back(v);
    if (dot == std::string_view::npos) break;
    p.remove_prefix(dot + 1);
    if (p.empty()) throw Error("trailing '.' in element label: " + std::string(text));
  }
  std::string_view rest = text.substr(colon + 1);
  std::size_t k = 0;
  while (k < rest.size() && std::isalpha(static_cast<unsigned char>(rest[k]))) ++k;
  e.role = std::string(rest.substr(0, k));
  const auto num = rest.substr(k);
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e.index);
  if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size())
    throw Error("bad index in element label: " + std::string(text));
  return e;
}

ElementId ElementId::prefixed(std::uint64_t selector) const {
  ElementId e;
  e.path.reserve(path.size() + 1);
  e.path.push_back(selector);
  e.path.insert(e.path.end(), path.begin(), path.end());
  e.role = role;
  e.index = index;
  return e;
}

ElementId ElementId::stripped() const {
  ElementId e = *this;
  if (!e.path.empty()) e.path.erase(e.path.begin());
  return e;
}

std::size_t ElementIdHash::operator()(const ElementId& e) const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(e.index);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (auto s : e.path) mix(std::hash<std::uint64_t>{}(s));
  mix(std::hash<std::string>{}(e.role));
  return h;
}

}  // namespace revposet

#include <map>

#include "json.hpp"
#include "revposet/error.hpp"
#include "revposet/extraction.hpp"

namespace revposet {

CheckReport verify_certificate(const PosetPresentation& p, const ForbiddenCertificate& cert,
                               std::size_t n) {
  const auto canon_p = forbidden(cert.kind);
  const auto canon = canon_p.enumerate(n);
  std::vector<ElementId> image;
  image.reserve(canon.size());
  std::map<ElementId, std::size_t> seen;
  for (std::size_t i = 0; i < canon.size(); ++i) {
    ElementId y;
    try {
      y = cert.embedding(canon[i]);
    } catch (const Error& e) {
      return CheckReport::fail("embedding_missing", {canon[i]}, e.what());
    }
    if (auto bad = p.validate(y))
      return CheckReport::fail("embedding_invalid", {canon[i]}, y.label() + ": " + *bad);
    if (auto [it, fresh] = seen.emplace(y, i); !fresh)
      return CheckReport::fail("injectivity", {canon[it->second], canon[i]},
                               "both map to " + y.label());
    image.push_back(std::move(y));
  }
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = 0; j < canon.size(); ++j) {
      const bool in_kind = canon_p.leq_unchecked(canon[i], canon[j]);
      const bool in_target = p.leq_unchecked(image[i], image[j]);
      if (in_kind && !in_target)
        return CheckReport::fail("order_preservation", {canon[i], canon[j]},
                                 image[i].label() + " not <= " + image[j].label());
      if (!in_kind && in_target)
        return CheckReport::fail("order_reflection", {canon[i], canon[j]},
                                 image[i].label() + " <= " + image[j].label());
    }
  return CheckReport::pass();
}

std::string certificate_to_json(const ForbiddenCertificate& cert, std::size_t prefix) {
  nlohmann::ordered_json j;
  j["kind"] = cert.kind.key();
  j["dual"] = cert.kind.dualized;
  j["case"] = cert.case_id ? nlohmann::ordered_json(*cert.case_id) : nlohmann::ordered_json();
  j["assumptions"] = nlohmann::ordered_json::array();
  for (const auto& a : cert.assumptions)
    j["assumptions"].push_back({{"query", a.query}, {"answer", a.answer}});
  j["embedding"] = nlohmann::ordered_json::array();
  for (const auto& x : forbidden(cert.kind).enumerate(prefix))
    j["embedding"].push_back({{"canonical", x.label()}, {"target", cert.embedding(x).label()}});
  j["verified_window"] = cert.verified_window;
  j["provenance"] = cert.provenance;
  return j.dump(2);
}

ForbiddenCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate JSON: ") + e.what());
  }
  try {
    const auto kind = ForbiddenKind::parse(j.at("kind").get<std::string>());
    if (!kind) throw Error("unknown kind " + j.at("kind").dump());
    if (j.contains("dual") && j["dual"].get<bool>() != kind->dualized)
      throw Error("dual flag disagrees with kind " + kind->key());
    ForbiddenCertificate cert;
    cert.kind = *kind;
    if (j.contains("case") && !j["case"].is_null()) cert.case_id = j["case"].get<int>();
    if (j.contains("assumptions"))
      for (const auto& a : j["assumptions"])
        cert.assumptions.push_back({a.at("query").get<std::string>(), a.at("answer").get<bool>()});
    auto table = std::make_shared<std::map<ElementId, ElementId>>();
    for (const auto& e : j.at("embedding"))
      (*table)[ElementId::parse(e.at("canonical").get<std::string>())] =
          ElementId::parse(e.at("target").get<std::string>());
    cert.embedding = [table](const ElementId& x) {
      const auto it = table->find(x);
      if (it == table->end()) throw PreconditionError("no embedding entry for " + x.label());
      return it->second;
    };
    cert.verified_window = j.value("verified_window", std::size_t{0});
    cert.provenance = j.value("provenance", std::string{});
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace revposet

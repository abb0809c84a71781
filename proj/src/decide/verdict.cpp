#include <algorithm>

#include "tropid/decide.hpp"
#include "tropid/error.hpp"

namespace tropid::decide {

  std::string to_string(Status s) {
    return s == Status::holds ? "holds" : "fails";
  }

  std::string to_string(Method m) {
    return m == Method::exact ? "exact" : "falsifier";
  }

  json Verdict::to_json() const {
    json j;
    j["status"] = decide::to_string(status);
    j["method"] = decide::to_string(method);
    if (!witness) {
      j["witness"] = nullptr;
      return j;
    }
    json w = json::object();
    if (auto const* b = std::get_if<bicyclic::BicyclicAssignment>(&*witness)) {
      for (auto const& [v, e] : *b) {
        w[v.name()] = e.to_string();
      }
    } else {
      for (auto const& [v, m] : std::get<trop::MatrixAssignment>(*witness).images()) {
        w[v.name()] = m.to_string();
      }
    }
    j["witness"] = std::move(w);
    return j;
  }

  bool valid_verdict_json(json const& j) {
    if (!j.is_object() || j.size() != 3 || !j.contains("status") || !j.contains("method") || !j.contains("witness")) {
      return false;
    }
    if (!j["status"].is_string() || !j["method"].is_string()) {
      return false;
    }
    auto status = j["status"].get<std::string>();
    auto method = j["method"].get<std::string>();
    if ((status != "holds" && status != "fails") || (method != "exact" && method != "falsifier")) {
      return false;
    }
    auto const& w = j["witness"];
    if (status == "holds") {
      return w.is_null();
    }
    if (!w.is_object() || w.empty()) {
      return false;
    }
    return std::all_of(w.begin(), w.end(), [](json const& v) { return v.is_string(); });
  }

  Verdict verdict_from_json(json const& j) {
    if (!valid_verdict_json(j)) {
      throw UsageError("verdict JSON does not match the schema: " + j.dump());
    }
    Verdict v;
    v.status = j["status"] == "holds" ? Status::holds : Status::fails;
    v.method = j["method"] == "exact" ? Method::exact : Method::falsifier;
    if (j["witness"].is_null()) {
      return v;
    }
    auto const& w        = j["witness"];
    bool        matrices = w.begin()->get<std::string>().starts_with("[");
    if (matrices) {
      trop::MatrixAssignment phi;
      for (auto it = w.begin(); it != w.end(); ++it) {
        phi.set(words::Var(it.key()), trop::TropMatrix::parse(it->get<std::string>()));
      }
      v.witness = std::move(phi);
    } else {
      bicyclic::BicyclicAssignment phi;
      for (auto it = w.begin(); it != w.end(); ++it) {
        phi.insert_or_assign(words::Var(it.key()), bicyclic::BicyclicElement::parse(it->get<std::string>()));
      }
      v.witness = std::move(phi);
    }
    return v;
  }

  bool witness_separates(words::Identity const& id, Witness const& w) {
    if (auto const* b = std::get_if<bicyclic::BicyclicAssignment>(&w)) {
      return !(bicyclic::b_eval(id.lhs, *b) == bicyclic::b_eval(id.rhs, *b));
    }
    auto const& m = std::get<trop::MatrixAssignment>(w);
    return !(trop::eval_word_matrix(id.lhs, m) == trop::eval_word_matrix(id.rhs, m));
  }

  json PartnerReport::to_json() const {
    json j;
    j["word"]         = word.to_string();
    j["strategy"]     = strategy == PartnerStrategy::pruned ? "pruned" : "brute-force";
    j["candidates"]   = candidates;
    j["exact_checks"] = exact_checks;
    j["isoterm"]      = isoterm();
    json ps           = json::array();
    for (auto const& p : partners) {
      ps.push_back(p.to_string());
    }
    j["partners"] = std::move(ps);
    return j;
  }

  json CensusReport::to_json() const {
    json j;
    j["max_length"]   = max_length;
    j["min_vars"]     = min_vars;
    j["classes"]      = classes;
    j["words"]        = words;
    j["pairs"]        = pairs;
    j["exact_checks"] = exact_checks;
    json ids          = json::array();
    for (auto const& id : identities) {
      ids.push_back(id.to_string());
    }
    j["identities"] = std::move(ids);
    return j;
  }

  json ShleiferReport::to_json() const {
    json j;
    j["words"]          = words;
    j["pairs_checked"]  = pairs_checked;
    j["exact_checks"]   = exact_checks;
    j["raw_identities"] = raw_identities;
    json ids            = json::array();
    for (auto const& id : identities) {
      ids.push_back(id.to_string());
    }
    j["identities"] = std::move(ids);
    j["count"]      = identities.size();
    return j;
  }

  json ConditionReport::to_json() const {
    json j;
    j["tag"]      = tag;
    j["bounds"]   = bounds;
    j["cases"]    = cases;
    j["failures"] = failures;
    j["passed"]   = passed();
    j["details"]  = details;
    return j;
  }

  json EmbeddingReport::to_json() const {
    json j;
    j["bound"]              = bound;
    j["distinct"]           = distinct;
    j["products_checked"]   = products_checked;
    j["unit_on_generators"] = unit_on_generators;
    j["unit_on_products"]   = unit_on_products;
    j["injective"]          = injective;
    j["multiplicative"]     = multiplicative;
    j["integral"]           = integral;
    j["failures"]           = failures;
    j["passed"]             = passed();
    return j;
  }

}  // namespace tropid::decide

#include "pds/document.hpp"

#include <json.hpp>

namespace pds {

using nlohmann::json;

namespace {

json elements_to_json(const IntegerSet& set) {
  json arr = json::array();
  for (const auto& v : set) arr.push_back(v.get_str());
  return arr;
}

// strict decimal form: optional '-', digits only (mpz_set_str alone would
// silently ignore embedded whitespace)
mpz_class parse_decimal(const std::string& s, const char* field) {
  bool shape_ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && shape_ok; ++i) {
    const char c = s[i];
    shape_ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && s.size() > 1);
  }
  mpz_class v;
  if (!shape_ok || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
    throw std::invalid_argument("document: bad integer '" + s + "' in '" + field + "'");
  }
  return v;
}

IntegerSet elements_from_json(const json& arr, const char* field) {
  if (!arr.is_array()) {
    throw std::invalid_argument(std::string("document: '") + field + "' must be an array");
  }
  std::vector<mpz_class> values;
  values.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw std::invalid_argument(std::string("document: '") + field +
                                  "' entries must be decimal strings");
    }
    values.push_back(parse_decimal(item.get<std::string>(), field));
  }
  try {
    return IntegerSet::from_sorted(std::move(values));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string("document: '") + field +
                                "' is not strictly increasing");
  }
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("document: not valid JSON");
  return j;
}

std::string require_kind(const json& j, const std::string& kind) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() || j["kind"] != kind) {
    throw std::invalid_argument("document: expected kind '" + kind + "'");
  }
  return kind;
}

}  // namespace

std::string content_hash(const IntegerSet& set) {
  // FNV-1a 64 over the canonical element list
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= '\n';
    h *= 1099511628211ull;
  };
  mix("integer-set");
  for (const auto& v : set) mix(v.get_str());
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize(const SetDocument& doc) {
  json j;
  j["kind"] = doc.kind;
  j["elements"] = elements_to_json(doc.elements);
  j["meta"] = json::object();
  for (const auto& [k, v] : doc.meta) j["meta"][k] = v;
  return j.dump(2) + "\n";
}

SetDocument parse_set_document(const std::string& text) {
  json j = parse_json(text);
  SetDocument doc;
  doc.kind = require_kind(j, "integer-set");
  if (!j.contains("elements")) throw std::invalid_argument("document: missing 'elements'");
  doc.elements = elements_from_json(j["elements"], "elements");
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw std::invalid_argument("document: 'meta' must be an object");
    for (const auto& [k, v] : j["meta"].items()) {
      if (!v.is_string()) throw std::invalid_argument("document: meta values must be strings");
      doc.meta[k] = v.get<std::string>();
    }
  }
  return doc;
}

std::string serialize_trace(const ConstructionTrace& trace) {
  json j;
  j["kind"] = "theorem1-trace";
  j["set_hash"] = content_hash(trace.final_set);
  j["growth"] = trace.growth.spec;
  j["horizon"] = trace.horizon.get_str();
  j["source_sidon"] = elements_to_json(trace.source_sidon);
  j["b0"] = elements_to_json(trace.b0);
  j["removed"] = {{"c1", elements_to_json(trace.removed[0])},
                  {"c2", elements_to_json(trace.removed[1])},
                  {"c3", elements_to_json(trace.removed[2])},
                  {"c4", elements_to_json(trace.removed[3])}};
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back({{"k", s.k}, {"took", s.took_block}});
  j["steps"] = steps;
  j["final"] = elements_to_json(trace.final_set);
  j["audited"] = trace.audited;
  return j.dump(2) + "\n";
}

ConstructionTrace parse_theorem1_trace(const std::string& text) {
  json j = parse_json(text);
  require_kind(j, "theorem1-trace");
  ConstructionTrace trace;
  try {
    trace.growth = GrowthFunction::parse(j.at("growth").get<std::string>());
    trace.horizon = parse_decimal(j.at("horizon").get<std::string>(), "horizon");
    trace.source_sidon = elements_from_json(j.at("source_sidon"), "source_sidon");
    trace.b0 = elements_from_json(j.at("b0"), "b0");
    const char* keys[4] = {"c1", "c2", "c3", "c4"};
    for (int c = 0; c < 4; ++c) {
      trace.removed[c] = elements_from_json(j.at("removed").at(keys[c]), keys[c]);
    }
    for (const auto& s : j.at("steps")) {
      trace.steps.push_back({s.at("k").get<long>(), s.at("took").get<bool>()});
    }
    trace.final_set = elements_from_json(j.at("final"), "final");
    trace.audited = j.value("audited", false);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("document: malformed theorem1 trace: ") + e.what());
  }
  return trace;
}

std::string serialize_trace(const KruckebergTrace& trace) {
  json j;
  j["kind"] = "kruckeberg-trace";
  j["set_hash"] = content_hash(trace.final_set);
  j["completed_k"] = trace.completed_k;
  j["truncated"] = trace.truncated;
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json step;
    step["k"] = s.k;
    step["l"] = s.l.get_str();
    step["p"] = s.p.get_str();
    step["block"] = elements_to_json(s.block);
    if (s.pair_added) {
      step["pair"] = {s.pair_added->first.get_str(), s.pair_added->second.get_str()};
    }
    steps.push_back(std::move(step));
  }
  j["steps"] = steps;
  json density = json::array();
  for (const auto& d : trace.density) {
    density.push_back({{"k", d.k}, {"x", d.x.get_str()}, {"count", d.count.get_str()}});
  }
  j["density"] = density;
  return j.dump(2) + "\n";
}

std::string serialize_trace(const GreedyTrace& trace) {
  json j;
  j["kind"] = "greedy-trace";
  j["set_hash"] = content_hash(trace.final_set);
  j["upto"] = trace.upto;
  json t = json::array();
  for (const auto& [n, v] : trace.t_values) t.push_back({{"n", n}, {"t", v.get_str()}});
  j["t"] = t;
  json pairs = json::array();
  for (const auto& [n, pr] : trace.pair_origin) {
    pairs.push_back({{"n", n}, {"lo", pr.first.get_str()}, {"hi", pr.second.get_str()}});
  }
  j["pairs"] = pairs;
  return j.dump(2) + "\n";
}

GreedyTrace parse_greedy_trace(const std::string& text) {
  json j = parse_json(text);
  require_kind(j, "greedy-trace");
  GreedyTrace trace;
  try {
    trace.upto = j.at("upto").get<long>();
    for (const auto& row : j.at("t")) {
      trace.t_values[row.at("n").get<long>()] =
          parse_decimal(row.at("t").get<std::string>(), "t");
    }
    if (j.contains("pairs")) {
      for (const auto& row : j.at("pairs")) {
        trace.pair_origin[row.at("n").get<long>()] = {
            parse_decimal(row.at("lo").get<std::string>(), "pairs"),
            parse_decimal(row.at("hi").get<std::string>(), "pairs")};
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("document: malformed greedy trace: ") + e.what());
  }
  return trace;
}

std::string format_ratio(const mpz_class& num, const mpz_class& den) {
  return num.get_str() + "/" + den.get_str();
}

std::string decimal6(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("decimal6: zero denominator");
  // round half up at the sixth digit
  mpz_class q = (num * 1000000 * 2 + den) / (2 * den);
  mpz_class whole = q / 1000000;
  mpz_class frac = q % 1000000;
  std::string f = frac.get_str();
  return whole.get_str() + "." + std::string(6 - f.size(), '0') + f;
}

}  // namespace pds

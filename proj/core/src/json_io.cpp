#include <dhenum/json_io.hpp>

#include <dhenum/core_model.hpp>

#include <algorithm>

#include <json.hpp>

namespace dhenum {

using nlohmann::json;

namespace {

json parse_or_fail(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON document");
  return j;
}

Seq int_array(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    fail(errc::parse_error, std::string("missing or non-array field: ") + field);
  Seq out;
  for (const auto& v : j[field]) {
    if (!v.is_number_integer()) fail(errc::parse_error, std::string("non-integer entry in ") + field);
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> vertex_list(const json& arr, int n) {
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) fail(errc::parse_error, "non-integer vertex");
    int x = v.get<int>();
    if (x < 1 || x > n) fail(errc::parse_error, "vertex index out of [1, n]");
    out.push_back(x - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Instance parse_instance(std::string_view json_text) {
  json j = parse_or_fail(json_text);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    fail(errc::parse_error, "instance document needs an integer field n");
  Instance inst;
  inst.n = j["n"].get<int>();
  inst.d_plus = int_array(j, "d_plus");
  inst.d_minus = int_array(j, "d_minus");
  if (!j.contains("mu") || !j["mu"].is_array())
    fail(errc::parse_error, "instance document needs an array field mu");
  for (const auto& entry : j["mu"]) {
    if (!entry.is_object() || !entry.contains("tail") || !entry.contains("head") ||
        !entry.contains("count"))
      fail(errc::parse_error, "mu entries need tail, head and count");
    int a_plus = entry["tail"].get<int>();
    int a_minus = entry["head"].get<int>();
    long long count = entry["count"].get<long long>();
    if (count <= 0) fail(errc::parse_error, "mu count must be positive");
    inst.mu[{a_plus, a_minus}] += count;
  }
  validate_instance(inst);
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n;
  j["d_plus"] = inst.d_plus;
  j["d_minus"] = inst.d_minus;
  json mu = json::array();
  for (const auto& [key, cnt] : inst.mu)
    mu.push_back({{"tail", key.first}, {"head", key.second}, {"count", cnt}});
  j["mu"] = std::move(mu);
  return j.dump();
}

Dihypergraph parse_dihypergraph(std::string_view json_text) {
  json j = parse_or_fail(json_text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(errc::parse_error, "dihypergraph document needs n and edges");
  Dihypergraph h;
  h.n = j["n"].get<int>();
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("tail") || !e.contains("head"))
      fail(errc::parse_error, "edges need tail and head");
    h.edges.push_back({vertex_list(e["tail"], h.n), vertex_list(e["head"], h.n)});
  }
  std::sort(h.edges.begin(), h.edges.end());
  validate_dihypergraph(h);
  return h;
}

std::string dihypergraph_to_json(const Dihypergraph& h) {
  std::vector<DirectedEdge> edges = h.edges;
  std::sort(edges.begin(), edges.end());
  json j;
  j["n"] = h.n;
  json arr = json::array();
  for (const DirectedEdge& e : edges) {
    json tail = json::array(), head = json::array();
    for (int v : e.tail) tail.push_back(v + 1);
    for (int v : e.head) head.push_back(v + 1);
    arr.push_back({{"tail", std::move(tail)}, {"head", std::move(head)}});
  }
  j["edges"] = std::move(arr);
  return j.dump();
}

}  // namespace dhenum

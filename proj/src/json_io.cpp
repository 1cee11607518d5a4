#include "pries/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace pries::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadInput, what); }

std::size_t index_field(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::size_t> table_field(const json& j) {
  const auto& t = field(j, "table");
  if (!t.is_array()) bad("\"table\" must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : t) out.push_back(index_field(v, "table entry"));
  return out;
}

json pairs_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (auto [i, j] : pairs) out.push_back({i, j});
  return out;
}

}  // namespace

json parse(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Recover line and column from the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    bad(origin + ": malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse(text, path);
}

Poset poset_from_json(const json& j) {
  const auto n = index_field(field(j, "n"), "\"n\"");
  const auto& le = field(j, "le");
  if (!le.is_array()) bad("\"le\" must be an array of pairs");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : le) {
    if (!p.is_array() || p.size() != 2) bad("\"le\" entries must be [i, j] pairs");
    const auto a = index_field(p[0], "pair entry");
    const auto b = index_field(p[1], "pair entry");
    if (a >= n || b >= n) bad("pair [" + std::to_string(a) + ", " + std::to_string(b) + "] out of range");
    pairs.emplace_back(a, b);
  }
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) bad("\"labels\" must be an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) bad("\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Poset::from_pairs(n, pairs, std::move(labels));
}

json poset_to_json(const Poset& p) {
  json out{{"n", p.size()}, {"le", pairs_to_json(p.strict_pairs())}};
  if (!p.labels().empty()) out["labels"] = p.labels();
  return out;
}

FramePtr frame_from_json(const json& j) { return share(Frame(poset_from_json(j))); }

json frame_to_json(const Frame& f) { return poset_to_json(f.order()); }

LatticeMap lattice_map_from_json(const json& j) {
  auto src = frame_from_json(field(j, "source"));
  auto tgt = frame_from_json(field(j, "target"));
  return LatticeMap(std::move(src), std::move(tgt), table_field(j));
}

json lattice_map_to_json(const LatticeMap& h) {
  return {{"source", frame_to_json(h.source())}, {"target", frame_to_json(h.target())}, {"table", h.table()}};
}

MonotoneMap monotone_map_from_json(const json& j) {
  auto src = share(poset_from_json(field(j, "source")));
  auto tgt = share(poset_from_json(field(j, "target")));
  return MonotoneMap(std::move(src), std::move(tgt), table_field(j));
}

json monotone_map_to_json(const MonotoneMap& f) {
  return {{"source", poset_to_json(f.source())}, {"target", poset_to_json(f.target())}, {"table", f.table()}};
}

json spectrum_to_json(const DualSpace& x) {
  json filters = json::array();
  for (const auto& f : x.filters) filters.push_back(f.members());
  return {{"filters", filters}, {"le", pairs_to_json(x.order->strict_pairs())}};
}

json members_to_json(const Bits& b) { return b.members(); }

json sublocale_to_json(const Sublocale& s) { return members_to_json(s.members); }

json witness_pairs_to_json(const std::vector<std::pair<Elem, Elem>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({{"a", a}, {"b", b}});
  return out;
}

json check_to_json(const Check& c) { return {{"holds", c.holds}, {"witness", c.witness}}; }

json report_to_json(const JTReport& r) {
  json w = json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  return {
      {"instance", r.instance},
      {"hom_index", r.hom_index},
      {"source", r.source_label},
      {"target", r.target_label},
      {"hom", r.hom},
      {"dual", r.dual},
      {"conditions",
       {{"alg_open", r.alg_open},
        {"alg_heyting", r.alg_heyting},
        {"alg_frobenius", r.alg_frobenius},
        {"pr_cond1", r.pr_cond1},
        {"pr_cond2", r.pr_cond2},
        {"pr_cond3", r.pr_cond3}}},
      {"supporting",
       {{"equation_i", r.equation_i},
        {"equation_ii", r.equation_ii},
        {"equation_iii", r.equation_iii},
        {"int1_exchange", r.int1_exchange},
        {"cond1_open", r.cond1_open},
        {"esakia_image", r.esakia_image},
        {"dual_roundtrip", r.dual_roundtrip}}},
      {"equivalent", r.equivalent()},
      {"ok", r.ok()},
      {"finite-degenerate", r.finite_degenerate},
      {"witnesses", w},
  };
}

}  // namespace pries::io

#include "bbapsp/result_io.hpp"

#include <sstream>

namespace bbapsp {

using nlohmann::json;

json weight_to_json(Weight w) {
  if (!w.is_finite()) return "inf";
  if (w.is_integral() && std::abs(w.value()) < 9.0e15) {
    return static_cast<std::int64_t>(w.value());
  }
  return w.value();
}

Weight weight_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Weight::infinity();
    throw InputError("bad weight '" + j.get<std::string>() + "'");
  }
  if (!j.is_number()) throw InputError("weight must be a number or \"inf\"");
  return Weight(j.get<double>());
}

json counters_to_json(const RunCounters& c) {
  return json{
      {"cursor_advances", c.cursor_advances},
      {"viability_checks", c.viability_checks},
      {"psi_calls", c.psi_calls},
      {"psi_arcs_scanned", c.psi_arcs_scanned},
      {"peak_aux_arcs", c.peak_aux_arcs},
      {"peak_active_cursors", c.peak_active_cursors},
      {"promotions", c.promotions},
      {"refutations", c.refutations},
      {"tie_overrides", c.tie_overrides},
      {"sort_comparisons", c.sort_comparisons},
      {"phases", c.phases},
      {"wall_ms", static_cast<double>(c.wall_time.count()) / 1e6},
  };
}

RunCounters counters_from_json(const json& j) {
  RunCounters c;
  auto get = [&](const char* key, std::uint64_t& field) {
    if (j.contains(key)) field = j.at(key).get<std::uint64_t>();
  };
  get("cursor_advances", c.cursor_advances);
  get("viability_checks", c.viability_checks);
  get("psi_calls", c.psi_calls);
  get("psi_arcs_scanned", c.psi_arcs_scanned);
  get("peak_aux_arcs", c.peak_aux_arcs);
  get("peak_active_cursors", c.peak_active_cursors);
  get("promotions", c.promotions);
  get("refutations", c.refutations);
  get("tie_overrides", c.tie_overrides);
  get("sort_comparisons", c.sort_comparisons);
  get("phases", c.phases);
  if (j.contains("wall_ms")) {
    c.wall_time = std::chrono::nanoseconds(static_cast<std::int64_t>(j.at("wall_ms").get<double>() * 1e6));
  }
  return c;
}

json result_to_json(const ApspResult& r) {
  json matrix = json::array();
  for (VertexId u = 0; u < r.n; ++u) {
    json row = json::array();
    for (Weight w : r.matrix.row(u)) row.push_back(weight_to_json(w));
    matrix.push_back(std::move(row));
  }
  json lists = json::array();
  for (const PathList& list : r.lists) {
    json entries = json::array();
    for (const PathEntry& e : list) entries.push_back(json::array({e.source + 1, weight_to_json(e.dist)}));
    lists.push_back(std::move(entries));
  }
  json out{{"n", r.n},
           {"engine", r.engine},
           {"variant", std::string(to_string(r.variant))},
           {"matrix", std::move(matrix)},
           {"lists", std::move(lists)},
           {"counters", counters_to_json(r.counters)}};
  if (!r.potentials.empty()) {
    json h = json::array();
    for (Weight w : r.potentials) h.push_back(weight_to_json(w));
    out["potentials"] = std::move(h);
  }
  return out;
}

ApspResult result_from_json(const json& j) {
  try {
    ApspResult r;
    r.n = j.at("n").get<std::size_t>();
    r.engine = j.value("engine", "");
    r.variant = parse_variant(j.value("variant", "basic"));
    const json& matrix = j.at("matrix");
    if (matrix.size() != r.n) throw InputError("matrix has " + std::to_string(matrix.size()) + " rows, n = " + std::to_string(r.n));
    r.matrix = DistanceMatrix(r.n);
    for (VertexId u = 0; u < r.n; ++u) {
      const json& row = matrix.at(u);
      if (row.size() != r.n) throw InputError("matrix row " + std::to_string(u + 1) + " has wrong length");
      for (VertexId v = 0; v < r.n; ++v) r.matrix.set(u, v, weight_from_json(row.at(v)));
    }
    if (j.contains("lists")) {
      for (const json& entries : j.at("lists")) {
        PathList list;
        for (const json& e : entries) {
          const auto source = e.at(0).get<std::int64_t>();
          if (source < 1 || static_cast<std::size_t>(source) > r.n) throw InputError("list source out of range");
          list.push_back(PathEntry{static_cast<VertexId>(source - 1), weight_from_json(e.at(1))});
        }
        r.lists.push_back(std::move(list));
      }
    }
    if (j.contains("counters")) r.counters = counters_from_json(j.at("counters"));
    if (j.contains("potentials")) {
      for (const json& w : j.at("potentials")) r.potentials.push_back(weight_from_json(w));
    }
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed result document: ") + e.what());
  }
}

std::string dump_result(const json& doc) {
  std::ostringstream out;
  out << "{\n";
  std::size_t i = 0;
  for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
    out << "  " << json(it.key()).dump() << ": ";
    if (it->is_array() && !it->empty() && it->front().is_array()) {
      out << "[\n";
      for (std::size_t r = 0; r < it->size(); ++r) {
        out << "    " << (*it)[r].dump() << (r + 1 < it->size() ? ",\n" : "\n");
      }
      out << "  ]";
    } else {
      out << it->dump();
    }
    out << (i + 1 < doc.size() ? ",\n" : "\n");
  }
  out << "}\n";
  return out.str();
}

std::string matrix_to_tsv(const DistanceMatrix& dm) {
  std::ostringstream out;
  for (VertexId u = 0; u < dm.size(); ++u) {
    for (VertexId v = 0; v < dm.size(); ++v) {
      if (v) out << '\t';
      out << to_string(dm.at(u, v));
    }
    out << '\n';
  }
  return out.str();
}

json report_to_json(const VerificationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(json{{"check", v.check}, {"witness", v.witness}});
  }
  return json{{"passed", report.passed()}, {"violations", std::move(violations)}};
}

}  // namespace bbapsp

#include "uhs/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace uhs::io {

using nlohmann::json;

namespace {

json matrix_to_json(const FiniteMetricSpace& x) {
  json rows = json::array();
  for (int i = 0; i < x.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < x.size(); ++j) row.push_back(x.d(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

FiniteMetricSpace matrix_from_json(const json& j) {
  int n = j.at("n").get<int>();
  const json& rows = j.at("d");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("metric space: d has wrong row count");
  std::vector<Rat> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("metric space: d has wrong column count");
    for (const json& cell : row) flat.push_back(Rat::parse(cell.get<std::string>()));
  }
  FiniteMetricSpace space(n, std::move(flat));
  std::vector<Violation> bad = space.validate();
  if (!bad.empty())
    throw std::invalid_argument("metric space: invalid input (" + bad.front().describe() + ")");
  return space;
}

}  // namespace

std::string metric_space_to_json(const FiniteMetricSpace& x) {
  json j;
  j["n"] = x.size();
  j["d"] = matrix_to_json(x);
  return j.dump(2) + "\n";
}

FiniteMetricSpace metric_space_from_json(const std::string& text) {
  return matrix_from_json(json::parse(text));
}

std::string approx_space_to_json(const ApproxSpace& x) {
  json j;
  j["n"] = x.space.size();
  j["d"] = matrix_to_json(x.space);
  json alphabet = json::array();
  for (const Rat& v : x.alphabet.values()) alphabet.push_back(v.str());
  j["alphabet"] = std::move(alphabet);
  j["rounds"] = x.rounds;
  j["budget"] = x.budget;
  j["seed"] = x.seed;
  return j.dump(2) + "\n";
}

ApproxSpace approx_space_from_json(const std::string& text) {
  json j = json::parse(text);
  ApproxSpace out;
  out.space = matrix_from_json(j);
  std::vector<Rat> vals;
  for (const json& v : j.at("alphabet")) vals.push_back(Rat::parse(v.get<std::string>()));
  out.alphabet = DistanceSet(std::move(vals));
  out.rounds = j.at("rounds").get<int>();
  out.budget = j.at("budget").get<int>();
  out.seed = j.at("seed").get<std::uint64_t>();
  return out;
}

std::string step_functions_to_json(const StepFunctionSpace& s) {
  json j;
  j["depth"] = s.depth;
  json fns = json::array();
  for (const std::vector<Rat>& f : s.functions) {
    json row = json::array();
    for (const Rat& v : f) row.push_back(v.str());
    fns.push_back(std::move(row));
  }
  j["functions"] = std::move(fns);
  return j.dump(2) + "\n";
}

std::string hedgehog_to_json(const HedgehogGraph& g) {
  json j;
  j["m"] = g.m();
  json verts = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    json vert;
    if (g.is_point(v)) {
      vert["kind"] = "point";
      vert["index"] = v;
    } else {
      vert["kind"] = "node";
      vert["set"] = g.node_set(v);
    }
    verts.push_back(std::move(vert));
  }
  j["vertices"] = std::move(verts);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json{u, v, g.label(u, v).str()});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::vector<FiniteMetricSpace> targets_from_json(const std::string& text) {
  json j = json::parse(text);
  const json& arr = j.is_array() ? j : j.at("targets");
  std::vector<FiniteMetricSpace> out;
  for (const json& t : arr) out.push_back(matrix_from_json(t));
  return out;
}

std::string classification_to_csv(const ClassificationReport& r) {
  std::ostringstream os;
  os << "m,pattern_id,representative,four_values,canonical\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const ClassInfo& c = r.classes[i];
    os << r.m << "," << i << ",";
    for (std::size_t v = 0; v < c.representative.size(); ++v)
      os << (v ? " " : "") << c.representative[v];
    os << "," << (c.four_values ? "true" : "false") << "," << c.pattern.key() << "\n";
  }
  return os.str();
}

std::string classification_to_json(const ClassificationReport& r) {
  json j;
  j["m"] = r.m;
  j["four_values_count"] = r.four_values_count;
  json classes = json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const ClassInfo& c = r.classes[i];
    json cl;
    cl["pattern_id"] = i;
    cl["representative"] = c.representative;
    cl["four_values"] = c.four_values;
    cl["pattern"] = c.pattern.key();
    json cube = json::array();
    int m = c.pattern.size();
    for (int a = 0; a < m; ++a) {
      json plane = json::array();
      for (int b = 0; b < m; ++b) {
        json line = json::array();
        for (int d = 0; d < m; ++d) line.push_back(c.pattern.get(a, b, d));
        plane.push_back(std::move(line));
      }
      cube.push_back(std::move(plane));
    }
    cl["cube"] = std::move(cube);
    classes.push_back(std::move(cl));
  }
  j["classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

std::string cycle_census_to_csv(const HedgehogGraph& g, const CycleCensus& census) {
  auto kind_name = [](CycleKind k) {
    switch (k) {
      case CycleKind::PointTriangle: return "point_triangle";
      case CycleKind::TreeTriangle: return "tree_triangle";
      case CycleKind::MixedCase1: return "mixed_case1";
      case CycleKind::MixedCase2: return "mixed_case2";
      case CycleKind::MixedCase3: return "mixed_case3";
      case CycleKind::Unmatched: return "unmatched";
    }
    return "?";
  };
  std::ostringstream os;
  os << "cycle_id,length,kind,vertices,metric_ok,shape_ok,note\n";
  for (std::size_t i = 0; i < census.cycles.size(); ++i) {
    const CycleInfo& c = census.cycles[i];
    os << i << "," << c.vertices.size() << "," << kind_name(c.kind) << ",";
    for (std::size_t v = 0; v < c.vertices.size(); ++v)
      os << (v ? " " : "") << g.vertex_name(c.vertices[v]);
    os << "," << (c.metric_ok ? "true" : "false") << "," << (c.shape_ok ? "true" : "false") << ","
       << c.note << "\n";
  }
  return os.str();
}

std::string cover_report_to_csv(const DenseCopyResult& r) {
  std::ostringstream os;
  os << "ambient_index,distance_to_copy,covered\n";
  for (const CoverEntry& e : r.cover)
    os << e.ambient_index << "," << e.distance.str() << "," << (e.covered ? "true" : "false")
       << "\n";
  return os.str();
}

std::string experiment_to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream os;
  os << "seed,coloring_kind,k,eps,target_id,found,color,witness_size,millis\n";
  for (const ExperimentRow& r : rows)
    os << r.seed << "," << r.coloring_kind << "," << r.k << "," << r.eps.str() << ","
       << r.target_id << "," << (r.found ? "true" : "false") << "," << r.color << ","
       << r.witness_size << "," << r.millis << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace uhs::io

#include "phm/bundle.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace phm {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

ojson triples_of(const Mat& m) {
  ojson out = ojson::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (sgn(m.at(r, c)) != 0) {
        out.push_back(ojson::array({r, c, scalar_to_string(m.at(r, c))}));
      }
    }
  }
  return out;
}

ojson per_degree(const std::vector<Mat>& mats) {
  ojson out = ojson::object();
  for (size_t d = 0; d < mats.size(); ++d) out[std::to_string(d)] = triples_of(mats[d]);
  return out;
}

ojson per_pair(const std::vector<Mat>& mats, int order) {
  ojson out = ojson::object();
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      out[std::to_string(a) + "," + std::to_string(b)] = triples_of(mats[a * order + b]);
    }
  }
  return out;
}

Mat parse_triples(const json& j, int rows, int cols, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of [row, col, value] triples");
  Mat m(rows, cols);
  std::vector<bool> seen(static_cast<size_t>(rows) * cols, false);
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& t = j[i];
    const std::string tpath = path + "[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_string()) {
      throw SchemaError(tpath, "expected [row, col, \"p/q\"]");
    }
    const int r = t[0].get<int>(), c = t[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw SchemaError(tpath, "index (" + std::to_string(r) + "," + std::to_string(c) +
                                   ") out of range for a " + std::to_string(rows) + "x" +
                                   std::to_string(cols) + " matrix");
    }
    if (seen[static_cast<size_t>(r) * cols + c]) {
      throw SchemaError(tpath, "duplicate entry");
    }
    seen[static_cast<size_t>(r) * cols + c] = true;
    std::string err;
    const auto v = parse_scalar(t[2].get<std::string>(), &err);
    if (!v) throw SchemaError(tpath, err);
    m.at(r, c) = *v;
  }
  return m;
}

const json& need(const json& j, const std::string& key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing required block");
  return *it;
}

std::vector<int> parse_dims(const json& j, int order, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != order) {
    throw SchemaError(path, "expected one dimension per group degree");
  }
  std::vector<int> dims;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<int>() < 0) throw SchemaError(path, "bad dimension");
    dims.push_back(v.get<int>());
  }
  return dims;
}

std::vector<Mat> parse_per_degree(const json& j, const std::string& path,
                                  const std::function<std::pair<int, int>(int)>& shape, int order) {
  std::vector<Mat> out;
  for (int d = 0; d < order; ++d) {
    const std::string key = std::to_string(d);
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "." + key, "missing degree");
    const auto [r, c] = shape(d);
    out.push_back(parse_triples(*it, r, c, path + "." + key));
  }
  return out;
}

std::vector<Mat> parse_per_pair(const json& j, const std::string& path,
                                const std::function<std::pair<int, int>(int, int)>& shape,
                                int order) {
  std::vector<Mat> out(static_cast<size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const std::string key = std::to_string(a) + "," + std::to_string(b);
      const auto it = j.find(key);
      if (it == j.end()) throw SchemaError(path + "." + key, "missing degree pair");
      const auto [r, c] = shape(a, b);
      out[a * order + b] = parse_triples(*it, r, c, path + "." + key);
    }
  }
  return out;
}

Labels parse_labels(const json& j, const std::vector<int>& dims, const std::string& path) {
  Labels out;
  if (!j.is_array() || j.size() != dims.size()) throw SchemaError(path, "bad labels block");
  for (size_t d = 0; d < j.size(); ++d) {
    if (!j[d].is_array() || static_cast<int>(j[d].size()) != dims[d]) {
      throw SchemaError(path, "labels do not match dimensions");
    }
    std::vector<std::string> names;
    for (const auto& s : j[d]) names.push_back(s.get<std::string>());
    out.push_back(std::move(names));
  }
  return out;
}

ojson labels_of(const Labels& labels) {
  ojson out = ojson::array();
  for (const auto& per : labels) {
    ojson row = ojson::array();
    for (const auto& s : per) row.push_back(s);
    out.push_back(row);
  }
  return out;
}

ojson dims_of(const std::vector<int>& dims) {
  ojson out = ojson::array();
  for (const int d : dims) out.push_back(d);
  return out;
}

}  // namespace

std::string serialize_bundle(const Bundle& b) {
  ojson j;
  j["format_version"] = "1";
  j["name"] = b.name;
  const GroupTable& g = b.hopf.group;
  {
    ojson jg;
    jg["order"] = g.order;
    ojson mul = ojson::array();
    for (int a = 0; a < g.order; ++a) {
      ojson row = ojson::array();
      for (int c = 0; c < g.order; ++c) row.push_back(g.op(a, c));
      mul.push_back(row);
    }
    jg["mul"] = mul;
    ojson names = ojson::array();
    for (const auto& n : g.names) names.push_back(n);
    jg["names"] = names;
    j["group"] = jg;
  }
  {
    ojson jh;
    jh["dims"] = dims_of(b.hopf.alg.dims);
    if (!b.hopf.labels.empty()) jh["labels"] = labels_of(b.hopf.labels);
    jh["mult"] = per_degree(b.hopf.alg.mult);
    jh["unit"] = per_degree(b.hopf.alg.unit);
    jh["comult"] = per_pair(b.hopf.comult, g.order);
    jh["counit"] = triples_of(b.hopf.counit);
    jh["antipode"] = per_degree(b.hopf.antipode);
    j["hopf"] = jh;
  }
  if (b.algebra) {
    ojson ja;
    ja["dims"] = dims_of(b.algebra->alg.dims);
    if (!b.algebra->labels.empty()) ja["labels"] = labels_of(b.algebra->labels);
    ja["mult"] = per_degree(b.algebra->alg.mult);
    ja["unit"] = per_degree(b.algebra->alg.unit);
    ja["bracket"] = per_degree(b.algebra->bracket);
    ja["coaction"] = per_pair(b.algebra->coaction.rho, g.order);
    j["algebra"] = ja;
  }
  if (b.module) {
    ojson jm;
    jm["dims"] = dims_of(b.module->dims);
    if (!b.module->labels.empty()) jm["labels"] = labels_of(b.module->labels);
    jm["action"] = per_degree(b.module->act);
    jm["lie"] = per_degree(b.module->lie);
    jm["coaction"] = per_pair(b.module->coaction.rho, g.order);
    j["module"] = jm;
  }
  if (b.phi) j["phi"] = per_degree(b.phi->maps);
  if (b.expected) {
    const ExpectedValues& e = *b.expected;
    ojson je;
    je["coinvariant_dims"] = dims_of(e.coinvariant_dims);
    je["annihilator_dims"] = dims_of(e.annihilator_dims);
    je["acoinvariant_dims"] = dims_of(e.acoinvariant_dims);
    je["base_dims"] = dims_of(e.base_dims);
    je["tensor_dims"] = dims_of(e.tensor_dims);
    je["phi_algebra_map"] = e.phi_algebra_map;
    je["lie_trivial_module"] = e.lie_trivial_module;
    je["lie_trivial_algebra"] = e.lie_trivial_algebra;
    je["hypotheses"] = e.hypotheses;
    je["isomorphism"] = e.isomorphism;
    j["expected"] = je;
  }
  return j.dump(2) + "\n";
}

void write_bundle(const Bundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << serialize_bundle(b);
}

Bundle parse_bundle_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("$", "expected a JSON object");
  if (need(j, "format_version", "$") != "1") {
    throw SchemaError("$.format_version", "unsupported format version");
  }
  Bundle b;
  b.name = need(j, "name", "$").get<std::string>();

  const json& jg = need(j, "group", "$");
  const int order = need(jg, "order", "$.group").get<int>();
  if (order < 1) throw SchemaError("$.group.order", "order must be positive");
  const json& jmul = need(jg, "mul", "$.group");
  if (!jmul.is_array() || static_cast<int>(jmul.size()) != order) {
    throw SchemaError("$.group.mul", "expected an order x order table");
  }
  std::vector<int> mul;
  for (const auto& row : jmul) {
    if (!row.is_array() || static_cast<int>(row.size()) != order) {
      throw SchemaError("$.group.mul", "expected an order x order table");
    }
    for (const auto& v : row) {
      const int x = v.get<int>();
      if (x < 0 || x >= order) throw SchemaError("$.group.mul", "entry out of range");
      mul.push_back(x);
    }
  }
  GroupTable g = GroupTable::from_table(order, std::move(mul));
  if (jg.contains("names")) {
    g.names.clear();
    for (const auto& n : jg["names"]) g.names.push_back(n.get<std::string>());
    if (static_cast<int>(g.names.size()) != order) {
      throw SchemaError("$.group.names", "one name per element required");
    }
  }

  const json& jh = need(j, "hopf", "$");
  HopfGCoalgebra h;
  h.group = g;
  h.alg.dims = parse_dims(need(jh, "dims", "$.hopf"), order, "$.hopf.dims");
  h.alg.mult = parse_per_degree(
      need(jh, "mult", "$.hopf"), "$.hopf.mult",
      [&](int d) { return std::pair<int, int>{h.alg.dims[d], h.alg.dims[d] * h.alg.dims[d]}; },
      order);
  h.alg.unit = parse_per_degree(
      need(jh, "unit", "$.hopf"), "$.hopf.unit",
      [&](int d) { return std::pair<int, int>{h.alg.dims[d], 1}; }, order);
  h.comult = parse_per_pair(
      need(jh, "comult", "$.hopf"), "$.hopf.comult",
      [&](int a, int bb) {
        return std::pair<int, int>{h.alg.dims[a] * h.alg.dims[bb], h.alg.dims[g.op(a, bb)]};
      },
      order);
  h.counit = parse_triples(need(jh, "counit", "$.hopf"), 1, h.alg.dims[g.identity],
                           "$.hopf.counit");
  h.antipode = parse_per_degree(
      need(jh, "antipode", "$.hopf"), "$.hopf.antipode",
      [&](int d) { return std::pair<int, int>{h.alg.dims[g.inv(d)], h.alg.dims[d]}; }, order);
  if (jh.contains("labels")) h.labels = parse_labels(jh["labels"], h.alg.dims, "$.hopf.labels");
  b.hopf = h;

  if (j.contains("algebra")) {
    const json& ja = j["algebra"];
    ComodulePoissonAlgebra a;
    a.group = g;
    a.alg.dims = parse_dims(need(ja, "dims", "$.algebra"), order, "$.algebra.dims");
    a.alg.mult = parse_per_degree(
        need(ja, "mult", "$.algebra"), "$.algebra.mult",
        [&](int d) { return std::pair<int, int>{a.alg.dims[d], a.alg.dims[d] * a.alg.dims[d]}; },
        order);
    a.alg.unit = parse_per_degree(
        need(ja, "unit", "$.algebra"), "$.algebra.unit",
        [&](int d) { return std::pair<int, int>{a.alg.dims[d], 1}; }, order);
    a.bracket = parse_per_degree(
        need(ja, "bracket", "$.algebra"), "$.algebra.bracket",
        [&](int d) { return std::pair<int, int>{a.alg.dims[d], a.alg.dims[d] * a.alg.dims[d]}; },
        order);
    a.coaction.rho = parse_per_pair(
        need(ja, "coaction", "$.algebra"), "$.algebra.coaction",
        [&](int al, int be) {
          return std::pair<int, int>{a.alg.dims[al] * h.alg.dims[be], a.alg.dims[g.op(al, be)]};
        },
        order);
    if (ja.contains("labels")) a.labels = parse_labels(ja["labels"], a.alg.dims, "$.algebra.labels");
    b.algebra = a;
  }

  if (j.contains("module")) {
    if (!b.algebra) throw SchemaError("$.module", "module requires an algebra block");
    const json& jm = j["module"];
    PoissonHopfModule m;
    m.dims = parse_dims(need(jm, "dims", "$.module"), order, "$.module.dims");
    m.act = parse_per_degree(
        need(jm, "action", "$.module"), "$.module.action",
        [&](int d) {
          return std::pair<int, int>{m.dims[d], b.algebra->alg.dims[d] * m.dims[d]};
        },
        order);
    m.lie = parse_per_degree(
        need(jm, "lie", "$.module"), "$.module.lie",
        [&](int d) {
          return std::pair<int, int>{m.dims[d], b.algebra->alg.dims[d] * m.dims[d]};
        },
        order);
    m.coaction.rho = parse_per_pair(
        need(jm, "coaction", "$.module"), "$.module.coaction",
        [&](int al, int be) {
          return std::pair<int, int>{m.dims[al] * h.alg.dims[be], m.dims[g.op(al, be)]};
        },
        order);
    if (jm.contains("labels")) m.labels = parse_labels(jm["labels"], m.dims, "$.module.labels");
    b.module = m;
  }

  if (j.contains("phi")) {
    if (!b.algebra) throw SchemaError("$.phi", "phi requires an algebra block");
    ColinearUnitMap phi;
    phi.maps = parse_per_degree(
        j["phi"], "$.phi",
        [&](int d) { return std::pair<int, int>{b.algebra->alg.dims[d], h.alg.dims[d]}; }, order);
    b.phi = phi;
  }

  if (j.contains("expected")) {
    const json& je = j["expected"];
    ExpectedValues e;
    e.coinvariant_dims = parse_dims(need(je, "coinvariant_dims", "$.expected"), order,
                                    "$.expected.coinvariant_dims");
    e.annihilator_dims = parse_dims(need(je, "annihilator_dims", "$.expected"), order,
                                    "$.expected.annihilator_dims");
    e.acoinvariant_dims = parse_dims(need(je, "acoinvariant_dims", "$.expected"), order,
                                     "$.expected.acoinvariant_dims");
    e.base_dims = parse_dims(need(je, "base_dims", "$.expected"), order, "$.expected.base_dims");
    e.tensor_dims =
        parse_dims(need(je, "tensor_dims", "$.expected"), order, "$.expected.tensor_dims");
    e.phi_algebra_map = need(je, "phi_algebra_map", "$.expected").get<bool>();
    e.lie_trivial_module = need(je, "lie_trivial_module", "$.expected").get<bool>();
    e.lie_trivial_algebra = need(je, "lie_trivial_algebra", "$.expected").get<bool>();
    e.hypotheses = need(je, "hypotheses", "$.expected").get<bool>();
    e.isomorphism = need(je, "isomorphism", "$.expected").get<bool>();
    b.expected = e;
  }
  return b;
}

Bundle parse_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bundle_text(ss.str());
}

}  // namespace phm

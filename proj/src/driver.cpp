#include "phm/driver.hpp"

#include <sstream>

#include <json.hpp>

namespace phm {

namespace {

std::string bool_str(bool v) { return v ? "true" : "false"; }

void require_full(const Bundle& b, const std::string& what) {
  if (!b.algebra || !b.module || !b.phi) {
    throw Error(what + " needs algebra, module and phi blocks");
  }
}

}  // namespace

Outcome validate_bundle(const Bundle& b) {
  Outcome out;
  out.report.merge_as("group", check_group(b.hopf.group));
  out.report.merge_as("H", check_algebra_family(b.hopf.alg,
                                                b.hopf.labels.empty() ? nullptr : &b.hopf.labels));
  out.report.merge_as("H", check_g_coalgebra(b.hopf));
  out.report.merge_as("H", check_hopf_g_coalgebra(b.hopf));
  if (b.algebra) {
    out.report.merge_as("A", check_poisson_family(*b.algebra));
    out.report.merge_as("A", check_comodule_poisson_algebra(*b.algebra, b.hopf));
  }
  if (b.module && b.algebra) {
    out.report.merge_as("M", check_poisson_hopf_module(*b.module, *b.algebra, b.hopf));
  }
  if (b.phi && b.algebra) {
    PhiFlags flags;
    out.report.merge_as("phi", check_phi(*b.phi, b.hopf, *b.algebra, &flags));
    out.notes.emplace_back("phi.algebra_map", bool_str(flags.multiplicative));
  }
  return out;
}

Outcome lemma_suite(const Bundle& b) {
  require_full(b, "lemma suite");
  Outcome out;
  const ComodulePoissonAlgebra& a = *b.algebra;
  const PoissonHopfModule& m = *b.module;
  const ColinearUnitMap& phi = *b.phi;
  const HopfGCoalgebra& h = b.hopf;
  const GroupTable& g = h.group;

  out.report.merge_as("M", check_substructures(m, a, h));
  out.report.merge_as("M", check_projection_image(m, a, h, phi));
  out.report.merge_as("M", check_projection_identities(m, a, h, phi));

  const Retraction retraction = coaction_retraction(m, a, h, phi);
  out.report.merge_as("M", retraction.report);
  out.notes.emplace_back("retraction.lie_route", retraction.lie_route);

  // Triviality of the induced Lie action forces M^{AcoH} = M^{coH}.
  PhiFlags flags;
  check_phi(phi, h, a, &flags);
  const InducedLieAction ila_m = induced_lie_action(m, a, h, phi);
  const InducedLieAction ila_a = induced_lie_action(regular_module(a), a, h, phi);
  out.notes.emplace_back("lie_trivial_module",
                         bool_str(ila_m.well_defined && ila_m.trivial));
  out.notes.emplace_back("lie_trivial_algebra",
                         bool_str(ila_a.well_defined && ila_a.trivial));
  if (ila_m.well_defined && ila_m.trivial && flags.multiplicative && flags.colinear &&
      flags.unital) {
    const GradedSubspaceFamily macoh = acoinvariants(m, a, h);
    for (int al = 0; al < g.order; ++al) {
      const bool eq = ila_m.coh[al] == macoh[al];
      out.report.records.push_back(CheckRecord{
          "M", "coinvariants_match", {al}, eq,
          eq ? ""
             : "M^{coH} has dimension " + std::to_string(ila_m.coh[al].dim()) +
                   " but M^{AcoH} has dimension " + std::to_string(macoh[al].dim())});
    }
  } else {
    out.notes.emplace_back("coinvariants_match", "not applicable");
  }

  out.report.merge_as("gamma", check_cofree_hom_iso(m, m, a, h));

  const GradedSubspaceFamily base = compute_base(a, h);
  const TrivialComoduleModule nb = base_module(a, h, base);
  const TrivialInduction ind = induce_from_trivial(a, h, base, nb);
  out.report.merge_as("induced", ind.report);

  out.report.merge_as("adjunction", check_adjunction(m, nb, a, h));
  return out;
}

Outcome fundamental_outcome(const Bundle& b) {
  require_full(b, "fundamental certificate");
  Outcome out;
  const IsoCertificate cert = certify_fundamental_iso(*b.module, *b.algebra, b.hopf, *b.phi);
  out.report = cert.report;
  out.report.set_subject("iso");
  out.notes.emplace_back("hypotheses", cert.hypotheses ? "satisfied" : "not satisfied");
  out.notes.emplace_back("phi.algebra_map", bool_str(cert.phi_flags.multiplicative));
  out.notes.emplace_back("lie_trivial_module", bool_str(cert.lie_trivial_module));
  out.notes.emplace_back("lie_trivial_algebra", bool_str(cert.lie_trivial_algebra));
  out.notes.emplace_back("isomorphism", cert.iso_ok ? "verified" : "failed");
  out.notes.emplace_back("splitting_formula_used", bool_str(cert.splitting_formula_used));
  for (size_t d = 0; d < cert.tensor.module.dims.size(); ++d) {
    out.notes.emplace_back("tensor_dim." + std::to_string(d),
                           std::to_string(cert.tensor.module.dims[d]));
  }
  return out;
}

std::string coinvariants_listing(const Bundle& b) {
  require_full(b, "coinvariants listing");
  const ComodulePoissonAlgebra& a = *b.algebra;
  const PoissonHopfModule& m = *b.module;
  const HopfGCoalgebra& h = b.hopf;
  const GroupTable& g = h.group;

  const CoinvariantFamily coh = coinvariants(m.coaction, m.dims, h);
  const GradedSubspaceFamily ann = poisson_annihilator(m, a);
  const GradedSubspaceFamily acoh = acoinvariants(m, a, h);
  const GradedSubspaceFamily base = compute_base(a, h);

  std::ostringstream os;
  auto emit = [&](const std::string& object, int degree, const Subspace& s) {
    nlohmann::ordered_json j;
    j["object"] = object;
    j["degree"] = degree;
    j["dim"] = s.dim();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c < s.ambient; ++c) row.push_back(scalar_to_string(s.basis.at(i, c)));
      basis.push_back(row);
    }
    j["basis"] = basis;
    os << j.dump() << "\n";
  };
  {
    nlohmann::ordered_json j;
    j["object"] = "coinvariant_family";
    j["dim"] = coh.family_space.dim();
    os << j.dump() << "\n";
  }
  for (int d = 0; d < g.order; ++d) emit("McoH", d, coh.per_degree[d]);
  for (int d = 0; d < g.order; ++d) emit("MA", d, ann[d]);
  for (int d = 0; d < g.order; ++d) emit("MAcoH", d, acoh[d]);
  for (int d = 0; d < g.order; ++d) emit("B", d, base[d]);
  return os.str();
}

Outcome check_expected(const Bundle& b) {
  require_full(b, "expected block check");
  Outcome out;
  if (!b.expected) {
    out.notes.emplace_back("expected", "absent");
    return out;
  }
  const ExpectedValues& e = *b.expected;
  const ComodulePoissonAlgebra& a = *b.algebra;
  const PoissonHopfModule& m = *b.module;
  const HopfGCoalgebra& h = b.hopf;
  const GroupTable& g = h.group;

  const CoinvariantFamily coh = coinvariants(m.coaction, m.dims, h);
  const GradedSubspaceFamily ann = poisson_annihilator(m, a);
  const GradedSubspaceFamily acoh = acoinvariants(m, a, h);
  const GradedSubspaceFamily base = compute_base(a, h);
  const IsoCertificate cert = certify_fundamental_iso(m, a, h, *b.phi);

  auto check_dims = [&](const std::string& name, const std::vector<int>& expected,
                        const std::function<int(int)>& actual) {
    for (int d = 0; d < g.order; ++d) {
      const int got = actual(d);
      out.report.add("expected." + name, {d},
                     got == expected[d]
                         ? std::optional<std::string>{}
                         : std::optional<std::string>{"expected " + std::to_string(expected[d]) +
                                                      ", computed " + std::to_string(got)});
    }
  };
  check_dims("coinvariant_dims", e.coinvariant_dims,
             [&](int d) { return coh.per_degree[d].dim(); });
  check_dims("annihilator_dims", e.annihilator_dims, [&](int d) { return ann[d].dim(); });
  check_dims("acoinvariant_dims", e.acoinvariant_dims, [&](int d) { return acoh[d].dim(); });
  check_dims("base_dims", e.base_dims, [&](int d) { return base[d].dim(); });
  check_dims("tensor_dims", e.tensor_dims, [&](int d) { return cert.tensor.module.dims[d]; });

  auto check_flag = [&](const std::string& name, bool expected, bool got) {
    out.report.add("expected." + name, {},
                   got == expected ? std::optional<std::string>{}
                                   : std::optional<std::string>{std::string("expected ") +
                                                                bool_str(expected) + ", computed " +
                                                                bool_str(got)});
  };
  check_flag("phi_algebra_map", e.phi_algebra_map, cert.phi_flags.multiplicative);
  check_flag("lie_trivial_module", e.lie_trivial_module, cert.lie_trivial_module);
  check_flag("lie_trivial_algebra", e.lie_trivial_algebra, cert.lie_trivial_algebra);
  check_flag("hypotheses", e.hypotheses, cert.hypotheses);
  check_flag("isomorphism", e.isomorphism, cert.iso_ok);
  out.report.set_subject("expected");
  return out;
}

std::string render_outcome_jsonl(const Outcome& o) {
  std::ostringstream os;
  for (const auto& r : o.report.records) {
    nlohmann::ordered_json j;
    j["subject"] = r.subject;
    j["check"] = r.check;
    j["indices"] = r.indices;
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) j["witness"] = r.witness;
    os << j.dump() << "\n";
  }
  for (const auto& [key, value] : o.notes) {
    nlohmann::ordered_json j;
    j["note"] = key;
    j["value"] = value;
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string human_summary(const Outcome& o) {
  std::ostringstream os;
  const int failures = o.report.fail_count();
  os << o.report.records.size() << " checks, " << failures << " failure"
     << (failures == 1 ? "" : "s") << "\n";
  for (const auto& r : o.report.records) {
    if (r.pass) continue;
    os << "FAIL " << r.subject << " " << r.check << " [";
    for (size_t i = 0; i < r.indices.size(); ++i) {
      if (i) os << ",";
      os << r.indices[i];
    }
    os << "] " << r.witness << "\n";
  }
  for (const auto& [key, value] : o.notes) os << "note " << key << " = " << value << "\n";
  return os.str();
}

}  // namespace phm

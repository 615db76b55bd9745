#pragma once

#include <optional>

#include "phm/poisson.hpp"

namespace phm {

struct SchemaError : Error {
  std::string path;
  SchemaError(const std::string& path, const std::string& msg)
      : Error(path + ": " + msg), path(path) {}
};

// Frozen expectations carried by a fixture; every entry equals the value
// recomputed from scratch by the library (and, in the tests, by an
// independent oracle).
struct ExpectedValues {
  std::vector<int> coinvariant_dims;
  std::vector<int> annihilator_dims;
  std::vector<int> acoinvariant_dims;
  std::vector<int> base_dims;
  std::vector<int> tensor_dims;
  bool phi_algebra_map = false;
  bool lie_trivial_module = false;
  bool lie_trivial_algebra = false;
  bool hypotheses = false;
  bool isomorphism = false;
};

// On-disk unit: a group, a Hopf structure, and optionally a comodule Poisson
// algebra, a module, a colinear unit map and the expected block. All
// structure constants are exact-rational sparse triples.
struct Bundle {
  std::string name;
  HopfGCoalgebra hopf;
  std::optional<ComodulePoissonAlgebra> algebra;
  std::optional<PoissonHopfModule> module;
  std::optional<ColinearUnitMap> phi;
  std::optional<ExpectedValues> expected;
};

std::string serialize_bundle(const Bundle& b);
void write_bundle(const Bundle& b, const std::string& path);
Bundle parse_bundle_text(const std::string& text);
Bundle parse_bundle(const std::string& path);

}  // namespace phm

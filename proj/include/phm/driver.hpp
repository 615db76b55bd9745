#pragma once

#include "phm/adjunction.hpp"
#include "phm/bundle.hpp"
#include "phm/fixtures.hpp"

namespace phm {

// One certification run: the ordered check records plus informational notes
// (hypothesis flags, routes, dimensions) that are not pass/fail laws.
struct Outcome {
  Report report;
  std::vector<std::pair<std::string, std::string>> notes;
  bool pass() const { return report.all_pass(); }
};

// All applicable axiom checkers for the blocks present in the bundle.
Outcome validate_bundle(const Bundle& b);

// The lemma-level machinery: substructure closure, projection image and
// identities, the coaction retraction, the cofree hom correspondence,
// induction from trivial comodules and the adjunction on N = B.
Outcome lemma_suite(const Bundle& b);

// The fundamental isomorphism certificate.
Outcome fundamental_outcome(const Bundle& b);

// Dimensions and bases of the coinvariants, annihilator, their intersection
// and the base, rendered as deterministic records.
std::string coinvariants_listing(const Bundle& b);

// Expected-block comparison: every entry of `expected` recomputed.
Outcome check_expected(const Bundle& b);

std::string render_outcome_jsonl(const Outcome& o);
std::string human_summary(const Outcome& o);

}  // namespace phm

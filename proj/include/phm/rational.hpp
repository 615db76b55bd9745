#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace phm {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, no rounding anywhere.
using Scalar = mpq_class;

std::string scalar_to_string(const Scalar& s);

// Accepts "p" or "p/q" with q > 0. Rejects zero denominators and input that
// is not already in lowest terms; bundle files are canonical by contract.
std::optional<Scalar> parse_scalar(const std::string& text, std::string* error = nullptr);

}  // namespace phm

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz_sos/certificate.hpp"
#include "hurwitz_sos/gram_search.hpp"

namespace hsos::io {

using nlohmann::json;

// Certificate files:
//   {"p": 7, "r": 3, "blocks": [{"prefix": "b", "suffix": null,
//     "basis": ["AAB", "ABA", "BAA"],
//     "gram": [[{"re": [7, 1], "im": [0, 1]}, ...], ...]}]}
// A block may give "vectors" (list of coefficient vectors, same entry format)
// instead of "gram", optionally with a rational "scale": [num, den]; the Gram
// matrix is then scale * sum v v*.
// Numerators and denominators are JSON integers, or decimal strings when they
// do not fit in 64 bits.
//
// Ansatz files use the same block layout without "gram"; "p" and "r" are optional.

/// Thrown for anything that does not match the documented layout.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);
json gaussian_to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);

json block_shape_to_json(const SandwichBlock& block);
SandwichBlock block_shape_from_json(const json& j);

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

struct Ansatz {
  std::optional<int> p;
  std::optional<int> r;
  std::vector<SandwichBlock> blocks;
};
Ansatz ansatz_from_json(const json& j);
json ansatz_to_json(const Ansatz& a);

/// {class: [re_num, re_den, im_num, im_den]}
json residual_to_json(const TracePolynomial& t);
json report_to_json(const VerifyReport& report);
json outcome_to_json(const SearchOutcome& outcome, const SearchOptions& options);

/// Reads and parses a file; FormatError on I/O or syntax problems.
json read_json_file(const std::string& path);

}  // namespace hsos::io

#pragma once

#include <string>

#include "json.hpp"
#include "qwz/experiments.hpp"
#include "qwz/matrix.hpp"
#include "qwz/polynomial.hpp"
#include "qwz/spectra.hpp"

namespace qwz {

// Insertion-ordered JSON so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

/// Ascending list of "p/q" strings.
Json to_json(const RatPolynomial& p);
/// Row-major nested lists of "p/q" strings.
Json to_json(const RationalMatrix& m);
/// {"num": [...], "den": [...]}
Json to_json(const RationalFunction& f);
/// [{"re": x, "im": y}, ...]
Json to_json(const SpectrumMultiset& s);
/// Per-identity results with witnesses; timings are left out so reports
/// are reproducible byte for byte.
Json to_json(const VerificationReport& report);
Json to_json(const DistinguishResult& result, const std::string& first_name, const std::string& second_name);

RatPolynomial polynomial_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);

/// Fixed-width table including per-identity timings.
std::string to_text(const VerificationReport& report);

}  // namespace qwz

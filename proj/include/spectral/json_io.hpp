#pragma once

#include <json.hpp>

#include "spectral/multilaurent.hpp"
#include "spectral/series.hpp"

namespace spectral {

// Canonical JSON forms: rationals as "p/q" strings, polynomials as sorted
// term lists, series as {point, order, coeffs}. Term order follows the
// lexicographic map order, so identical values serialize byte-identically.
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const MultiLaurent& p);
nlohmann::json to_json(const LaurentSeries& s);

Rational rational_from_json(const nlohmann::json& j);
MultiLaurent multilaurent_from_json(const nlohmann::json& j);

}  // namespace spectral

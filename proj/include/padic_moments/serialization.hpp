#pragma once

#include <json.hpp>

#include "padic_moments/congruence.hpp"

namespace padic {

// {p, N, Q, tmin, tmax, terms: [[i, j, "num/den"], ...]} sorted by (i, j).
nlohmann::json to_json(const QTSeries& s);
// nmax is not part of the series schema; it is taken from the argument.
QTSeries qt_series_from_json(const nlohmann::json& j, int nmax = 1);

nlohmann::json to_json(const MomentSequence& m);
// Re-parses and re-checks p-integrality.
MomentSequence moment_sequence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CongruenceReport& r);

}  // namespace padic

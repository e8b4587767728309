#include "padic_moments/serialization.hpp"

namespace padic {

using nlohmann::json;

json to_json(const QTSeries& s) {
  const auto& pr = s.profile();
  json terms = json::array();
  s.for_each_nonzero([&](int i, int j, const Rational& c) { terms.push_back({i, j, to_string(c)}); });
  return json{{"p", pr.p},       {"N", pr.precision}, {"Q", pr.q_order},
              {"tmin", pr.tmin}, {"tmax", pr.tmax},   {"terms", terms}};
}

QTSeries qt_series_from_json(const json& j, int nmax) {
  try {
    PrecisionProfile pr;
    pr.p = j.at("p").get<unsigned long>();
    pr.precision = j.at("N").get<int>();
    pr.q_order = j.at("Q").get<int>();
    pr.tmin = j.at("tmin").get<int>();
    pr.tmax = j.at("tmax").get<int>();
    pr.nmax = nmax;
    pr.validate();
    QTSeries s(pr);
    for (const auto& term : j.at("terms")) {
      const int i = term.at(0).get<int>();
      const int t = term.at(1).get<int>();
      if (!s.in_window(i, t)) throw ConfigError("series term outside its window");
      s.set(i, t, parse_rational(term.at(2).get<std::string>()));
    }
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed series JSON: ") + e.what());
  }
}

json to_json(const MomentSequence& m) {
  json entries = json::array();
  for (int n = 0; n <= m.nmax(); ++n) entries.push_back({{"n", n}, {"series", to_json(m.entries[n])}});
  return json{{"kind", to_string(m.kind)},
              {"route", to_string(m.route)},
              {"variant", to_string(m.variant)},
              {"c", to_string(m.c)},
              {"p", m.profile.p},
              {"N", m.profile.precision},
              {"Q", m.profile.q_order},
              {"tmin", m.profile.tmin},
              {"tmax", m.profile.tmax},
              {"nmax", m.profile.nmax},
              {"entries", entries}};
}

MomentSequence moment_sequence_from_json(const json& j) {
  try {
    MomentSequence m;
    m.kind = parse_orientation_kind(j.at("kind").get<std::string>());
    m.route = parse_route(j.at("route").get<std::string>());
    m.variant = parse_variant(j.at("variant").get<std::string>());
    m.c = parse_rational(j.at("c").get<std::string>());
    m.profile.p = j.at("p").get<unsigned long>();
    m.profile.precision = j.at("N").get<int>();
    m.profile.q_order = j.at("Q").get<int>();
    m.profile.tmin = j.at("tmin").get<int>();
    m.profile.tmax = j.at("tmax").get<int>();
    m.profile.nmax = j.at("nmax").get<int>();
    m.profile.validate();
    m.entries.assign(m.profile.nmax + 1, QTSeries(m.profile));
    for (const auto& e : j.at("entries")) {
      const int n = e.at("n").get<int>();
      if (n < 0 || n > m.profile.nmax) throw ConfigError("moment index out of range");
      QTSeries s = qt_series_from_json(e.at("series"), m.profile.nmax);
      if (!(s.profile() == m.profile)) throw ConfigError("entry profile differs from the sequence");
      m.entries[n] = std::move(s);
    }
    m.require_integral();
    return m;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed moment JSON: ") + e.what());
  }
}

json to_json(const CongruenceReport& r) {
  json offenders = json::array();
  for (const auto& o : r.offenders)
    offenders.push_back({{"q", o.q_degree}, {"t", o.t_degree}, {"valuation", o.valuation}});
  json min_v = r.min_valuation == kInfiniteValuation ? json("inf") : json(r.min_valuation);
  return json{{"polynomial", r.label},
              {"sequence", r.sequence},
              {"pass", r.passed()},
              {"min_valuation", min_v},
              {"offenders", offenders},
              {"screen", {{"integer_valued_on_units", r.screened},
                          {"precision", r.screen_precision},
                          {"note", "necessary condition only"}}}};
}

}  // namespace padic

#pragma once

// Serialization of solve reports: JSON with big integers as decimal strings,
// and the Maple-style text form rendered from that JSON.

#include <string>
#include <vector>

#include <json.hpp>

#include "solve.hpp"

namespace exactlmi {

inline constexpr const char* kVersion = "0.1.0";

namespace detail {

inline nlohmann::json poly_to_json(const UniPolyZ& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

inline UniPolyZ poly_from_json(const nlohmann::json& a) {
  std::vector<Integer> c;
  for (const auto& v : a) c.emplace_back(v.get<std::string>());
  return UniPolyZ(std::move(c));
}

}  // namespace detail

/// Coefficients are listed from degree 0 upwards; box endpoints are "p/q".
inline nlohmann::json report_to_json(const SolveReport& rep, const std::vector<std::string>& names) {
  using nlohmann::json;
  json sols = json::array();
  for (const auto& s : rep.solutions) {
    json r;
    json box = json::array();
    for (const auto& I : s.box) box.push_back({to_string(I.lo), to_string(I.hi)});
    r["box"] = std::move(box);
    if (s.rank) r["rank"] = *s.rank;
    if (s.deg) r["deg"] = *s.deg;
    if (s.rur) {
      json coords = json::array();
      for (const auto& c : s.rur->coords) coords.push_back(detail::poly_to_json(c));
      r["rur"] = {{"q", detail::poly_to_json(s.rur->q)}, {"q0", detail::poly_to_json(s.rur->q0)}, {"coords", coords}};
    }
    sols.push_back(std::move(r));
  }
  json out;
  out["solutions"] = std::move(sols);
  out["status"] = rep.solutions.empty() ? "empty" : "feasible";
  json meta;
  meta["seed"] = std::to_string(rep.seed);
  meta["digits"] = rep.digits;
  meta["ranks"] = rep.ranks;
  meta["vars"] = names;
  meta["version"] = kVersion;
  if (rep.solutions.empty()) meta["certificate"] = "probabilistic";
  if (!rep.failures.empty()) meta["failures"] = rep.failures;
  out["meta"] = std::move(meta);
  return out;
}

/// Inverse of report_to_json for the solution records and metadata.
inline SolveReport report_from_json(const nlohmann::json& j) {
  SolveReport rep;
  const auto& meta = j.at("meta");
  rep.seed = std::stoull(meta.at("seed").get<std::string>());
  rep.digits = meta.at("digits").get<unsigned>();
  rep.ranks = meta.at("ranks").get<std::vector<std::size_t>>();
  if (meta.contains("failures")) rep.failures = meta.at("failures").get<std::vector<std::string>>();
  for (const auto& r : j.at("solutions")) {
    SolutionRecord s;
    for (const auto& b : r.at("box"))
      s.box.push_back({parse_rational(b.at(0).get<std::string>()), parse_rational(b.at(1).get<std::string>())});
    if (r.contains("rank")) s.rank = r.at("rank").get<std::size_t>();
    if (r.contains("deg")) s.deg = r.at("deg").get<int>();
    if (r.contains("rur")) {
      RUR R;
      R.q = detail::poly_from_json(r["rur"].at("q"));
      R.q0 = detail::poly_from_json(r["rur"].at("q0"));
      for (const auto& c : r["rur"].at("coords")) R.coords.push_back(detail::poly_from_json(c));
      s.rur = std::move(R);
    }
    rep.solutions.push_back(std::move(s));
  }
  return rep;
}

/// `[[x1 = [a1, b1], ..., rnk = r, deg = d, par = [q,q0,[q1,...]]], ...]`, or `[]`.
inline std::string render_text(const nlohmann::json& j) {
  const auto names = j.at("meta").at("vars").get<std::vector<std::string>>();
  const auto& sols = j.at("solutions");
  std::string out = "[";
  for (std::size_t k = 0; k < sols.size(); ++k) {
    const auto& r = sols[k];
    std::vector<std::string> parts;
    const auto& box = r.at("box");
    for (std::size_t i = 0; i < box.size(); ++i) {
      std::string name = i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      parts.push_back(name + " = [" + box[i][0].get<std::string>() + ", " + box[i][1].get<std::string>() + "]");
    }
    if (r.contains("rank")) parts.push_back("rnk = " + std::to_string(r["rank"].get<std::size_t>()));
    if (r.contains("deg")) parts.push_back("deg = " + std::to_string(r["deg"].get<int>()));
    if (r.contains("rur")) {
      const auto& R = r["rur"];
      std::string par = "par = [" + detail::poly_from_json(R.at("q")).to_string() + "," +
                        detail::poly_from_json(R.at("q0")).to_string() + ",[";
      const auto& coords = R.at("coords");
      for (std::size_t i = 0; i < coords.size(); ++i)
        par += (i ? "," : "") + detail::poly_from_json(coords[i]).to_string();
      parts.push_back(par + "]]");
    }
    out += k ? ",\n [" : "[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    out += "]";
  }
  return out + "]";
}

inline std::string render_text(const SolveReport& rep, const std::vector<std::string>& names) {
  return render_text(report_to_json(rep, names));
}

}  // namespace exactlmi

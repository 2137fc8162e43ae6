#include "nilseries/seriesdb.hpp"

namespace nilseries::seriesdb {

using nlohmann::json;

namespace {

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

json specs_json(const std::vector<ReductiveSpec>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::vector<ReductiveSpec> specs_from(const json& j) {
  std::vector<ReductiveSpec> out;
  for (const auto& x : j) out.push_back(ReductiveSpec::parse(x.get<std::string>()));
  return out;
}

const char* grading_kind(GradingClaim::Kind k) {
  switch (k) {
    case GradingClaim::Kind::Dim: return "dim";
    case GradingClaim::Kind::Zero: return "zero";
    case GradingClaim::Kind::Double: return "double";
    case GradingClaim::Kind::Nonzero: return "nonzero";
  }
  return "dim";
}

GradingClaim::Kind grading_kind_from(const std::string& s) {
  if (s == "zero") return GradingClaim::Kind::Zero;
  if (s == "double") return GradingClaim::Kind::Double;
  if (s == "nonzero") return GradingClaim::Kind::Nonzero;
  if (s == "dim") return GradingClaim::Kind::Dim;
  throw DataError("unknown grading kind " + s);
}

json pairs_json(const std::vector<std::pair<std::string, std::string>>& v) {
  json out = json::array();
  for (const auto& [k, x] : v) out.push_back({k, x});
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_from(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& x : j) out.emplace_back(x.at(0).get<std::string>(), x.at(1).get<std::string>());
  return out;
}

json record_json(const SeriesRecord& r) {
  json j;
  j["row"] = row_tag(r.row);
  j["label"] = r.label;
  j["display"] = r.display;
  j["exponents"] = r.exponents;
  j["a"] = rationals_json(r.a_values);
  j["carter"] = r.carter;
  json cl = json::array();
  for (const auto& c : r.classical) cl.push_back({{"a", to_string(c.a)}, {"family", c.family}, {"kind", c.kind}, {"text", c.text}});
  j["classical"] = cl;
  j["dim"] = r.dim.str();
  j["rad"] = r.rad.str();
  j["h"] = specs_json(r.h);
  j["h_printed"] = r.h_printed;
  j["group"] = r.group;
  j["fold"] = r.fold;
  j["points"] = r.points_text;
  j["points_display"] = r.points_display_text;
  json gr = json::array();
  for (const auto& g : r.gradings) {
    json x{{"kind", grading_kind(g.kind)}, {"text", g.text}, {"a", rationals_json(g.a_values)}};
    x["degree"] = g.degree;
    x["dim"] = g.dim.str();
    x["zero"] = specs_json(g.zero);
    x["other"] = g.other;
    x["count"] = g.count;
    gr.push_back(x);
  }
  j["gradings"] = gr;
  j["defines"] = pairs_json(r.defines);
  json ch = json::array();
  for (const auto& c : r.characters) ch.push_back({{"name", c.name}, {"a", rationals_json(c.a_values)}, {"expr", c.text}});
  j["characters"] = ch;
  json ex = json::array();
  for (const auto& e : r.explicit_formulas) ex.push_back({{"name", e.name}, {"a", to_string(e.a)}, {"expr", e.text}});
  j["explicit"] = ex;
  json nm = json::array();
  for (const auto& n : r.named) nm.push_back({{"a", to_string(n.a)}, {"mode", n.mode}, {"names", n.names}});
  j["named"] = nm;
  j["pair"] = r.pair ? json{r.pair->first, r.pair->second} : json(nullptr);
  json fx = json::array();
  for (const auto& f : r.fixes) fx.push_back({{"target", f.target}, {"note", f.note}, {"expr", f.text}});
  j["fixes"] = fx;
  j["notes"] = r.notes;
  return j;
}

SeriesRecord record_from(const json& j) {
  SeriesRecord r;
  r.row = parse_row(j.at("row").get<std::string>());
  r.label = j.at("label").get<std::string>();
  r.display = j.at("display").get<std::string>();
  r.exponents = j.at("exponents").get<std::vector<int>>();
  r.a_values = rationals_from(j.at("a"));
  r.carter = j.at("carter").get<std::vector<std::string>>();
  for (const auto& c : j.at("classical"))
    r.classical.push_back({parse_rational(c.at("a").get<std::string>()), c.at("family").get<std::string>(),
                           c.at("kind").get<std::string>(), c.at("text").get<std::string>()});
  r.dim = exactpoly::parse_linexp(j.at("dim").get<std::string>());
  r.rad = exactpoly::parse_linexp(j.at("rad").get<std::string>());
  r.h = specs_from(j.at("h"));
  r.h_printed = j.at("h_printed").get<std::vector<std::string>>();
  r.group = j.at("group").get<std::string>();
  r.fold = j.at("fold").get<bool>();
  r.points_text = j.at("points").get<std::string>();
  r.points_display_text = j.at("points_display").get<std::string>();
  for (const auto& x : j.at("gradings")) {
    GradingClaim g;
    g.kind = grading_kind_from(x.at("kind").get<std::string>());
    g.text = x.at("text").get<std::string>();
    g.a_values = rationals_from(x.at("a"));
    g.degree = x.at("degree").get<int>();
    g.dim = exactpoly::parse_linexp(x.at("dim").get<std::string>());
    g.zero = specs_from(x.at("zero"));
    g.other = x.at("other").get<std::string>();
    g.count = x.at("count").get<int>();
    r.gradings.push_back(g);
  }
  r.defines = pairs_from(j.at("defines"));
  for (const auto& c : j.at("characters"))
    r.characters.push_back({c.at("name").get<std::string>(), rationals_from(c.at("a")), c.at("expr").get<std::string>(), {}});
  for (const auto& e : j.at("explicit"))
    r.explicit_formulas.push_back(
        {e.at("name").get<std::string>(), parse_rational(e.at("a").get<std::string>()), e.at("expr").get<std::string>(), {}});
  for (const auto& n : j.at("named"))
    r.named.push_back({parse_rational(n.at("a").get<std::string>()), n.at("mode").get<std::string>(),
                       n.at("names").get<std::vector<std::string>>()});
  if (!j.at("pair").is_null()) r.pair = std::make_pair(j["pair"].at(0).get<std::string>(), j["pair"].at(1).get<std::string>());
  for (const auto& f : j.at("fixes"))
    r.fixes.push_back({f.at("target").get<std::string>(), f.at("note").get<std::string>(), f.at("expr").get<std::string>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace

json Registry::to_json() const {
  json j;
  j["defines"] = pairs_json(defines_);
  json w;
  w["names"] = weights_.names;
  json per = json::object();
  for (const auto& [type, vs] : weights_.weights) per[type.name()] = vs;
  w["weights"] = per;
  j["weights"] = w;
  json rows = json::array();
  for (const auto& r : rows_) {
    json m = json::array();
    for (const auto& [a, tag] : r.members) m.push_back({to_string(a), tag});
    rows.push_back({{"row", row_tag(r.row)}, {"names", r.names}, {"members", m}});
  }
  j["rows"] = rows;
  json hasse = json::array();
  for (const auto& e : hasse_) hasse.push_back({e.upper, e.lower});
  j["hasse"] = hasse;
  json recs = json::array();
  for (const auto& r : records_) recs.push_back(record_json(r));
  j["series"] = recs;
  return j;
}

Registry Registry::from_json(const json& j) {
  Registry reg;
  try {
    reg.defines_ = pairs_from(j.at("defines"));
    reg.weights_.names = j.at("weights").at("names").get<std::vector<std::string>>();
    for (const auto& [name, vs] : j.at("weights").at("weights").items())
      reg.weights_.weights[rootsystems::parse_algebra(name)] = vs.get<std::vector<std::vector<int>>>();
    for (const auto& r : j.at("rows")) {
      RowInfo info;
      info.row = parse_row(r.at("row").get<std::string>());
      info.names = r.at("names").get<std::vector<std::string>>();
      for (const auto& m : r.at("members"))
        info.members.emplace_back(parse_rational(m.at(0).get<std::string>()), m.at(1).get<std::string>());
      reg.rows_.push_back(info);
    }
    for (const auto& e : j.at("hasse")) reg.hasse_.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    for (const auto& r : j.at("series")) reg.records_.push_back(record_from(r));
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed registry json: ") + e.what());
  }
  reg.resolve();
  return reg;
}

}  // namespace nilseries::seriesdb

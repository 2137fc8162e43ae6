#include "nilseries/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "nilseries/seriesdb.hpp"
#include "nilseries/verify.hpp"

namespace nilseries::cli {

namespace {

using exactpoly::QLaurent;
using exactpoly::QuotientPair;
using nlohmann::json;
using seriesdb::Registry;
using seriesdb::Row;
using seriesdb::SeriesRecord;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* kLabelHelp =
    "Series labels are ASCII: factors joined by '.', exponents as '^k' after\n"
    "lower-case bases and as a plain digit after upper-case ones, so the\n"
    "series g g3 gQ^2 is \"g.g3.gQ2\" and g^2 g2^2 is \"g^2.g2^2\".  Labels may\n"
    "list factors in any order.  Rows: f4, e6, subexc, severi, subseveri.\n"
    "Severi and sub-Severi series also answer to their displayed names\n"
    "(\"V\", \"VV*\", \"W\").";

std::optional<rootsystems::WeightedDiagram> diagram(const Registry& reg, const SeriesRecord& rec,
                                                    const std::string& algebra) {
  auto type = rootsystems::parse_algebra(algebra);
  if (rec.exponents.empty() || !reg.weights().covers(type) ||
      reg.weights().names != reg.row(rec.row).names)
    return std::nullopt;
  return rootsystems::series_weight_to_diagram(rec.exponents, type, reg.weights());
}

std::string grading_text(const std::map<int, long>& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [i, d] : g) {
    if (d == 0) continue;
    out += (first ? "" : ", ") + std::to_string(i) + ": " + std::to_string(d);
    first = false;
  }
  return out + "}";
}

json laurent_json(const QLaurent& p) {
  json out = json::array();
  for (const auto& [t, c] : p.terms()) out.push_back({t, c.get_num().get_str(), c.get_den().get_str()});
  return out;
}

std::optional<QuotientPair> reduced_points(const Registry& reg, const SeriesRecord& rec, const Rational& a) {
  auto expr = reg.points(rec);
  if (!expr) return std::nullopt;
  long roots = seriesdb::member_algebra(reg.row(rec.row).member_at(a)).positive_roots();
  return exactpoly::reduce(*expr, a, roots);
}

json computed_columns(const Registry& reg) {
  json out = json::array();
  for (const auto& rec : reg.records()) {
    json members = json::array();
    for (std::size_t i = 0; i < rec.a_values.size(); ++i) {
      const Rational& a = rec.a_values[i];
      const std::string tag = reg.row(rec.row).member_at(a);
      json m{{"a", to_string(a)}, {"member", tag}, {"dim", to_string(rec.dim.eval(a))}, {"rad", to_string(rec.rad.eval(a))}};
      auto type = seriesdb::member_family(tag) ? std::nullopt : std::optional<std::string>(tag);
      if (type && rec.row != Row::Subexceptional && rec.row != Row::Severi && rec.row != Row::Subseveri) {
        if (auto wd = diagram(reg, rec, *type)) {
          m["diagram"] = rootsystems::diagram_string(*wd);
          m["diagram_dim"] = rootsystems::orbit_dim_from_diagram(*wd);
          json g = json::object();
          for (const auto& [k, d] : rootsystems::grading_dims(*wd))
            if (k >= 0 && d != 0) g[std::to_string(k)] = d;
          m["grading"] = g;
        }
      }
      if (a > 0) {
        try {
          if (auto p = reduced_points(reg, rec, a))
            m["points"] = {{"numerator", laurent_json(p->numerator)}, {"denominator", laurent_json(p->denominator)}};
        } catch (const exactpoly::ExactPolyError& e) {
          m["points_error"] = e.what();
        }
      }
      members.push_back(m);
    }
    out.push_back({{"row", seriesdb::row_tag(rec.row)}, {"label", rec.label}, {"members", members}});
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string export_csv(const Registry& reg) {
  std::ostringstream out;
  out << "row,label,display,a,member,carter,dim,rad,h,h_printed,group\n";
  for (const auto& rec : reg.records())
    for (std::size_t i = 0; i < rec.a_values.size(); ++i) {
      const Rational& a = rec.a_values[i];
      std::vector<std::string> f{seriesdb::row_tag(rec.row),
                                 rec.label,
                                 rec.display,
                                 to_string(a),
                                 reg.row(rec.row).member_at(a),
                                 rec.carter[i],
                                 to_string(rec.dim.eval(a)),
                                 to_string(rec.rad.eval(a)),
                                 rec.h[i].str(),
                                 rec.h_printed.empty() ? "" : rec.h_printed[i],
                                 rec.group};
      for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << csv_field(f[k]);
      out << "\n";
    }
  return out.str();
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "\\tilde{}";
    else if (c == '_' || c == '&' || c == '%' || c == '#' || c == '^') out += std::string("\\") + c + (c == '^' ? "{}" : "");
    else out += c;
  }
  return out;
}

std::string export_latex(const Registry& reg) {
  std::ostringstream out;
  out << "% series tables, one block per series\n";
  for (Row row : seriesdb::all_rows()) {
    out << "\\section*{" << seriesdb::row_tag(row) << "}\n";
    for (const auto* rec : reg.row_records(row)) {
      out << "\\paragraph{" << latex_escape(rec->display) << "}\n";
      out << "$\\dim\\mathcal O_a = " << rec->dim.str() << "$, $\\dim\\mathfrak r(a) = " << rec->rad.str() << "$\n\n";
      out << "\\begin{tabular}{l" << std::string(rec->a_values.size(), 'c') << "}\n";
      out << "$a$";
      for (const auto& a : rec->a_values) out << " & " << to_string(a);
      out << " \\\\\n$\\mathfrak g$";
      for (const auto& a : rec->a_values) out << " & " << latex_escape(reg.row(row).member_at(a));
      out << " \\\\\norbit";
      for (const auto& c : rec->carter) out << " & " << latex_escape(c);
      out << " \\\\\n$\\mathfrak h(a)$";
      for (std::size_t i = 0; i < rec->a_values.size(); ++i)
        out << " & " << latex_escape(rec->h_printed.empty() ? rec->h[i].str() : rec->h_printed[i]);
      out << " \\\\\n\\end{tabular}\n\n";
    }
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
  if (!f) throw UsageError("write failed for " + path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series of nilpotent orbits: tables, diagrams, point counts and checks", "nilseries"};
  app.footer(kLabelHelp);
  app.require_subcommand(1);

  std::string row_opt, row, label, algebra, a_text, q_text, json_path, format, out_path;
  std::vector<std::string> suites, a_list;

  auto* list = app.add_subcommand("list", "series labels and dimension formulas");
  list->add_option("--row", row_opt, "restrict to one row");
  auto* show = app.add_subcommand("show", "full record of one series");
  show->add_option("row", row)->required();
  show->add_option("label", label)->required();
  auto* diag = app.add_subcommand("diagram", "weighted Dynkin diagram on one algebra");
  diag->add_option("row", row)->required();
  diag->add_option("label", label)->required();
  diag->add_option("--algebra", algebra, "F4, E6, E7, E8 or G2")->required();
  auto* grad = app.add_subcommand("grading", "dimensions of the graded pieces");
  grad->add_option("row", row)->required();
  grad->add_option("label", label)->required();
  grad->add_option("--algebra", algebra, "F4, E6, E7, E8 or G2")->required();
  auto* pts = app.add_subcommand("points", "reduced point count at one a");
  pts->add_option("row", row)->required();
  pts->add_option("label", label)->required();
  pts->add_option("--a", a_text, "series parameter")->required();
  pts->add_option("--q", q_text, "evaluate at this q");
  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", suites, "suite to run, repeatable");
  ver->add_option("--a", a_list, "a values for point counts and characters, repeatable");
  ver->add_option("--json", json_path, "write the JSON report here");
  auto* exp = app.add_subcommand("export", "dump the registry with computed columns");
  exp->add_option("--format", format, "json, csv or latex")->required()->check(CLI::IsMember({"json", "csv", "latex"}));
  exp->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    const Registry& reg = Registry::builtin();
    if (*list) {
      std::vector<Row> rows = row_opt.empty() ? seriesdb::all_rows() : std::vector<Row>{seriesdb::parse_row(row_opt)};
      for (Row r : rows)
        for (const auto* rec : reg.row_records(r))
          out << seriesdb::row_tag(r) << "  " << rec->display << "  dim " << rec->dim.str() << "  rad " << rec->rad.str()
              << "\n";
      return 0;
    }
    if (*show) {
      const auto& rec = reg.lookup(seriesdb::parse_row(row), label);
      const json all = reg.to_json();
      for (const auto& j : all["series"])
        if (j["row"] == seriesdb::row_tag(rec.row) && j["label"] == rec.label) out << j.dump(2) << "\n";
      return 0;
    }
    if (*diag || *grad) {
      const auto& rec = reg.lookup(seriesdb::parse_row(row), label);
      auto wd = diagram(reg, rec, algebra);
      if (!wd) throw UsageError("no preferred weights for " + algebra + " in row " + row);
      if (*diag) out << rootsystems::diagram_layout(*wd) << "\n";
      else out << grading_text(rootsystems::grading_dims(*wd)) << "\n";
      return 0;
    }
    if (*pts) {
      const auto& rec = reg.lookup(seriesdb::parse_row(row), label);
      Rational a = parse_rational(a_text);
      if (!rec.has_a(a)) throw UsageError("series " + rec.label + " has no member at a=" + a_text);
      auto p = reduced_points(reg, rec, a);
      if (!p) throw UsageError("no point count recorded for " + rec.label);
      if (q_text.empty()) {
        out << (p->is_laurent() ? p->as_laurent().str() : "(" + p->numerator.str() + ") / (" + p->denominator.str() + ")")
            << "\n";
      } else {
        Rational q = parse_rational(q_text);
        out << to_string(exactpoly::eval_at(p->numerator, q) / exactpoly::eval_at(p->denominator, q)) << "\n";
      }
      return 0;
    }
    if (*ver) {
      verify::Config config;
      config.suites = suites;
      for (const auto& a : a_list) config.a_values.push_back(parse_rational(a));
      auto report = verify::run_all(config, reg);
      if (!json_path.empty()) write_file(json_path, report.to_json().dump(2) + "\n");
      out << report.text();
      return report.exit_code();
    }
    if (*exp) {
      if (format == "json") {
        json j = reg.to_json();
        j["computed"] = computed_columns(reg);
        write_file(out_path, j.dump(2) + "\n");
      } else if (format == "csv") {
        write_file(out_path, export_csv(reg));
      } else {
        write_file(out_path, export_latex(reg));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace nilseries::cli

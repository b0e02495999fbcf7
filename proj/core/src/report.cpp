#include "qmahler/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qm::verify {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

namespace {

std::string render_json(const std::vector<CheckResult>& results) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["description"] = r.description;
    o["paper_anchor"] = r.paper_anchor;
    o["status"] = to_string(r.status);
    o["lhs"] = format_number(r.lhs);
    o["rhs"] = format_number(r.rhs);
    o["abs_err"] = format_number(r.abs_err);
    o["tol"] = format_number(r.tol);
    o["pass"] = r.pass;
    o["seconds"] = format_number(r.seconds);
    out.push_back(std::move(o));
  }
  return out.dump(2) + "\n";
}

std::string render_csv(const std::vector<CheckResult>& results) {
  std::string out = "id,status,lhs,rhs,abs_err,tol,pass,seconds\n";
  for (const auto& r : results) {
    out += r.id + "," + to_string(r.status) + "," + format_number(r.lhs) + "," + format_number(r.rhs) + "," +
           format_number(r.abs_err) + "," + format_number(r.tol) + "," + (r.pass ? "true" : "false") + "," +
           format_number(r.seconds) + "\n";
  }
  return out;
}

std::string render_table(const std::vector<CheckResult>& results) {
  std::size_t id_width = 2;
  for (const auto& r : results) id_width = std::max(id_width, r.id.size());
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-11s  %-4s  %22s  %22s  %10s  %8s  %8s\n", static_cast<int>(id_width), "id",
                "status", "pass", "lhs", "rhs", "abs_err", "tol", "seconds");
  os << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-*s  %-11s  %-4s  %22.15g  %22.15g  %10.3g  %8.1g  %8.3f\n",
                  static_cast<int>(id_width), r.id.c_str(), to_string(r.status).c_str(), r.pass ? "ok" : "FAIL",
                  r.lhs, r.rhs, r.abs_err, r.tol, r.seconds);
    os << line;
  }
  return os.str();
}

}  // namespace

std::string render_report(const std::vector<CheckResult>& results, Format format) {
  switch (format) {
    case Format::json:
      return render_json(results);
    case Format::csv:
      return render_csv(results);
    case Format::table:
      return render_table(results);
  }
  return {};
}

}  // namespace qm::verify

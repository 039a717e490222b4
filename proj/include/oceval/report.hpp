#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oceval/advisor.hpp"
#include "oceval/octree.hpp"

namespace oceval {

enum class ReportFormat { Text, Json, Html, Csv };

inline std::optional<ReportFormat> parseReportFormat(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  if (s == "html") return ReportFormat::Html;
  if (s == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

namespace report {

// One decimal, period separator: 0.9134 -> "91.3%".
inline std::string percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", v * 100.0);
  return buf;
}

inline std::string fixed(double v, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// JSON numbers are rounded to 1e-6 so reports are byte-stable.
inline double rounded(double v) {
  double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

// Weighted mean score of the leaves under each sublevel name, across the
// tbox/rbox/abox components; absent when the sublevel carries no weight.
inline std::map<std::string, std::optional<double>> sublevelPrices(const EvaluationResult& eval) {
  std::map<std::string, std::pair<double, double>> acc;  // weight, weighted score
  for (const auto& n : eval.nodes) {
    if (n.checkId.empty() || !n.price) continue;
    auto first = n.path.find('/');
    auto second = n.path.find('/', first + 1);
    auto third = n.path.find('/', second + 1);
    if (third == std::string::npos) continue;
    auto& [w, s] = acc[n.path.substr(second + 1, third - second - 1)];
    w += n.relativeWeight;
    s += n.relativeWeight * *n.price;
  }
  std::map<std::string, std::optional<double>> out;
  for (auto name : kSublevels) {
    auto it = acc.find(std::string(name));
    if (it == acc.end() || it->second.first <= 0.0) {
      out[std::string(name)] = std::nullopt;
    } else {
      out[std::string(name)] = it->second.second / it->second.first;
    }
  }
  return out;
}

inline std::string htmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string csvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string progressBar(double v, int width = 40) {
  int filled = static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * width));
  return "[" + std::string(filled, '#') + std::string(width - filled, '.') + "]";
}

}  // namespace report

inline nlohmann::ordered_json reportJson(const EvaluationResult& eval,
                                         const std::vector<ImprovementAction>& actions) {
  using report::rounded;
  nlohmann::ordered_json j;
  j["oc"] = rounded(eval.oc);
  j["phase"] = std::string(phaseId(eval.phase));
  j["element_counts"] = {{"classes", eval.counts.classes},
                         {"properties", eval.counts.properties},
                         {"axioms", eval.counts.axioms},
                         {"individuals", eval.counts.individuals}};
  auto nodes = nlohmann::ordered_json::array();
  for (const auto& n : eval.nodes) {
    nlohmann::ordered_json node;
    node["path"] = n.path;
    node["weight"] = rounded(n.weight);
    node["relative_weight"] = rounded(n.relativeWeight);
    node["price"] = n.price ? nlohmann::ordered_json(rounded(*n.price)) : nlohmann::ordered_json(nullptr);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  auto list = nlohmann::ordered_json::array();
  for (const auto& a : actions) {
    nlohmann::ordered_json action;
    action["check_id"] = a.checkId;
    action["description"] = a.description;
    action["gain"] = rounded(a.gain);
    auto findings = nlohmann::ordered_json::array();
    for (const auto& f : a.findings) {
      auto subjects = nlohmann::ordered_json::array();
      for (const auto& s : f.subjects) subjects.push_back(s.str());
      findings.push_back({{"kind", f.kind}, {"subjects", subjects}, {"suggestion", f.suggestion}});
    }
    action["findings"] = std::move(findings);
    list.push_back(std::move(action));
  }
  j["actions"] = std::move(list);
  return j;
}

inline std::string renderJson(const EvaluationResult& eval, const std::vector<ImprovementAction>& actions) {
  return reportJson(eval, actions).dump(2) + "\n";
}

inline constexpr std::size_t kTextFindingsPerAction = 5;

inline std::string renderText(const EvaluationResult& eval, const std::vector<ImprovementAction>& actions,
                              bool withNodes = true) {
  using report::percent;
  std::ostringstream os;
  os << "Ontology completeness: " << percent(eval.oc) << "  (phase " << phaseLabel(eval.phase) << ")\n";
  os << report::progressBar(eval.oc) << '\n';
  os << "Elements: " << eval.counts.classes << " classes, " << eval.counts.properties << " properties, "
     << eval.counts.axioms << " axioms, " << eval.counts.individuals << " individuals\n";
  if (withNodes) {
    os << "\nConditions (weight / relative weight / price):\n";
    for (const auto& n : eval.nodes) {
      auto depth = static_cast<std::size_t>(std::count(n.path.begin(), n.path.end(), '/'));
      std::string label = std::string(2 * depth, ' ') + n.path.substr(n.path.rfind('/') + 1);
      char line[160];
      std::snprintf(line, sizeof line, "  %-34s %7s %7s %7s\n", label.c_str(), percent(n.weight).c_str(),
                    percent(n.relativeWeight).c_str(), n.price ? percent(*n.price).c_str() : "-");
      os << line;
    }
  }
  os << "\nImprovement actions:\n";
  if (actions.empty()) os << "  none\n";
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& a = actions[i];
    os << "  " << i + 1 << ". +" << percent(a.gain / 100.0) << "  " << a.description << "  [" << a.checkId
       << "]\n";
    std::size_t shown = 0, hidden = 0;
    for (const auto& f : a.findings) {
      if (f.informational) continue;
      if (shown == kTextFindingsPerAction) {
        ++hidden;
        continue;
      }
      ++shown;
      os << "       - " << f.suggestion << '\n';
    }
    if (hidden) os << "       ... and " << hidden << " more\n";
  }
  return os.str();
}

inline std::string renderCsv(const EvaluationResult& eval) {
  std::string out = "path,check_id,weight,relative_weight,price\n";
  for (const auto& n : eval.nodes) {
    out += report::csvField(n.path) + ',' + n.checkId + ',' + report::fixed(n.weight, 6) + ',' +
           report::fixed(n.relativeWeight, 6) + ',' + (n.price ? report::fixed(*n.price, 6) : "") + '\n';
  }
  return out;
}

// Static page: completeness bar, element counts, sublevel summary (the
// tabular stand-in for a radar chart), condition tree and actions.
inline std::string renderHtml(const EvaluationResult& eval, const std::vector<ImprovementAction>& actions) {
  using report::htmlEscape;
  using report::percent;
  std::ostringstream os;
  os << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
     << "<title>Ontology completeness report</title>\n<style>\n"
     << "body{font-family:sans-serif;margin:2em;max-width:60em}\n"
     << "table{border-collapse:collapse;margin:1em 0}td,th{border:1px solid #ccc;padding:.25em .6em;text-align:left}\n"
     << "td.num{text-align:right;font-variant-numeric:tabular-nums}\n"
     << ".bar{background:#eee;width:30em;height:1.2em}.fill{background:#4a8;height:100%}\n"
     << ".spoke{display:inline-block;background:#48a;height:.8em}\n"
     << "</style>\n</head>\n<body>\n";
  os << "<h1>Ontology completeness: " << percent(eval.oc) << "</h1>\n";
  os << "<p>Phase " << htmlEscape(phaseLabel(eval.phase)) << "</p>\n";
  os << "<div class=\"bar\"><div class=\"fill\" style=\"width:" << report::fixed(eval.oc * 100.0, 1)
     << "%\"></div></div>\n";

  os << "<h2>Elements</h2>\n<table>\n";
  os << "<tr><th>Classes</th><td class=\"num\">" << eval.counts.classes << "</td></tr>\n";
  os << "<tr><th>Properties</th><td class=\"num\">" << eval.counts.properties << "</td></tr>\n";
  os << "<tr><th>Axioms</th><td class=\"num\">" << eval.counts.axioms << "</td></tr>\n";
  os << "<tr><th>Individuals</th><td class=\"num\">" << eval.counts.individuals << "</td></tr>\n";
  os << "</table>\n";

  os << "<h2>Sublevels</h2>\n<table class=\"radar\">\n<tr><th>Sublevel</th><th>Price</th><th></th></tr>\n";
  const auto sublevels = report::sublevelPrices(eval);
  for (const auto& name : kSublevels) {
    auto price = sublevels.at(std::string(name));
    os << "<tr><th>" << name << "</th><td class=\"num\">" << (price ? percent(*price) : "-") << "</td><td>";
    if (price)
      os << "<span class=\"spoke\" style=\"width:" << report::fixed(*price * 20.0, 1) << "em\"></span>";
    os << "</td></tr>\n";
  }
  os << "</table>\n";

  os << "<h2>Conditions</h2>\n<table>\n"
     << "<tr><th>Path</th><th>Weight</th><th>Relative weight</th><th>Price</th></tr>\n";
  for (const auto& n : eval.nodes) {
    os << "<tr><td>" << htmlEscape(n.path) << "</td><td class=\"num\">" << percent(n.weight)
       << "</td><td class=\"num\">" << percent(n.relativeWeight) << "</td><td class=\"num\">"
       << (n.price ? percent(*n.price) : "-") << "</td></tr>\n";
  }
  os << "</table>\n";

  os << "<h2>Improvement actions</h2>\n";
  if (actions.empty()) {
    os << "<p>None.</p>\n";
  } else {
    os << "<ol>\n";
    for (const auto& a : actions) {
      os << "<li><strong>+" << percent(a.gain / 100.0) << "</strong> " << htmlEscape(a.description) << " <code>"
         << htmlEscape(a.checkId) << "</code>";
      bool any = false;
      for (const auto& f : a.findings) {
        if (f.informational) continue;
        if (!any) os << "\n<ul>\n";
        any = true;
        os << "<li>" << htmlEscape(f.suggestion) << "</li>\n";
      }
      if (any) os << "</ul>\n";
      os << "</li>\n";
    }
    os << "</ol>\n";
  }
  os << "</body>\n</html>\n";
  return os.str();
}

inline std::string render(ReportFormat format, const EvaluationResult& eval,
                          const std::vector<ImprovementAction>& actions) {
  switch (format) {
    case ReportFormat::Text: return renderText(eval, actions);
    case ReportFormat::Json: return renderJson(eval, actions);
    case ReportFormat::Html: return renderHtml(eval, actions);
    case ReportFormat::Csv: return renderCsv(eval);
  }
  return {};
}

}  // namespace oceval

#pragma once

// Weight-profile files. Grammar (JSON, `//` and `/* */` comments allowed):
//
//   {
//     "base":    "builtin" | "uniform",         optional, default "builtin"
//     "weights": { "<node path>": <number>, ... },  optional, every phase
//     "phases":  { "<phase>": { "<node path>": <number>, ... }, ... }  optional
//   }
//
// <phase> is an id ("2.3"), a name ("taxonomy-definition") or "post".
// Precedence per phase: base < weights < phases[phase]. Weights are raw and
// normalized per sibling group at evaluation time.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oceval/octree.hpp"
#include "oceval/phase.hpp"

namespace oceval {

class ProfileParseError : public ProfileError {
 public:
  ProfileParseError(const std::string& message, std::size_t line, std::size_t column)
      : ProfileError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> lineColumnAt(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

// Position of the first quoted occurrence of `key` at or after `from`.
inline std::pair<std::size_t, std::size_t> locateKey(std::string_view text, std::string_view key,
                                                     std::size_t from = 0) {
  std::string quoted = "\"" + std::string(key) + "\"";
  auto at = text.find(quoted, from);
  if (at == std::string_view::npos) return {1, 1};
  return lineColumnAt(text, at);
}

}  // namespace detail

inline ProfileSet parseProfiles(std::string_view text, const ConditionTree& tree,
                                const ProfileSet& builtin = builtinProfiles()) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end(), nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::lineColumnAt(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    auto cut = what.find("parse error");
    throw ProfileParseError("malformed JSON: " + (cut == std::string::npos ? what : what.substr(cut)), line,
                            col);
  }
  auto fail = [&](const std::string& message, std::string_view key, std::size_t from = 0) -> void {
    auto [line, col] = detail::locateKey(text, key, from);
    throw ProfileParseError(message, line, col);
  };
  if (!doc.is_object()) throw ProfileParseError("profile must be a JSON object", 1, 1);

  for (const auto& [key, value] : doc.items()) {
    if (key != "base" && key != "weights" && key != "phases") fail("unknown top-level key '" + key + "'", key);
  }

  bool uniform = false;
  if (doc.contains("base")) {
    const auto& b = doc["base"];
    if (!b.is_string() || (b != "builtin" && b != "uniform"))
      fail("'base' must be \"builtin\" or \"uniform\"", "base");
    uniform = b == "uniform";
  }

  // Map of path -> weight, with the source offset of the enclosing object.
  auto readWeights = [&](const nlohmann::json& obj, std::string_view owner, std::size_t from) {
    std::map<std::string, double> out;
    if (!obj.is_object()) fail("'" + std::string(owner) + "' must be an object", owner, from);
    for (const auto& [path, w] : obj.items()) {
      if (!w.is_number()) fail("weight for '" + path + "' must be a number", path, from);
      double v = w.get<double>();
      auto id = tree.find(path);
      if (!id) fail("unknown node path '" + path + "'", path, from);
      if (*id == ConditionTree::root()) fail("the root weight is fixed at 1", path, from);
      if (!(v >= 0.0) || !std::isfinite(v)) fail("negative weight for '" + path + "'", path, from);
      out[path] = v;
    }
    return out;
  };

  std::map<std::string, double> common;
  if (doc.contains("weights")) common = readWeights(doc["weights"], "weights", 0);

  std::map<Phase, std::pair<std::map<std::string, double>, std::size_t>> perPhase;
  if (doc.contains("phases")) {
    const auto& phases = doc["phases"];
    if (!phases.is_object()) fail("'phases' must be an object", "phases");
    auto phasesAt = text.find("\"phases\"");
    for (const auto& [name, weights] : phases.items()) {
      auto phase = parsePhase(name);
      if (!phase) fail("unknown phase '" + name + "'", name, phasesAt);
      auto at = text.find("\"" + name + "\"", phasesAt);
      if (perPhase.contains(*phase)) fail("phase '" + name + "' given twice", name, phasesAt);
      perPhase[*phase] = {readWeights(weights, name, at), at};
    }
  }

  ProfileSet out;
  for (Phase p : kAllPhases) {
    WeightProfile profile;
    profile.phase = p;
    if (!uniform) profile = builtin.at(p);
    profile.phase = p;
    for (const auto& [path, w] : common) profile.weights[path] = w;
    std::size_t at = 0;
    if (auto it = perPhase.find(p); it != perPhase.end()) {
      for (const auto& [path, w] : it->second.first) profile.weights[path] = w;
      at = it->second.second;
    }
    try {
      profile.validate(tree);
    } catch (const ProfileError& e) {
      auto [line, col] = perPhase.contains(p) ? detail::lineColumnAt(text, at) : std::pair<std::size_t, std::size_t>{1, 1};
      throw ProfileParseError("phase " + std::string(phaseId(p)) + ": " + e.what(), line, col);
    }
    out[p] = std::move(profile);
  }
  return out;
}

inline ProfileSet loadProfiles(const std::string& path, const ConditionTree& tree) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProfileError("cannot read profile file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parseProfiles(ss.str(), tree);
}

// Inverse of parseProfiles for a uniform base: every weight of every phase.
inline std::string dumpProfiles(const ProfileSet& profiles, const ConditionTree& tree) {
  nlohmann::ordered_json doc;
  doc["base"] = "uniform";
  nlohmann::ordered_json phases = nlohmann::ordered_json::object();
  for (const auto& [phase, profile] : profiles) {
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& n : tree.nodes())
      if (n.parent) w[n.path] = profile.raw(n.path);
    phases[std::string(phaseId(phase))] = w;
  }
  doc["phases"] = phases;
  return doc.dump(2) + "\n";
}

}  // namespace oceval

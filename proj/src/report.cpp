#include "paraframe/report.hpp"

#include <unistd.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

namespace paraframe {

namespace {

constexpr const char* kGreen = "\x1b[32m";
constexpr const char* kRed = "\x1b[31m";
constexpr const char* kBold = "\x1b[1m";
constexpr const char* kReset = "\x1b[0m";

bool section_has_failures(const Report::Section& s) {
  for (const auto& [k, v] : s.entries)
    if (v == "FAIL") return true;
  for (const auto& c : s.children)
    if (section_has_failures(c)) return true;
  return false;
}

void render_text(const Report::Section& s, std::ostringstream& out, const std::string& prefix,
                 bool color) {
  out << prefix << "[" << s.name << "]\n";
  for (const auto& [k, v] : s.entries) {
    out << prefix << k << " = ";
    if (color && v == "pass")
      out << kGreen << v << kReset;
    else if (color && v == "FAIL")
      out << kRed << kBold << v << kReset;
    else
      out << v;
    out << "\n";
  }
  for (const auto& c : s.children) render_text(c, out, prefix + "  ", color);
}

nlohmann::ordered_json render_json(const Report::Section& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [k, v] : s.entries) entries.push_back({{"key", k}, {"value", v}});
  j["entries"] = std::move(entries);
  auto children = nlohmann::ordered_json::array();
  for (const auto& c : s.children) children.push_back(render_json(c));
  j["sections"] = std::move(children);
  return j;
}

}  // namespace

bool Report::has_failures() const {
  for (const auto& s : sections_)
    if (section_has_failures(s)) return true;
  return false;
}

std::string Report::to_text(bool color) const {
  std::ostringstream out;
  out << kSchemaId << "\n";
  for (const auto& s : sections_) render_text(s, out, "", color);
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = std::string(kSchemaId);
  auto sections = nlohmann::ordered_json::array();
  for (const auto& s : sections_) sections.push_back(render_json(s));
  j["sections"] = std::move(sections);
  return j.dump(2) + "\n";
}

bool color_allowed_for_stdout() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(STDOUT_FILENO) == 1;
}

}  // namespace paraframe

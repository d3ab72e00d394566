#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paraframe {

/// Structured result tree rendered either as stable line-oriented text or as a
/// hierarchical JSON document. Both renderings are deterministic: identical
/// reports produce byte-identical output.
class Report {
 public:
  struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<Section> children;

    explicit Section(std::string n) : name(std::move(n)) {}

    void add(std::string key, std::string value) {
      entries.emplace_back(std::move(key), std::move(value));
    }
    void add_verdict(std::string key, bool pass) { add(std::move(key), pass ? "pass" : "FAIL"); }
    void add_child(Section s) { children.push_back(std::move(s)); }
  };

  static constexpr std::string_view kSchemaId = "paraframe-report/1";

  void add(Section s) { sections_.push_back(std::move(s)); }
  const std::vector<Section>& sections() const { return sections_; }

  /// Any entry whose value is "FAIL" (recursively).
  bool has_failures() const;

  std::string to_text(bool color) const;
  std::string to_json() const;

 private:
  std::vector<Section> sections_;
};

/// Color is used only when stdout is a terminal and NO_COLOR is unset.
bool color_allowed_for_stdout();

}  // namespace paraframe

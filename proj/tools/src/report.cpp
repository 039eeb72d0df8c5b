#include "fockbridge_cli/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace fockbridge::cli {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

std::optional<bool> CheckReport::pass() const {
  if (!deviation) return std::nullopt;
  return *deviation <= tolerance;
}

std::string report_json(const std::vector<CheckReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json out = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["deviation"] = r.deviation ? ordered_json(*r.deviation) : ordered_json(nullptr);
    j["tolerance"] = r.tolerance;
    const auto p = r.pass();
    j["pass"] = p ? ordered_json(*p) : ordered_json(nullptr);
    j["seconds"] = r.seconds ? ordered_json(*r.seconds) : ordered_json(nullptr);
    j["status"] = to_string(r.status);
    if (!r.reason.empty()) j["reason"] = r.reason;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string report_summary(const std::vector<CheckReport>& reports) {
  std::string text;
  int counts[4] = {0, 0, 0, 0};
  char line[512];
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.status)];
    if (r.deviation) {
      std::snprintf(line, sizeof line, "%-8s %-44s dev %.3e  tol %.1e", std::string(to_string(r.status)).c_str(),
                    r.name.c_str(), *r.deviation, r.tolerance);
    } else {
      std::snprintf(line, sizeof line, "%-8s %-44s %s", std::string(to_string(r.status)).c_str(), r.name.c_str(),
                    r.reason.c_str());
    }
    text += line;
    if (r.seconds) {
      std::snprintf(line, sizeof line, "  %.3fs", *r.seconds);
      text += line;
    }
    text += "\n";
  }
  std::snprintf(line, sizeof line, "%d passed, %d failed, %d skipped, %d errors\n", counts[0], counts[1], counts[2],
                counts[3]);
  return text + line;
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.capacity_exceeded) return 3;
  for (const auto& r : reports)
    if (r.status == CheckStatus::Fail || r.status == CheckStatus::Error) return 1;
  return 0;
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path path = fs::path(dir) / name;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

}  // namespace fockbridge::cli

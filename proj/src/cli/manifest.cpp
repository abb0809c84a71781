#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "tropid/cli.hpp"
#include "tropid/error.hpp"

namespace tropid::cli {

  std::filesystem::path default_manifest_path() {
    return std::filesystem::path(TROPID_DATA_DIR) / "paper_manifest.json";
  }

  json load_manifest(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot open manifest " + path.string());
    }
    auto manifest = json::parse(in, nullptr, false);
    if (manifest.is_discarded() || !manifest.is_object() || !manifest.contains("claims") || !manifest["claims"].is_array()) {
      throw UsageError("manifest " + path.string() + " is not a JSON object with a \"claims\" array");
    }
    std::set<std::string> ids;
    for (auto const& claim : manifest["claims"]) {
      if (!claim.is_object() || !claim.contains("id") || !claim.contains("args") || !claim.contains("expect")
          || !claim["args"].is_array() || !claim["expect"].is_object()) {
        throw UsageError("manifest claim needs id, args and expect: " + claim.dump());
      }
      if (!ids.insert(claim["id"].get<std::string>()).second) {
        throw UsageError("duplicate manifest claim id " + claim["id"].dump());
      }
    }
    return manifest;
  }

  json verify_manifest(json const& manifest, bool fast, std::vector<std::string> const& forwarded, bool timings) {
    json        claims = json::array();
    std::size_t reproduced = 0, failed = 0, skipped = 0;
    for (auto const& claim : manifest["claims"]) {
      auto const& source = fast && claim.contains("fast_args") ? claim["fast_args"] : claim["args"];
      auto        args   = source.get<std::vector<std::string>>();
      std::string command = "tropid";
      for (auto const& a : args) {
        command += " " + (a.find(' ') == std::string::npos ? a : "\"" + a + "\"");
      }
      args.insert(args.end(), forwarded.begin(), forwarded.end());
      args.push_back("--json");

      std::ostringstream out, err;
      auto               start = std::chrono::steady_clock::now();
      int                code  = run(args, out, err);
      double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      json entry{{"id", claim["id"]}, {"command", command}};
      if (claim.contains("description")) {
        entry["description"] = claim["description"];
      }
      json mismatches = json::array();
      if (code == internal_error && err.str().starts_with("refused:")) {
        entry["status"] = "skipped(bound)";
        entry["reason"] = err.str().substr(0, err.str().find('\n'));
        ++skipped;
      } else if (code != ok) {
        entry["status"] = "failed";
        entry["reason"] = "exit code " + std::to_string(code) + ": " + err.str().substr(0, err.str().find('\n'));
        ++failed;
      } else {
        auto result = json::parse(out.str(), nullptr, false);
        for (auto const& [pointer, expected] : claim["expect"].items()) {
          json::json_pointer ptr(pointer);
          if (result.is_discarded() || !result.contains(ptr)) {
            mismatches.push_back({{"pointer", pointer}, {"expected", expected}, {"actual", nullptr}});
          } else if (result[ptr] != expected) {
            mismatches.push_back({{"pointer", pointer}, {"expected", expected}, {"actual", result[ptr]}});
          }
        }
        if (mismatches.empty()) {
          entry["status"] = "reproduced";
          ++reproduced;
        } else {
          entry["status"]     = "failed";
          entry["mismatches"] = mismatches;
          ++failed;
        }
      }
      if (timings) {
        entry["runtime_s"] = seconds;
      }
      claims.push_back(std::move(entry));
    }
    return {{"mode", fast ? "fast" : "full"},
            {"claims", claims},
            {"summary", {{"reproduced", reproduced}, {"failed", failed}, {"skipped", skipped}, {"total", claims.size()}}}};
  }

}  // namespace tropid::cli

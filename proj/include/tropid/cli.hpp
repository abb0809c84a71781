#pragma once

// Command-line front end: argument dispatch, the result cache and the
// manifest-driven reproduction report.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace tropid::cli {

  using nlohmann::json;

  enum ExitCode : int { ok = 0, usage_error = 1, internal_error = 2 };

  // Runs one command. `args` excludes the program name. Exit codes: 0 on a
  // computed result (a falsified identity included), 1 on usage or parse
  // errors, 2 on internal errors and cap refusals.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Append-only JSONL store of command results keyed by the SHA-256 of the
  // operation name and its canonical argument JSON. Lines that fail to parse
  // are ignored, so readers tolerate partial writes.
  class Cache {
   public:
    // $TROPID_CACHE_DIR, else .tropid-cache/ in the working directory.
    static std::filesystem::path default_directory();

    explicit Cache(std::filesystem::path directory);

    std::optional<json> lookup(std::string const& op, json const& args) const;
    void                store(std::string const& op, json const& args, json const& result);

    std::filesystem::path const& file() const noexcept {
      return _file;
    }
    static std::string key(std::string const& op, json const& args);

   private:
    std::filesystem::path                 _file;
    std::unordered_map<std::string, json> _records;
  };

  // Manifest of reproducible claims: {"claims": [{"id", "description",
  // "args", "fast_args"?, "expect": {json-pointer: value}}]}.
  std::filesystem::path default_manifest_path();
  json                  load_manifest(std::filesystem::path const& path);

  // Runs every claim through `run` with --json and compares the expected
  // values. Each claim id appears exactly once in the report, with status
  // reproduced, failed or skipped(bound) (the command hit a cap).
  json verify_manifest(json const& manifest, bool fast, std::vector<std::string> const& forwarded, bool timings);

}  // namespace tropid::cli

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tropid/cli.hpp"

namespace tropid::cli {

  namespace {

    std::mutex writer_mtx;

    std::string sha256_hex(std::string const& data) {
      unsigned char digest[EVP_MAX_MD_SIZE];
      unsigned int  len = 0;
      if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("cache: SHA-256 failed");
      }
      std::ostringstream hex;
      for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
      }
      return hex.str();
    }

    std::string utc_timestamp() {
      auto        now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::tm     tm{};
      gmtime_r(&now, &tm);
      char buf[32];
      std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
      return buf;
    }

  }  // namespace

  std::filesystem::path Cache::default_directory() {
    if (char const* dir = std::getenv("TROPID_CACHE_DIR"); dir && *dir) {
      return dir;
    }
    return ".tropid-cache";
  }

  std::string Cache::key(std::string const& op, json const& args) {
    return sha256_hex(op + "\n" + args.dump());
  }

  Cache::Cache(std::filesystem::path directory) : _file(std::move(directory) / "records.jsonl") {
    std::ifstream in(_file);
    std::string   line;
    while (std::getline(in, line)) {
      auto record = json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object() || !record.contains("key") || !record.contains("result")
          || !record["key"].is_string()) {
        continue;
      }
      _records.insert_or_assign(record["key"].get<std::string>(), record["result"]);
    }
  }

  std::optional<json> Cache::lookup(std::string const& op, json const& args) const {
    if (auto it = _records.find(key(op, args)); it != _records.end()) {
      return std::optional<json>(std::in_place, it->second);
    }
    return std::nullopt;
  }

  void Cache::store(std::string const& op, json const& args, json const& result) {
    json record{{"op", op}, {"key", key(op, args)}, {"args", args}, {"result", result}, {"timestamp", utc_timestamp()}};
    std::lock_guard<std::mutex> lock(writer_mtx);
    std::filesystem::create_directories(_file.parent_path());
    std::ofstream out(_file, std::ios::app);
    out << record.dump() << '\n';
    out.flush();
    if (!out) {
      throw std::runtime_error("cache: cannot append to " + _file.string());
    }
    _records.insert_or_assign(record["key"].get<std::string>(), result);
  }

}  // namespace tropid::cli

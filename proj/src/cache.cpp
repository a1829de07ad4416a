// nrtkit - enumeration and classification of normalized right transversals

#include "nrt/cache.hpp"

#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "nrt/error.hpp"
#include "nrt/serialize.hpp"

namespace nrt {

  namespace fs = std::filesystem;

  std::string cache_key(std::string const&               group_hash,
                        std::vector<element_type> const& subgroup,
                        std::string const&               engine_version) {
    std::string text = group_hash + "|";
    for (auto x : subgroup) {
      text += std::to_string(x) + ",";
    }
    text += "|" + engine_version;
    return sha256_hex(text);
  }

  ReportCache::ReportCache(fs::path dir, std::string engine_version)
      : _dir(std::move(dir)), _engine_version(std::move(engine_version)) {}

  fs::path ReportCache::path_for(std::string const& key) const {
    return _dir / (key + ".json");
  }

  std::optional<IsoClassReport>
  ReportCache::load(std::string const&               group_hash,
                    std::vector<element_type> const& subgroup,
                    std::ostream*                    warn) const {
    auto const      key  = cache_key(group_hash, subgroup, _engine_version);
    auto const      path = path_for(key);
    std::error_code ec;
    if (!fs::exists(path, ec)) {
      return std::nullopt;
    }
    try {
      std::ifstream in(path);
      json          record = json::parse(in);
      if (record.at("key").get<std::string>() != key
          || record.at("engine_version").get<std::string>() != _engine_version) {
        return std::nullopt;
      }
      auto report = report_from_json(record.at("report"));
      if (report.group_hash != group_hash || report.subgroup != subgroup) {
        return std::nullopt;
      }
      return report;
    } catch (std::exception const& e) {
      if (warn != nullptr) {
        *warn << "warning: ignoring corrupt cache record " << path.string()
              << ": " << e.what() << '\n';
      }
      return std::nullopt;
    }
  }

  void ReportCache::store(IsoClassReport const& report) const {
    static std::atomic<unsigned long> counter{0};
    auto const key = cache_key(report.group_hash, report.subgroup, _engine_version);
    json       record;
    record["schema_version"] = JSON_SCHEMA_VERSION;
    record["key"]            = key;
    record["engine_version"] = _engine_version;
    record["report"]         = report_to_json(report);

    std::error_code ec;
    fs::create_directories(_dir, ec);
    if (ec) {
      throw ResourceError("cannot create cache directory " + _dir.string()
                          + ": " + ec.message());
    }
    std::ostringstream suffix;
    suffix << ".tmp." << ::getpid() << '.'
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
           << counter++;
    auto const final_path = path_for(key);
    auto const temp_path  = fs::path(final_path.string() + suffix.str());
    {
      std::ofstream out(temp_path, std::ios::binary | std::ios::trunc);
      out << record.dump(2) << '\n';
      out.flush();
      if (!out) {
        fs::remove(temp_path, ec);
        throw ResourceError("cannot write cache record " + temp_path.string());
      }
    }
    fs::rename(temp_path, final_path, ec);
    if (ec) {
      fs::remove(temp_path, ec);
      throw ResourceError("cannot publish cache record " + final_path.string());
    }
  }

}  // namespace nrt

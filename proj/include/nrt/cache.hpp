// nrtkit - enumeration and classification of normalized right transversals
//
// On-disk cache of IsoClassReport records, one JSON file per pair.

#ifndef NRT_CACHE_HPP_
#define NRT_CACHE_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nrt/orbit.hpp"

namespace nrt {

  inline constexpr char const* ENGINE_VERSION = "nrtkit-1";

  //! Environment variable naming the default cache directory.
  inline constexpr char const* CACHE_DIR_ENV = "NRT_CACHE_DIR";

  //! SHA-256 hex of (group hash, subgroup element list, engine version).
  std::string cache_key(std::string const&               group_hash,
                        std::vector<element_type> const& subgroup,
                        std::string const&               engine_version = ENGINE_VERSION);

  class ReportCache {
   public:
    explicit ReportCache(std::filesystem::path dir,
                         std::string           engine_version = ENGINE_VERSION);

    [[nodiscard]] std::filesystem::path const& directory() const noexcept {
      return _dir;
    }

    [[nodiscard]] std::filesystem::path path_for(std::string const& key) const;

    //! A hit requires the stored key and engine version to match exactly.
    //! Unreadable or corrupt records are misses; a warning goes to `warn`
    //! when given.
    [[nodiscard]] std::optional<IsoClassReport>
    load(std::string const&               group_hash,
         std::vector<element_type> const& subgroup,
         std::ostream*                    warn = nullptr) const;

    //! Writes to a temporary file in the cache directory, then renames it
    //! over the record. Throws ResourceError if the directory is not
    //! writable.
    void store(IsoClassReport const& report) const;

   private:
    std::filesystem::path _dir;
    std::string           _engine_version;
  };

}  // namespace nrt

#endif  // NRT_CACHE_HPP_

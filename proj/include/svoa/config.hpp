#pragma once
// Run configuration: a key = value text file, SVOA_<KEY> environment
// variables and command line flags. Flags win over the file, the file over
// the environment. The defaults reproduce the acceptance suite.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svoa {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int y_choice = 1;
  std::string lattice = "II9,1";
  std::string lattice_basis_file;  // ten rows of ten coordinates; overrides `lattice`
  std::string cache_dir;           // empty: no persistent cache
  std::string format = "text";     // text or json

  std::uint64_t seed = 1;
  int structure_samples = 200;
  int borcherds_samples = 100;
  int sweep_degree = 3;
  int picture_samples = 40;
  int pairing_samples = 50;
  int jacobi_elements = 12;
  int window_lo = -1, window_hi = 3;
  int qseries_order = 8;
  int height = 6;
  std::string reference = "1,1,0,0,0,0,0,0,0,2";

  // Set one key from its text form; throws ConfigError on unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  std::map<std::string, std::string> values() const;
  static std::vector<std::string> keys();

  // Lines `key = value`; '#' starts a comment. Throws ConfigError with the line number.
  void apply_file(const std::string& path);
  // SVOA_<KEY> with the key upper-cased; getenv is injectable for tests.
  void apply_env(const std::function<const char*(const char*)>& getenv_fn);
};

// Environment, then file, then flag overrides (key -> text).
Config resolve_config(const std::optional<std::string>& file, const std::map<std::string, std::string>& flags,
                      const std::function<const char*(const char*)>& getenv_fn);

}  // namespace svoa

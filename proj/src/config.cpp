#include "svoa/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace svoa {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_int(const std::string& key, const std::string& v) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw ConfigError("config key " + key + ": not an integer: '" + v + "'");
  return out;
}

int parse_bounded(const std::string& key, const std::string& v, int lo, int hi) {
  int x = parse_int<int>(key, v);
  if (x < lo || x > hi)
    throw ConfigError("config key " + key + ": " + v + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

}  // namespace

std::vector<std::string> Config::keys() {
  return {"y_choice",         "lattice",         "lattice_basis_file", "cache_dir",       "format",
          "seed",             "structure_samples", "borcherds_samples", "sweep_degree",    "picture_samples",
          "pairing_samples",  "jacobi_elements", "window_lo",          "window_hi",       "qseries_order",
          "height",           "reference"};
}

void Config::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "y_choice") {
    int y = parse_int<int>(key, v);
    if (y != 1 && y != -1) throw ConfigError("config key y_choice: must be 1 or -1");
    y_choice = y;
  } else if (key == "lattice") {
    lattice = v;
  } else if (key == "lattice_basis_file") {
    lattice_basis_file = v;
  } else if (key == "cache_dir") {
    cache_dir = v;
  } else if (key == "format") {
    if (v != "text" && v != "json") throw ConfigError("config key format: must be text or json");
    format = v;
  } else if (key == "seed") {
    seed = parse_int<std::uint64_t>(key, v);
  } else if (key == "structure_samples") {
    structure_samples = parse_bounded(key, v, 1, 1000000);
  } else if (key == "borcherds_samples") {
    borcherds_samples = parse_bounded(key, v, 1, 1000000);
  } else if (key == "sweep_degree") {
    sweep_degree = parse_bounded(key, v, 0, 5);
  } else if (key == "picture_samples") {
    picture_samples = parse_bounded(key, v, 1, 100000);
  } else if (key == "pairing_samples") {
    pairing_samples = parse_bounded(key, v, 1, 100000);
  } else if (key == "jacobi_elements") {
    jacobi_elements = parse_bounded(key, v, 2, 12);
  } else if (key == "window_lo") {
    window_lo = parse_bounded(key, v, -10, 10);
  } else if (key == "window_hi") {
    window_hi = parse_bounded(key, v, -10, 10);
  } else if (key == "qseries_order") {
    qseries_order = parse_bounded(key, v, 0, 2000);
  } else if (key == "height") {
    height = parse_bounded(key, v, 1, 12);
  } else if (key == "reference") {
    reference = v;
  } else {
    throw ConfigError("unknown config key: " + key);
  }
}

std::map<std::string, std::string> Config::values() const {
  return {{"y_choice", std::to_string(y_choice)},
          {"lattice", lattice},
          {"lattice_basis_file", lattice_basis_file},
          {"cache_dir", cache_dir},
          {"format", format},
          {"seed", std::to_string(seed)},
          {"structure_samples", std::to_string(structure_samples)},
          {"borcherds_samples", std::to_string(borcherds_samples)},
          {"sweep_degree", std::to_string(sweep_degree)},
          {"picture_samples", std::to_string(picture_samples)},
          {"pairing_samples", std::to_string(pairing_samples)},
          {"jacobi_elements", std::to_string(jacobi_elements)},
          {"window_lo", std::to_string(window_lo)},
          {"window_hi", std::to_string(window_hi)},
          {"qseries_order", std::to_string(qseries_order)},
          {"height", std::to_string(height)},
          {"reference", reference}};
}

void Config::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(no) + ": expected key = value");
    try {
      set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(no) + ": " + e.what());
    }
  }
}

void Config::apply_env(const std::function<const char*(const char*)>& getenv_fn) {
  for (const auto& key : keys()) {
    std::string name = "SVOA_" + key;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    if (const char* v = getenv_fn(name.c_str())) set(key, v);
  }
}

Config resolve_config(const std::optional<std::string>& file, const std::map<std::string, std::string>& flags,
                      const std::function<const char*(const char*)>& getenv_fn) {
  Config c;
  c.apply_env(getenv_fn);
  if (file) c.apply_file(*file);
  for (const auto& [k, v] : flags) c.set(k, v);
  if (c.window_lo > c.window_hi) throw ConfigError("window_lo exceeds window_hi");
  return c;
}

}  // namespace svoa

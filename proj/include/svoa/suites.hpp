#pragma once
// Verification suites shared by the command line tool and the acceptance
// binary. Each suite returns a Report of named pass/fail checks with exact
// payloads rendered as strings.

#include <string>
#include <vector>

#include "json.hpp"
#include "svoa/config.hpp"
#include "svoa/gkm.hpp"
#include "svoa/physalg.hpp"

namespace svoa {

struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json payload;
};

class Report {
 public:
  static constexpr const char* kSchema = "svoa-report/1";

  explicit Report(std::string suite) : suite_(std::move(suite)) {}
  const std::string& suite() const { return suite_; }

  Check& add(std::string name, bool pass, nlohmann::json payload = nullptr);
  // Free-form data attached to the report (dims, coefficients, states).
  nlohmann::json& data() { return data_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool pass() const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
  nlohmann::json data_ = nlohmann::json::object();
};

// The algebra stack built from a configuration.
class Context {
 public:
  explicit Context(const Config& cfg);

  const Config& config() const { return cfg_; }
  std::string cache_path() const;  // empty without a cache directory
  std::size_t load_cache();
  void save_cache() const;

 private:
  Config cfg_;

 public:
  VertexAlgebra va;
  FieldRegistry reg;
  SmallSpace small;
  Brst brst;
  PhysAlg phys;
};

SuperLattice make_lattice(const Config& cfg);

// The documented momenta for a norm: 0 -> e1 + e10, -2 -> e1 + e2 + 2 e10, -4 -> 2 e10.
Vec momentum_for_norm(int norm);
// "P<mu>", "Q<a>", "<coords>/even|odd/<index>" or a .json file with alpha, parity, state.
Element parse_element(Context& ctx, const std::string& spec);
nlohmann::json element_json(const Element& e);
std::string scalar_list(const std::vector<Scalar>& v);

Report suite_structure_maps(Context& ctx);
Report suite_structure_maps(const SuperLattice& L, const Config& cfg);
Report suite_borcherds(Context& ctx);
Report suite_ope_table(Context& ctx);
Report suite_central_charges(Context& ctx);
Report suite_brst(Context& ctx, bool sweep);
Report suite_ghost_grading(Context& ctx);
Report suite_picture_changing(Context& ctx);
Report suite_sector(Context& ctx, const SectorSpec& spec, bool with_states);
Report suite_cohomology(Context& ctx, const Vec& alpha, const Rational& picture, int lo, int hi, bool with_reps);
Report suite_massless(Context& ctx);
Report suite_massive(Context& ctx);
Report suite_vanishing(Context& ctx);
Report suite_euler_poincare(Context& ctx, const std::vector<Vec>& momenta);
Report suite_gamma(Context& ctx);
Report suite_susy(Context& ctx);
Report suite_jacobi(Context& ctx);
Report suite_forms(Context& ctx);
Report suite_bracket(Context& ctx, const Element& u, const Element& v);

Report suite_qseries(const std::string& kind, int order);
Report suite_series_values(int order);  // c, a and the trace identity
Report suite_asymptotics();
Report suite_denominator(const Vec& r, int height);
Report suite_cartan(const Vec& r, int height);

}  // namespace svoa

#pragma once
// BRST cohomology of the complexes C(alpha)_{p,*}: exact ranks and
// dimensions, representatives and class coordinates, the Euler-Poincare
// count, Gamma matrices and charge conjugation from spinor products, and
// the massless and picture changing checks.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "svoa/brst.hpp"

namespace svoa {

// One picture of the complex at a fixed momentum and L0 = l0, ghost numbers
// in [lo, hi] (sectors lo - 1 and hi + 1 are built for the boundary maps).
class ComplexSlice {
 public:
  ComplexSlice(Brst& brst, const Vec& alpha, const Rational& picture, int lo, int hi, const Rational& l0 = Rational(0));

  const Vec& alpha() const { return alpha_; }
  const Rational& picture() const { return picture_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  const SectorBasis& sector(int n) const;
  std::size_t dim_c(int n) const { return sector(n).dim(); }
  // Rank of Q: C_n -> C_{n+1}; n in [lo - 1, hi].
  std::size_t rank(int n);
  std::size_t dim_h(int n);
  std::map<int, std::size_t> dims();

  // Matrix of Q: C_n -> C_{n+1} on the sector bases (rows index C_{n+1}).
  // Throws std::logic_error if an image leaves the next sector.
  const Matrix& q_matrix(int n);
  // Q_{n+1} Q_n = 0 as matrices for all n in [lo - 1, hi - 1].
  bool q_squared_zero();

  // Basis of ker Q_n modulo im Q_{n-1}; n in [lo, hi].
  const std::vector<State>& representatives(int n);
  // v in C_n with Q v = 0 is exact.
  bool is_exact(int n, const State& v);
  // Coordinates of the class of v on representatives(n); nullopt if v is not
  // a closed element of C_n.
  std::optional<std::vector<Scalar>> class_coords(int n, const State& v);

 private:
  struct Level {
    SectorBasis basis;
    std::vector<SparseVec> coords;             // basis states in monomial coordinates
    std::optional<std::vector<SparseVec>> images;  // Q of each basis state
    std::optional<std::size_t> rank;
    std::optional<Matrix> matrix;
    std::vector<SparseVec> kernel;  // over basis indices
    bool have_reps = false;
    std::vector<State> reps;
    std::unique_ptr<Echelon> closed;  // image of Q_{n-1}, then reps; tracked
    std::vector<int> role;            // insertion index -> rep index or -1
  };
  Level& level(int n);
  void compute_images(int n);
  void compute_reps(int n);

  Brst* brst_;
  Vec alpha_;
  Rational picture_, l0_;
  int lo_, hi_;
  MonomialIndex index_;
  std::map<int, Level> levels_;
};

struct EulerPoincareReport {
  Vec alpha;
  long alternating = 0;  // -sum (-1)^n dim C(alpha)_{-1,n}
  Rational c_value;      // c(-alpha^2/2)
  std::map<int, std::size_t> dims;
  bool equal = false;
};
EulerPoincareReport euler_poincare_dim(SmallSpace& small, const Vec& alpha);

// Index set: 0..15 conjugate spinors S_dot (dotted), 16..31 spinors S.
// Matrices are M[upper][lower].
struct GammaData {
  std::vector<Matrix> gamma;  // gamma[mu - 1], 32 x 32
  Matrix c;                   // 32 x 32 charge conjugation, both indices upper
  Matrix gamma11;
  std::vector<Vec> dotted_weights, undotted_weights;

  // verdicts
  bool clifford = false;          // {G^mu, G^nu} = 2 g^{mu nu}
  bool gamma11_diagonal = false;  // diagonal +-1, anticommuting with every G^mu
  bool c_antisymmetric = false;
  bool c_invertible = false;
  bool c_conjugation = false;     // C^{-1} G^mu C = -(G^mu)^T
  bool gamma_c_symmetric = false;
  bool susy = false;              // S_dot_0 S_dot = (1/sqrt2)(G_mu C) Ptilde^mu
  bool ok() const {
    return clifford && gamma11_diagonal && c_antisymmetric && c_invertible && c_conjugation && gamma_c_symmetric && susy;
  }
};
// Throws std::logic_error if a product leaves the expected spinor span.
GammaData gamma_matrices(const FieldRegistry& reg);

// alpha_mu G^mu restricted to dotted rows, undotted columns (16 x 16).
Matrix dirac_block(const GammaData& g, const Vec& alpha);
Matrix dirac_block_undotted(const GammaData& g, const Vec& alpha);

struct MasslessReport {
  bool phi_identity = false;           // e^phi_{-5/2} e^{-phi}_{-1/2} S_dot = -S_dot
  std::size_t vector_kernel_dim = 0;   // dim {xi : Q|xi,alpha> = 0}
  bool vector_kernel_is_transverse = false;
  bool longitudinal_exact = false;     // alpha_mu psi^mu e^{-phi} c e^alpha exact
  std::optional<Scalar> exactness_scalar;  // Q(e^{-2phi}_{-1} (D xi)_{-1} c_{-1} e^alpha) = s * longitudinal
  std::size_t dirac_rank = 0;          // rank of alpha_mu G^mu on dotted spinors
  std::size_t dirac_kernel_dim = 0;
  bool dotted_closed_iff_dirac = false;     // u_b S^b_{-1} c_{-1} e^alpha closed iff Dirac
  bool undotted_exact_iff_dirac = false;    // at -3/2: exact iff alpha_mu G^mu u = 0
  bool x_gamma_formula = false;             // X|u,-3/2> = (1/sqrt2) alpha_mu G^mu u . S_dot
  bool ok() const {
    return phi_identity && vector_kernel_dim == 9 && vector_kernel_is_transverse && longitudinal_exact &&
           exactness_scalar.has_value() && dirac_kernel_dim == 8 && dotted_closed_iff_dirac &&
           undotted_exact_iff_dirac && x_gamma_formula;
  }
};
MasslessReport massless_checks(Brst& brst, const GammaData& g, const Vec& alpha);

struct PictureIsoReport {
  Vec alpha;
  Rational picture;
  int ghost = 1;
  std::size_t dim_source = 0, dim_target = 0, rank = 0;
  bool bijective = false;
  bool image_zero = false;
  // Ptilde^mu_0 X_{-1} on H(alpha)_{p,n}: scalar per mu when it acts as one.
  std::vector<std::optional<Scalar>> ptilde_x_scalar;  // index mu - 1
  bool ptilde_x_is_scalar = false;
};
PictureIsoReport picture_iso_check(Brst& brst, const Vec& alpha, const Rational& picture, int ghost = 1,
                                   bool with_ptilde = true);

// The form (u, v)_C between representatives of H(alpha)_{p,n} and H(-alpha)_{p',n'}.
Matrix induced_form(SmallSpace& small, const std::vector<State>& left, const std::vector<State>& right);

}  // namespace svoa

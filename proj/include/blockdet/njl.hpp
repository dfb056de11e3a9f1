#pragma once

#include <array>
#include <string>
#include <vector>

#include "blockdet/block_det.hpp"
#include "blockdet/block_matrix.hpp"
#include "blockdet/dense_matrix.hpp"
#include "blockdet/scaled_det.hpp"

namespace blockdet::njl {

/// Two-flavor NJL inverse propagator parameters, natural units.
struct NjlParams {
  double mass = 0.35;               // M
  double chemical_potential = 0.4;  // mu
  cplx gap{0.1, 0.0};               // Delta
  std::array<double, 3> momentum{0.1, 0.2, 0.3};
  cplx energy{0.77, 0.13};          // probe energy E

  /// E_k = sqrt(k.k + M^2)
  double quasi_energy() const;
};

/// Dirac representation, Pauli matrices, and the color/flavor generators used
/// by the propagator.
struct GammaBasis {
  std::array<DenseMatrix, 4> gamma;  // gamma^0 .. gamma^3
  DenseMatrix gamma5;                // i gamma^0 gamma^1 gamma^2 gamma^3
  std::array<DenseMatrix, 3> sigma;  // sigma_x, sigma_y, sigma_z
  DenseMatrix lambda2;               // second Gell-Mann matrix (color)
  DenseMatrix tau2;                  // second Pauli matrix (flavor)
};

GammaBasis build_gamma_basis();

/// k-slash = E gamma^0 - gamma . k (4x4 Dirac).
DenseMatrix k_slash(const GammaBasis& g, const NjlParams& p);
/// k-slash + sign * mu gamma^0 - M, Dirac only (4x4).
DenseMatrix dirac_diagonal(const GammaBasis& g, const NjlParams& p, int sign);

/// The 48x48 propagator as a 6x6 grid of 8x8 (Dirac x flavor) blocks. Block
/// rows 1-3 carry the three colors of the particle sector, 4-6 the charge
/// conjugate sector. Nonzero blocks:
///
///   S11 = S22 = S33 = kslash + mu g0 - M,  S44 = S55 = S66 = kslash - mu g0 - M,
///   S24 = -S15 = i Delta g5 tau2,          S42 = -S51 = i Delta* g5 tau2.
BlockMatrix build_njl_matrix(const NjlParams& p);
BlockMatrix build_njl_matrix(const GammaBasis& g, const NjlParams& p);

/// The same operator assembled directly in Nambu x color x Dirac x flavor
/// product form (2x2 Nambu blocks with Delta g5 tau2 lambda2 pairing).
DenseMatrix build_njl_nambu_form(const GammaBasis& g, const NjlParams& p);

/// Closed-form det(S): the product of the four gapped factors
/// [E +- sqrt((E_k +- mu)^2 + |Delta|^2)]^8 and the four ungapped factors
/// (E +- E_k +- mu)^4.
ScaledDet closed_form_det(const NjlParams& p);

struct EigenEnergy {
  double value;
  int multiplicity;
};

/// {|E_k + mu| x8, |E_k - mu| x8, sqrt((E_k+mu)^2+|D|^2) x16,
///  sqrt((E_k-mu)^2+|D|^2) x16}. The probe energy is ignored.
std::array<EigenEnergy, 4> eigen_energies(const NjlParams& p);

/// S55^-1 in closed form: (kslash - mu g0 + M) / ((E - mu)^2 - E_k^2), 8x8.
DenseMatrix s55_inverse_closed(const GammaBasis& g, const NjlParams& p);

/// kslash + mu g0 - M - |D|^2 (kslash - mu g0 - M) / ((E - mu)^2 - E_k^2), 8x8.
DenseMatrix alpha_gapped_closed(const GammaBasis& g, const NjlParams& p);

/// det over Dirac indices of kslash +- mu g0 - M: [(E +- mu)^2 - E_k^2]^2.
cplx dirac_det_closed(const NjlParams& p, int sign);

/// Dirac determinant of the gapped block:
/// [E^2-(E_k+mu)^2-|D|^2]^2 [E^2-(E_k-mu)^2-|D|^2]^2 / ((E-E_k-mu)^2 (E+E_k-mu)^2).
cplx gapped_dirac_det_closed(const NjlParams& p);

struct Check {
  std::string name;
  double measured;
  double threshold;
  bool passed;
};

struct RootResidual {
  EigenEnergy energy;
  ScaledDet det_at_root;
  ScaledDet det_at_offset;
  double ratio;
  // "block" or "dense": the dense path is taken when a pivot block is
  // singular exactly at the root.
  std::string method;
  bool passed;
};

struct NjlReport {
  NjlParams params;
  std::array<EigenEnergy, 4> spectrum;
  ScaledDet block_value;
  ScaledDet closed_value;
  std::vector<RootResidual> roots;
  std::vector<Check> checks;

  bool all_passed() const;
};

struct VerifyThresholds {
  double det_rel = 1e-7;
  double root_ratio = 1e-6;
  double root_offset = 1e-2;
  double alpha_rel = 1e-9;
  double s55_inverse = 1e-10;
};

/// Determinant of the propagator at probe energy `e` (other params from p),
/// through the block engine. When a pivot block is singular (as it is at the
/// roots) the dense LU product is returned instead, with only exactly zero
/// pivots treated as singular. `method` receives "block" or "dense".
ScaledDet det_at_energy(const NjlParams& p, cplx e, std::string* method = nullptr);

NjlReport verify_njl(const NjlParams& p, const VerifyThresholds& thresholds = {});

}  // namespace blockdet::njl

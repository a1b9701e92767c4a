#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilhodge/hermform.hpp"
#include "weilhodge/qfield.hpp"
#include "weilhodge/rootweights.hpp"
#include "weilhodge/starform.hpp"
#include "weilhodge/wedge.hpp"

namespace weilhodge {

struct ConstructionParams {
  int n = 1;
  CMField tower;
  /// (p_i, q_i) in input order.
  std::vector<SignaturePair> pairs;
  std::uint64_t seed = 1;
  bool override_weil = false;
  /// Lie-algebra samples per equivariance check; 0 picks 100 for n <= 2 and 25 otherwise.
  int lie_samples = 0;

  int effective_lie_samples() const;
};

/// Generalized-Weil violations plus a degree mismatch between the pair list
/// and [E0:Q]. Empty iff the input is valid.
std::vector<std::string> validate_weil(const ConstructionParams& params);

struct Summand {
  int embedding = 1;
  /// 1 for varpi_1 (U_{i,+}), 2n - 1 for varpi_{2n-1} (U_{i,-}).
  int highest_weight = 1;
  int dimension = 0;
};

struct AbelianLayer {
  int dim_q = 0;
  int h10 = 0;
  int h01 = 0;
  std::vector<Summand> summands;
  /// Dimensions over E0 of the eigenspaces of the E0-action on U' (each 4n).
  std::vector<std::size_t> eigenspace_dims;
  bool condition_one_factor = false;
  bool condition_highest_weight = false;
};

AbelianLayer abelian_layer_report(const ConstructionParams& params);

struct CyHodge {
  /// One weight-n vector per embedding, in the module's p-descending order.
  std::vector<HodgeVector> pieces;
  std::vector<int> levels;
  HodgeVector combined;
};

/// Throws ParityError when some n - p_i is odd.
CyHodge cy_hodge_numbers(const ConstructionParams& params);

/// Shifts a weight-p, level-p vector into weight n symmetrically about n/2.
HodgeVector recenter(const HodgeVector& piece, int n);

struct VerificationFlag {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PipelineReport {
  int n = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  int lie_samples = 0;
  std::vector<std::string> violations;

  std::vector<SignaturePair> ordered_pairs;
  std::vector<std::size_t> permutation;
  std::optional<DiagonalHermitianForm> form;
  std::vector<SignaturePair> signatures;
  std::optional<E0Element> discriminant;
  std::optional<RationalityVerdict> rationality;
  std::optional<StarSquareCheck> star_square;
  std::optional<QuaternionReport> quaternion;
  std::size_t real_form_dimension = 0;
  std::optional<KernelCheck> kernel;
  std::optional<ChainCheck> chain;
  std::optional<LieCheck> lie;
  std::optional<StarEquivarianceCheck> star_equivariance;
  std::optional<AbelianLayer> abelian;
  std::optional<CyHodge> hodge;
  /// Indices (1-based, p-descending order) of pieces with n odd and p_i = 1.
  std::vector<int> abelian_type_pieces;

  std::vector<VerificationFlag> flags;
  std::vector<std::string> errors;

  bool passed() const;
  const VerificationFlag* flag(const std::string& name) const;
};

/// Runs every construction and verification; a failing stage marks its flags
/// false and the remaining stages still run.
PipelineReport run_pipeline(const ConstructionParams& params);

}  // namespace weilhodge

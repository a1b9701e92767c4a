#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weilhodge/matrix.hpp"
#include "weilhodge/qfield.hpp"

namespace weilhodge {

using SignaturePair = std::pair<int, int>;

/// Violations of the generalized Weil conditions for the pairs as given:
/// p_1 = q_1 = n, and for i >= 2: 0 < p_i < q_i, p_i + q_i = 2n, p_i = n mod 2.
std::vector<std::string> weil_violations(int n, const std::vector<SignaturePair>& pairs);

/// Signatures (p_i, q_i) at the d real embeddings, one pair per embedding.
/// Stored reordered so that p_i >= p_{i+1}; `permutation()[k]` is the input
/// position of the k-th stored pair.
class SignatureSpec {
 public:
  /// Throws InvalidSignature on p_i + q_i != 2n, negative entries, an empty
  /// list, or (when enforce_weil) any generalized-Weil violation.
  SignatureSpec(int n, std::vector<SignaturePair> pairs, bool enforce_weil = true);

  int n() const { return n_; }
  int degree() const { return static_cast<int>(pairs_.size()); }
  const std::vector<SignaturePair>& pairs() const { return pairs_; }
  const std::vector<SignaturePair>& input_pairs() const { return input_pairs_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  bool weil() const { return violations_.empty(); }
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  int n_;
  std::vector<SignaturePair> input_pairs_;
  std::vector<SignaturePair> pairs_;
  std::vector<std::size_t> permutation_;
  std::vector<std::string> violations_;
};

/// h = diag(entries) on U = E^{2n}, entries in E0.
struct DiagonalHermitianForm {
  std::vector<E0Element> entries;
  CMField tower;

  std::size_t dimension() const { return entries.size(); }
};

/// delta_i positive at sigma_i and negative at every other embedding.
std::vector<E0Element> choose_deltas(const CMField& tower);

/// Throws InvalidSignature if the degrees disagree, SignatureUnrealizable if
/// the built form fails its own signature check.
DiagonalHermitianForm build_form(const SignatureSpec& spec, const CMField& tower);

/// Throws ZeroDiagonalEntry on a vanishing entry.
SignaturePair signature_at(const DiagonalHermitianForm& form, const Embedding& emb);

/// Product of the diagonal entries: a representative of disc(h).
E0Element discriminant(const DiagonalHermitianForm& form);

struct RationalityVerdict {
  bool holds = false;
  /// (-1)^n disc(h).
  E0Element value;
  std::optional<E0Element> witness;
};

RationalityVerdict rationality_criterion(const DiagonalHermitianForm& form, int n);

/// Copy of the form with entry `index` multiplied by Nm_{E/E0}(z).
DiagonalHermitianForm rescale_entry_by_norm(const DiagonalHermitianForm& form, std::size_t index,
                                            const CMElement& z);

/// Checks xbar^T H + H x = 0 and tr x = 0 for a matrix over E.
bool in_special_unitary_algebra(const Matrix<CMElement>& x, const DiagonalHermitianForm& form);

/// Deterministic bounded-height sampler of su(U, h): free entries are
/// a + b sqrt(m) (+ imaginary parts) with integer coordinates in [-height, height].
class SuSampler {
 public:
  SuSampler(const DiagonalHermitianForm& form, std::uint64_t seed, int height = 10);

  /// Never returns the zero matrix; zero draws are redrawn, and
  /// DegenerateSample is thrown after 64 consecutive zero draws.
  Matrix<CMElement> next();
  std::uint64_t seed() const { return seed_; }
  int redraws() const { return redraws_; }

 private:
  E0Element draw_e0();
  Matrix<CMElement> draw();

  DiagonalHermitianForm form_;
  std::uint64_t seed_;
  int height_;
  std::mt19937_64 engine_;
  int redraws_ = 0;
};

}  // namespace weilhodge

#include "weilhodge/hermform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "weilhodge/errors.hpp"

namespace weilhodge {

std::vector<std::string> weil_violations(int n, const std::vector<SignaturePair>& pairs) {
  std::vector<std::string> out;
  if (pairs.empty()) {
    out.emplace_back("no signature pairs given");
    return out;
  }
  auto describe = [](std::size_t i, const SignaturePair& pq) {
    std::ostringstream os;
    os << "(p_" << i + 1 << ", q_" << i + 1 << ") = (" << pq.first << ", " << pq.second << ")";
    return os.str();
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    if (p + q != 2 * n) out.push_back(describe(i, pairs[i]) + ": p + q != 2n = " + std::to_string(2 * n));
    if (i == 0) {
      if (p != n || q != n) out.push_back(describe(i, pairs[i]) + ": first pair must be (n, n)");
    } else if (!(0 < p && p < q)) {
      out.push_back(describe(i, pairs[i]) + ": need 0 < p < q");
    }
    if (((p - n) % 2 + 2) % 2 != 0) {
      out.push_back(describe(i, pairs[i]) + ": parity " + std::to_string(p) + " != " + std::to_string(n) +
                    " (mod 2)");
    }
  }
  return out;
}

SignatureSpec::SignatureSpec(int n, std::vector<SignaturePair> pairs, bool enforce_weil)
    : n_(n), input_pairs_(std::move(pairs)) {
  if (n < 1) throw InvalidSignature("n must be positive");
  if (input_pairs_.empty()) throw InvalidSignature("no signature pairs given");
  for (const auto& [p, q] : input_pairs_) {
    if (p < 0 || q < 0 || p + q != 2 * n) {
      throw InvalidSignature("signature (" + std::to_string(p) + ", " + std::to_string(q) +
                             ") does not satisfy p, q >= 0 and p + q = 2n = " + std::to_string(2 * n));
    }
  }
  violations_ = weil_violations(n, input_pairs_);
  if (enforce_weil && !violations_.empty()) {
    std::string message = violations_.front();
    for (std::size_t k = 1; k < violations_.size(); ++k) message += "; " + violations_[k];
    throw InvalidSignature(message);
  }

  permutation_.resize(input_pairs_.size());
  std::iota(permutation_.begin(), permutation_.end(), std::size_t{0});
  std::stable_sort(permutation_.begin(), permutation_.end(), [&](std::size_t a, std::size_t b) {
    return input_pairs_[a].first > input_pairs_[b].first;
  });
  for (std::size_t k : permutation_) pairs_.push_back(input_pairs_[k]);
}

std::vector<E0Element> choose_deltas(const CMField& tower) {
  if (tower.degree() == 1) return {E0Element(1)};
  const long m = tower.base().m();
  return {E0Element::sqrt_m(m), -E0Element::sqrt_m(m)};
}

DiagonalHermitianForm build_form(const SignatureSpec& spec, const CMField& tower) {
  if (spec.degree() != tower.degree()) {
    throw InvalidSignature(std::to_string(spec.degree()) + " signature pairs given but [E0:Q] = " +
                           std::to_string(tower.degree()));
  }
  const auto& pairs = spec.pairs();
  const std::vector<E0Element> deltas = choose_deltas(tower);
  const int d = spec.degree();

  DiagonalHermitianForm form{{}, tower};
  form.entries.insert(form.entries.end(), static_cast<std::size_t>(pairs[0].second), E0Element(-1));
  E0Element running(1);
  for (int i = 1; i < d; ++i) {
    // (-1)^{i-1} delta_1 ... delta_i, repeated q_{i+1} - q_i times.
    running *= deltas[static_cast<std::size_t>(i - 1)];
    const E0Element entry = (i - 1) % 2 == 0 ? running : -running;
    const int copies = pairs[static_cast<std::size_t>(i)].second - pairs[static_cast<std::size_t>(i - 1)].second;
    form.entries.insert(form.entries.end(), static_cast<std::size_t>(copies), entry);
  }
  form.entries.insert(form.entries.end(), static_cast<std::size_t>(pairs.back().first), E0Element(1));

  const auto embeddings = tower.base().embeddings();
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    if (signature_at(form, embeddings[i]) != pairs[i]) {
      throw SignatureUnrealizable("built form misses the signature at embedding " + std::to_string(i + 1));
    }
  }
  return form;
}

SignaturePair signature_at(const DiagonalHermitianForm& form, const Embedding& emb) {
  SignaturePair out{0, 0};
  for (const E0Element& x : form.entries) {
    const int s = sign_at_embedding(x, emb);
    if (s == 0) throw ZeroDiagonalEntry("Hermitian form has a zero diagonal entry");
    (s > 0 ? out.first : out.second) += 1;
  }
  return out;
}

E0Element discriminant(const DiagonalHermitianForm& form) {
  E0Element out(1);
  for (const E0Element& x : form.entries) out *= x;
  return out;
}

RationalityVerdict rationality_criterion(const DiagonalHermitianForm& form, int n) {
  RationalityVerdict out;
  out.value = discriminant(form);
  if (n % 2 != 0) out.value = -out.value;
  out.witness = is_square_in_E0(out.value, form.tower.base());
  out.holds = out.witness.has_value();
  return out;
}

DiagonalHermitianForm rescale_entry_by_norm(const DiagonalHermitianForm& form, std::size_t index,
                                            const CMElement& z) {
  DiagonalHermitianForm out = form;
  out.entries.at(index) *= norm_E_over_E0(z);
  return out;
}

bool in_special_unitary_algebra(const Matrix<CMElement>& x, const DiagonalHermitianForm& form) {
  const std::size_t n = form.dimension();
  if (x.rows() != n || x.cols() != n) return false;
  CMElement trace(0);
  for (std::size_t i = 0; i < n; ++i) {
    trace += x(i, i);
    for (std::size_t j = 0; j < n; ++j) {
      // (xbar^T H + H x)_{ij} = conj(x_ji) h_j + h_i x_ij
      if (!(x(j, i).conjugate() * CMElement(form.entries[j]) + CMElement(form.entries[i]) * x(i, j)).is_zero()) {
        return false;
      }
    }
  }
  return trace.is_zero();
}

SuSampler::SuSampler(const DiagonalHermitianForm& form, std::uint64_t seed, int height)
    : form_(form), seed_(seed), height_(height), engine_(seed) {}

E0Element SuSampler::draw_e0() {
  // Modular reduction keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(2 * height_ + 1);
  const auto coord = [&] { return static_cast<long>(engine_() % span) - height_; };
  const long a = coord();
  const long m = form_.tower.base().m();
  if (m == 0) return E0Element(a);
  return E0Element(a, coord(), m);
}

Matrix<CMElement> SuSampler::draw() {
  const std::size_t n = form_.dimension();
  const E0Element& e = form_.tower.e();
  Matrix<CMElement> x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const E0Element re = draw_e0();
      const E0Element im = draw_e0();
      x(i, j) = CMElement(re, im, e);
      // x_ji = -conj(x_ij) h_i / h_j
      x(j, i) = -x(i, j).conjugate() * CMElement(form_.entries[i] / form_.entries[j]);
    }
  }
  // Purely imaginary diagonal with zero trace.
  E0Element sum(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const E0Element im = draw_e0();
    sum += im;
    x(i, i) = CMElement(0, im, e);
  }
  if (n > 0) x(n - 1, n - 1) = CMElement(0, -sum, e);
  return x;
}

Matrix<CMElement> SuSampler::next() {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix<CMElement> x = draw();
    if (!x.is_zero()) return x;
    ++redraws_;
  }
  throw DegenerateSample("su(U, h) sampler produced only zero matrices");
}

}  // namespace weilhodge

#include "weilhodge/vhs.hpp"

#include <sstream>

#include "weilhodge/eigenspace.hpp"
#include "weilhodge/errors.hpp"

namespace weilhodge {

int ConstructionParams::effective_lie_samples() const {
  if (lie_samples > 0) return lie_samples;
  return n <= 2 ? 100 : 25;
}

std::vector<std::string> validate_weil(const ConstructionParams& params) {
  std::vector<std::string> out = weil_violations(params.n, params.pairs);
  if (static_cast<int>(params.pairs.size()) != params.tower.degree()) {
    out.push_back(std::to_string(params.pairs.size()) + " signature pairs for [E0:Q] = " +
                  std::to_string(params.tower.degree()));
  }
  return out;
}

AbelianLayer abelian_layer_report(const ConstructionParams& params) {
  const int n = params.n;
  const int d = params.tower.degree();
  AbelianLayer out;
  out.dim_q = 4 * n * d;
  out.h10 = 2 * n * d;
  out.h01 = 2 * n * d;
  for (int i = 1; i <= d; ++i) {
    out.summands.push_back({i, 1, 2 * n});
    out.summands.push_back({i, 2 * n - 1, 2 * n});
  }

  // U' = Res_{E0/Q} Res_{E/E0} U; E0 acts through its generator.
  const auto e0_dim = static_cast<std::size_t>(4 * n);
  const TotallyRealField& base = params.tower.base();
  const Matrix<Rational> action = d == 1 ? Matrix<Rational>::identity(e0_dim) : sqrt_m_action(e0_dim, base.m());
  for (const Eigenspace& piece : eigenspace_decompose(static_cast<std::size_t>(out.dim_q), action, base)) {
    out.eigenspace_dims.push_back(piece.basis.cols());
  }

  int summand_total = 0;
  for (const Summand& s : out.summands) summand_total += s.dimension;
  bool split_ok = out.eigenspace_dims.size() == static_cast<std::size_t>(d);
  for (std::size_t dim : out.eigenspace_dims) split_ok = split_ok && dim == e0_dim;
  out.condition_one_factor = split_ok && summand_total == out.dim_q;

  // Weight varpi_1 or varpi_{2n-1} is required only for 2 <= p_i <= 2n - 2.
  out.condition_highest_weight = true;
  for (const Summand& s : out.summands) {
    out.condition_highest_weight =
        out.condition_highest_weight && (s.highest_weight == 1 || s.highest_weight == 2 * n - 1);
  }
  return out;
}

HodgeVector recenter(const HodgeVector& piece, int n) {
  const int diff = n - piece.weight;
  if (diff % 2 != 0) {
    throw ParityError("cannot recenter weight " + std::to_string(piece.weight) + " into weight " +
                      std::to_string(n) + ": n - p is odd");
  }
  const int shift = diff / 2;
  HodgeVector out;
  out.weight = n;
  out.level = piece.level;
  for (int a = n; a >= 0; --a) out.numbers.push_back(piece.at(a - shift));
  if (out.total() != piece.total()) throw std::logic_error("recentering dropped nonzero Hodge numbers");
  return out;
}

CyHodge cy_hodge_numbers(const ConstructionParams& params) {
  const SignatureSpec spec(params.n, params.pairs, !params.override_weil);
  CyHodge out;
  out.combined.weight = params.n;
  out.combined.numbers.assign(static_cast<std::size_t>(params.n + 1), 0);
  for (const auto& [p, q] : spec.pairs()) {
    const DomainLabel label{params.n, p};
    label.validate();
    const HodgeVector piece = recenter(hodge_numbers(label), params.n);
    out.levels.push_back(piece.level);
    out.combined.level = std::max(out.combined.level, piece.level);
    for (std::size_t k = 0; k < piece.numbers.size(); ++k) out.combined.numbers[k] += piece.numbers[k];
    out.pieces.push_back(piece);
  }
  return out;
}

bool PipelineReport::passed() const {
  if (!errors.empty()) return false;
  for (const VerificationFlag& f : flags)
    if (!f.passed) return false;
  return !flags.empty();
}

const VerificationFlag* PipelineReport::flag(const std::string& name) const {
  for (const VerificationFlag& f : flags)
    if (f.name == name) return &f;
  return nullptr;
}

namespace {

template <typename F>
void run_stage(PipelineReport& report, const std::string& stage, F&& body) {
  try {
    body();
  } catch (const std::exception& ex) {
    report.errors.push_back(stage + ": " + ex.what());
  }
}

std::string str(const E0Element& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

PipelineReport run_pipeline(const ConstructionParams& params) {
  PipelineReport report;
  const int n = params.n;
  const int d = params.tower.degree();
  const auto D = static_cast<std::size_t>(2 * n);
  const auto N = binomial(2 * n, n);
  const E0Element& e = params.tower.e();
  report.n = n;
  report.degree = d;
  report.seed = params.seed;
  report.lie_samples = params.effective_lie_samples();
  report.violations = validate_weil(params);

  auto add = [&report](std::string name, bool passed, std::string detail = {}) {
    report.flags.push_back({std::move(name), passed, std::move(detail)});
  };

  add("weil_conditions", report.violations.empty(),
      report.violations.empty() ? "generalized Weil type" : report.violations.front());

  run_stage(report, "form", [&] {
    const SignatureSpec spec(n, params.pairs, false);
    report.ordered_pairs = spec.pairs();
    report.permutation = spec.permutation();
    report.form = build_form(spec, params.tower);
    bool ok = true;
    const auto embeddings = params.tower.base().embeddings();
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
      report.signatures.push_back(signature_at(*report.form, embeddings[i]));
      ok = ok && report.signatures.back() == spec.pairs()[i];
    }
    add("signatures", ok);
  });

  std::optional<StarOperator> star;
  std::optional<RealForm> real_form;
  if (report.form) {
    const DiagonalHermitianForm& form = *report.form;
    run_stage(report, "rationality", [&] {
      report.discriminant = discriminant(form);
      report.rationality = rationality_criterion(form, n);
      add("rationality_criterion", report.rationality->holds, "(-1)^n disc(h) = " + str(report.rationality->value));
    });
    run_stage(report, "star", [&] {
      star = build_star(n, form);
      report.star_square = verify_star_square(*star, n, form);
      add("star_square", report.star_square->holds, "star o star = " + str(report.star_square->expected));
      add("star_conjugate_linear", star_is_conjugate_linear(*star, e));
    });
    run_stage(report, "quaternion", [&] {
      report.quaternion = quaternion_split_report(n, form);
      const QuaternionReport& q = *report.quaternion;
      add("quaternion_relations", q.j_square_is_scalar && q.anticommute && q.k_square_ok);
      add("quaternion_split", q.split);
    });
    run_stage(report, "real_form", [&] {
      if (!star || !report.rationality || !report.rationality->holds) {
        add("real_form_dimension", false, "rationality criterion failed; no real form");
        add("real_form_spans", false, "rationality criterion failed; no real form");
        return;
      }
      real_form = construct_real_form(*star, n, form);
      report.real_form_dimension = real_form->dimension;
      add("real_form_dimension", real_form->dimension == N,
          "dim W_0 = " + std::to_string(real_form->dimension));
      add("real_form_spans", real_form->spans);
    });
    run_stage(report, "kernel", [&] {
      if (d == 1 && e.is_rational()) {
        report.kernel = kernel_characterization_check(D, D / 2, ScalarAction<Rational>(D, -e.a()));
      } else {
        report.kernel = kernel_characterization_check(D, D / 2, ScalarAction<E0Element>(D, -e));
      }
      const KernelCheck& k = *report.kernel;
      add("kernel_characterization", k.kernel_dim == k.expected_dim && k.image_equals_kernel,
          "kernel dim " + std::to_string(k.kernel_dim));
    });
    run_stage(report, "chain", [&] {
      report.chain = subrepresentation_chain_check(n, params.tower);
      add("subrepresentation_chain", report.chain->injective);
      add("double_restriction_identity", double_restriction_is_identity(params.tower));
    });
    run_stage(report, "lie", [&] {
      report.lie = lie_equivariance_check(D, D / 2, form, report.lie_samples, params.seed);
      add("lie_equivariance", report.lie->passed,
          std::to_string(report.lie->samples) + " samples, seed " + std::to_string(params.seed));
    });
    run_stage(report, "star_equivariance", [&] {
      if (!star) return;
      report.star_equivariance = star_equivariance_check(*star, form, real_form, report.lie_samples, params.seed);
      add("star_equivariance", report.star_equivariance->star_commutes);
      add("real_form_invariance", real_form.has_value() && report.star_equivariance->real_form_invariant);
    });
  }

  run_stage(report, "abelian", [&] {
    report.abelian = abelian_layer_report(params);
    add("abelian_conditions", report.abelian->condition_one_factor && report.abelian->condition_highest_weight);
  });

  run_stage(report, "hodge", [&] {
    ConstructionParams relaxed = params;
    relaxed.override_weil = true;
    report.hodge = cy_hodge_numbers(relaxed);
    const CyHodge& h = *report.hodge;
    add("cy_condition", h.combined.at(n) == 1, "h^{n,0} = " + std::to_string(h.combined.at(n)));
    bool total_ok = h.combined.total() == static_cast<std::uint64_t>(d) * N;
    if (real_form) total_ok = total_ok && h.combined.total() == static_cast<std::uint64_t>(d) * real_form->dimension;
    add("total_dimension", total_ok, "sum = " + std::to_string(h.combined.total()));
    add("piece_count", h.pieces.size() == static_cast<std::size_t>(d));
    bool canonical = !h.pieces.empty() && h.pieces.front() == hodge_numbers(DomainLabel{n, n});
    bool lower = true;
    for (std::size_t i = 1; i < h.pieces.size(); ++i) lower = lower && h.pieces[i].at(n) == 0;
    add("canonical_piece", canonical);
    add("lower_pieces_vanish", lower);
    if (n % 2 == 1) {
      for (std::size_t i = 1; i < report.ordered_pairs.size(); ++i) {
        if (report.ordered_pairs[i].first == 1) report.abelian_type_pieces.push_back(static_cast<int>(i + 1));
      }
    }
  });

  return report;
}

}  // namespace weilhodge

#include "cli/cli.hpp"

#ifndef WEILHODGE_VERSION
#define WEILHODGE_VERSION "0.0.0"
#endif

namespace weilhodge::cli {

namespace {

constexpr const char* kFormatTag = "weilhodge.report";

ordered_json pair_json(const SignaturePair& pq) { return ordered_json::array({pq.first, pq.second}); }

ordered_json pairs_json(const std::vector<SignaturePair>& pairs) {
  ordered_json out = ordered_json::array();
  for (const auto& pq : pairs) out.push_back(pair_json(pq));
  return out;
}

ordered_json optional_e0(const std::optional<E0Element>& x) { return x ? e0_json(*x) : ordered_json(nullptr); }

ordered_json field_json(const RunConfig& config) {
  const CMField tower = config.tower();
  ordered_json out;
  out["E0"] = tower.base().name();
  out["m"] = config.m ? ordered_json(*config.m) : ordered_json(nullptr);
  out["degree"] = tower.degree();
  out["e"] = e0_json(tower.e());
  out["E"] = tower.name();
  return out;
}

ordered_json hodge_vector_json(const HodgeVector& h) {
  ordered_json out;
  out["weight"] = h.weight;
  out["level"] = h.level;
  out["numbers"] = h.numbers;
  out["total"] = h.total();
  return out;
}

ordered_json form_json(const DiagonalHermitianForm& form, const std::vector<SignaturePair>& signatures) {
  ordered_json out;
  ordered_json entries = ordered_json::array();
  for (const auto& h : form.entries) entries.push_back(e0_json(h));
  out["entries"] = std::move(entries);
  out["signatures"] = pairs_json(signatures);
  out["discriminant"] = e0_json(discriminant(form));
  return out;
}

ordered_json rationality_json(const RationalityVerdict& v) {
  ordered_json out;
  out["holds"] = v.holds;
  out["value"] = e0_json(v.value);
  out["witness"] = optional_e0(v.witness);
  return out;
}

ordered_json signature_spec_json(const std::vector<SignaturePair>& ordered_pairs,
                                 const std::vector<std::size_t>& permutation) {
  ordered_json out;
  out["ordered_pairs"] = pairs_json(ordered_pairs);
  ordered_json perm = ordered_json::array();
  for (std::size_t k : permutation) perm.push_back(k + 1);
  out["permutation"] = std::move(perm);
  return out;
}

ordered_json header(const std::string& command, const RunConfig& config) {
  ordered_json doc;
  doc["format"] = kFormatTag;
  doc["version"] = WEILHODGE_VERSION;
  doc["command"] = command;
  doc["input"] = input_echo(config);
  doc["field"] = field_json(config);
  return doc;
}

}  // namespace

ordered_json e0_json(const E0Element& x) {
  ordered_json out;
  out["a"] = x.a().str();
  out["b"] = x.b().str();
  return out;
}

ordered_json input_echo(const RunConfig& config) {
  ordered_json out;
  out["n"] = config.n ? ordered_json(*config.n) : ordered_json(nullptr);
  out["m"] = config.m ? ordered_json(*config.m) : ordered_json(nullptr);
  out["e"] = config.e.str();
  out["p"] = config.p_list;
  out["seed"] = config.seed;
  out["override_weil"] = config.override_weil;
  return out;
}

ordered_json construct_json(const RunConfig& config, const DiagonalHermitianForm& form,
                            const std::vector<SignaturePair>& ordered_pairs,
                            const std::vector<std::size_t>& permutation) {
  ordered_json doc = header("construct", config);
  const auto violations = weil_violations(*config.n, config.pairs());
  doc["weil"] = {{"valid", violations.empty()}, {"violations", violations}};
  doc["signature_spec"] = signature_spec_json(ordered_pairs, permutation);
  std::vector<SignaturePair> signatures;
  bool ok = true;
  const auto embeddings = form.tower.base().embeddings();
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    signatures.push_back(signature_at(form, embeddings[i]));
    ok = ok && signatures.back() == ordered_pairs[i];
  }
  doc["form"] = form_json(form, signatures);
  const RationalityVerdict verdict = rationality_criterion(form, *config.n);
  doc["rationality"] = rationality_json(verdict);
  doc["passed"] = ok && verdict.holds;
  return doc;
}

ordered_json hodge_json(const RunConfig& config, const CyHodge& hodge) {
  ordered_json doc;
  doc["format"] = kFormatTag;
  doc["version"] = WEILHODGE_VERSION;
  doc["command"] = "hodge";
  doc["input"] = input_echo(config);
  ordered_json pieces = ordered_json::array();
  const SignatureSpec spec(*config.n, config.pairs(), false);
  for (std::size_t i = 0; i < hodge.pieces.size(); ++i) {
    ordered_json piece = hodge_vector_json(hodge.pieces[i]);
    piece["p"] = spec.pairs()[i].first;
    pieces.push_back(std::move(piece));
  }
  doc["pieces"] = std::move(pieces);
  doc["combined"] = hodge_vector_json(hodge.combined);
  doc["calabi_yau"] = hodge.combined.at(*config.n) == 1;
  return doc;
}

ordered_json report_json(const std::string& command, const RunConfig& config, const PipelineReport& r) {
  ordered_json doc = header(command, config);
  doc["weil"] = {{"valid", r.violations.empty()}, {"violations", r.violations}};
  doc["signature_spec"] = signature_spec_json(r.ordered_pairs, r.permutation);
  doc["form"] = r.form ? form_json(*r.form, r.signatures) : ordered_json(nullptr);
  doc["rationality"] = r.rationality ? rationality_json(*r.rationality) : ordered_json(nullptr);

  if (r.star_square) {
    const VerificationFlag* lin = r.flag("star_conjugate_linear");
    doc["star"] = {{"square", e0_json(r.star_square->expected)},
                   {"identity_holds", r.star_square->holds},
                   {"conjugate_linear", lin != nullptr && lin->passed}};
  } else {
    doc["star"] = nullptr;
  }

  if (r.quaternion) {
    const QuaternionReport& q = *r.quaternion;
    doc["quaternion"] = {{"i_square", e0_json(q.i_square)},
                         {"j_square", e0_json(q.j_square)},
                         {"j_square_is_scalar", q.j_square_is_scalar},
                         {"anticommute", q.anticommute},
                         {"k_square_ok", q.k_square_ok},
                         {"split", q.split},
                         {"witness", optional_e0(q.witness)}};
  } else {
    doc["quaternion"] = nullptr;
  }

  const VerificationFlag* rf = r.flag("real_form_spans");
  doc["real_form"] = {{"dimension", r.real_form_dimension},
                      {"expected_dimension", binomial(2 * r.n, r.n)},
                      {"spans", rf != nullptr && rf->passed}};

  if (r.kernel) {
    const KernelCheck& k = *r.kernel;
    doc["kernel"] = {{"ambient_dimension", k.ambient_dim},
                     {"kernel_dimension", k.kernel_dim},
                     {"expected_dimension", k.expected_dim},
                     {"injection_rank", k.injection_rank},
                     {"image_in_kernel", k.image_in_kernel},
                     {"image_equals_kernel", k.image_equals_kernel}};
  } else {
    doc["kernel"] = nullptr;
  }

  if (r.chain) {
    doc["chain"] = {{"rows", r.chain->rows},
                    {"cols", r.chain->cols},
                    {"rank", r.chain->rank},
                    {"injective", r.chain->injective}};
  } else {
    doc["chain"] = nullptr;
  }

  if (r.lie) {
    doc["lie_equivariance"] = {{"samples", r.lie->samples},
                               {"seed", r.lie->seed},
                               {"failures", r.lie->failures},
                               {"commutes_with_phi", r.lie->commutes_with_phi},
                               {"preserves_kernel", r.lie->preserves_kernel}};
  } else {
    doc["lie_equivariance"] = nullptr;
  }

  if (r.star_equivariance) {
    const StarEquivarianceCheck& s = *r.star_equivariance;
    doc["star_equivariance"] = {{"samples", s.samples},
                                {"seed", s.seed},
                                {"failures", s.failures},
                                {"star_commutes", s.star_commutes},
                                {"real_form_invariant", s.real_form_invariant}};
  } else {
    doc["star_equivariance"] = nullptr;
  }

  if (r.abelian) {
    const AbelianLayer& a = *r.abelian;
    ordered_json summands = ordered_json::array();
    for (const Summand& s : a.summands) {
      summands.push_back({{"embedding", s.embedding},
                          {"highest_weight", "varpi_" + std::to_string(s.highest_weight)},
                          {"dimension", s.dimension}});
    }
    doc["abelian_layer"] = {{"dimension", a.dim_q},
                            {"h10", a.h10},
                            {"h01", a.h01},
                            {"summands", std::move(summands)},
                            {"eigenspace_dimensions", a.eigenspace_dims},
                            {"one_factor", a.condition_one_factor},
                            {"highest_weight", a.condition_highest_weight}};
  } else {
    doc["abelian_layer"] = nullptr;
  }

  if (r.hodge) {
    ordered_json pieces = ordered_json::array();
    for (std::size_t i = 0; i < r.hodge->pieces.size(); ++i) {
      ordered_json piece = hodge_vector_json(r.hodge->pieces[i]);
      piece["p"] = i < r.ordered_pairs.size() ? ordered_json(r.ordered_pairs[i].first) : ordered_json(nullptr);
      pieces.push_back(std::move(piece));
    }
    doc["hodge"] = {{"pieces", std::move(pieces)},
                    {"combined", hodge_vector_json(r.hodge->combined)},
                    {"abelian_type_pieces", r.abelian_type_pieces}};
  } else {
    doc["hodge"] = nullptr;
  }

  ordered_json flags = ordered_json::array();
  for (const VerificationFlag& f : r.flags) {
    flags.push_back({{"name", f.name}, {"passed", f.passed}, {"detail", f.detail}});
  }
  doc["flags"] = std::move(flags);
  doc["errors"] = r.errors;
  doc["passed"] = r.passed();
  return doc;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace weilhodge::cli

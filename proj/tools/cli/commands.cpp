#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "cli/cli.hpp"
#include "weilhodge/errors.hpp"

namespace weilhodge::cli {

namespace {

struct RawOptions {
  int n = 0;
  long m = 0;
  std::string e;
  std::string p;
  std::uint64_t seed = 1;
  bool override_weil = false;
  std::string format = "text";
  std::string config;
  std::string out;
};

struct OptionHandles {
  CLI::Option* n = nullptr;
  CLI::Option* m = nullptr;
  CLI::Option* e = nullptr;
  CLI::Option* p = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* override_weil = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* config = nullptr;
  CLI::Option* out = nullptr;
};

OptionHandles add_options(CLI::App& sub, RawOptions& raw) {
  OptionHandles h;
  h.n = sub.add_option("--n", raw.n, "Half the dimension of U over E");
  h.m = sub.add_option("--m", raw.m, "Square-free m >= 2 for E0 = Q(sqrt(m)); omit for E0 = Q");
  h.e = sub.add_option("--e", raw.e, "Positive rational e with E = E0(sqrt(-e)) (default 1)");
  h.p = sub.add_option("--p", raw.p, "Comma-separated p_i, one per real embedding");
  h.seed = sub.add_option("--seed", raw.seed, "Seed for the sampled Lie-algebra checks (default 1)");
  h.override_weil = sub.add_flag("--override-weil", raw.override_weil, "Run even if the generalized Weil conditions fail");
  h.format = sub.add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  h.config = sub.add_option("--config", raw.config, "JSON config with keys n, m, e, p, seed, override_weil");
  h.out = sub.add_option("--out", raw.out, "Write the output to this file instead of standard output");
  return h;
}

RunConfig resolve(const RawOptions& raw, const OptionHandles& h) {
  RunConfig config;
  if (h.config->count() > 0) apply_config_file(raw.config, config);
  if (h.n->count() > 0) config.n = raw.n;
  if (h.m->count() > 0) config.m = raw.m;
  if (h.e->count() > 0) {
    try {
      config.e = Rational::parse(raw.e);
    } catch (const std::invalid_argument& ex) {
      throw InputError(std::string("--e: ") + ex.what());
    }
  }
  if (h.p->count() > 0) config.p_list = parse_p_list(raw.p);
  if (h.seed->count() > 0) config.seed = raw.seed;
  if (h.override_weil->count() > 0) config.override_weil = raw.override_weil;
  config.format = raw.format == "machine" ? OutputFormat::Machine : OutputFormat::Text;
  if (h.out->count() > 0) config.out_path = raw.out;

  if (!config.n) throw InputError("missing --n");
  if (*config.n < 1) throw InputError("--n must be at least 1");
  if (config.p_list.empty()) throw InputError("missing --p");
  if (config.e.sign() <= 0) throw InputError("--e must be a positive rational");
  return config;
}

class Text {
 public:
  explicit Text(bool color) : color_(color) {}

  std::string status(bool passed) const {
    if (!color_) return passed ? "PASS" : "FAIL";
    return passed ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
  }

 private:
  bool color_;
};

std::string show(const E0Element& x) {
  std::ostringstream os;
  os << x;
  if (!x.is_rational()) os << "  (≈ " << std::setprecision(10) << x.approx() << " at sigma_1)";
  return os.str();
}

std::string show_pair(const SignaturePair& pq) {
  return "(" + std::to_string(pq.first) + ", " + std::to_string(pq.second) + ")";
}

std::string show_pairs(const std::vector<SignaturePair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) out += (i ? ", " : "") + show_pair(pairs[i]);
  return out;
}

std::string show_numbers(const std::vector<std::uint64_t>& numbers) {
  std::string out;
  for (std::size_t i = 0; i < numbers.size(); ++i) out += (i ? " " : "") + std::to_string(numbers[i]);
  return out;
}

std::string show_diag(const DiagonalHermitianForm& form) {
  std::ostringstream os;
  os << "diag(";
  for (std::size_t i = 0; i < form.entries.size(); ++i) os << (i ? ", " : "") << form.entries[i];
  os << ")";
  return os.str();
}

void print_header(std::ostream& os, const RunConfig& config) {
  const CMField tower = config.tower();
  os << "E = " << tower.name() << ", E0 = " << tower.base().name() << ", n = " << *config.n
     << ", p = " << show_pairs(config.pairs()) << "\n";
}

void warn_override(std::ostream& os, const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  os << "warning: generalized Weil conditions overridden:\n";
  for (const auto& v : violations) os << "  " << v << "\n";
}

std::string cy_verdict(const HodgeVector& combined, int n) {
  const std::uint64_t h = combined.at(n);
  if (h == 1) return "verdict: h^{n,0} = 1 with n = " + std::to_string(n) + " (Calabi-Yau type)";
  return "verdict: h^{n,0} = " + std::to_string(h) + " with n = " + std::to_string(n) + " (not Calabi-Yau type)";
}

void print_hodge_tables(std::ostream& os, const CyHodge& hodge, const std::vector<SignaturePair>& ordered, int n) {
  os << "piece  p    level  h^{w-s,s} recentered to weight " << n << "\n";
  for (std::size_t i = 0; i < hodge.pieces.size(); ++i) {
    const int p = ordered[i].first;
    os << std::left << std::setw(7) << (i + 1) << std::setw(5) << p << std::setw(7) << hodge.pieces[i].level
       << show_numbers(hodge.pieces[i].numbers) << "   (native weight " << p << ": "
       << show_numbers(hodge_numbers(DomainLabel{n, p}).numbers) << ")\n";
  }
  os << "combined (weight " << n << ", level " << hodge.combined.level
     << "): " << show_numbers(hodge.combined.numbers) << "   sum = " << hodge.combined.total() << "\n";
  os << cy_verdict(hodge.combined, n) << "\n";
}

void print_flag_table(std::ostream& os, const PipelineReport& r, const Text& text) {
  std::size_t width = 4;
  for (const auto& f : r.flags) width = std::max(width, f.name.size());
  os << std::left << std::setw(static_cast<int>(width + 2)) << "check" << "status  detail\n";
  for (const auto& f : r.flags) {
    os << std::left << std::setw(static_cast<int>(width + 2)) << f.name << text.status(f.passed) << "    "
       << f.detail << "\n";
  }
  for (const auto& err : r.errors) os << "error: " << err << "\n";
  std::size_t failed = 0;
  for (const auto& f : r.flags) failed += f.passed ? 0 : 1;
  if (r.passed()) {
    os << "all " << r.flags.size() << " checks passed\n";
  } else {
    os << failed << " of " << r.flags.size() << " checks failed";
    if (!r.errors.empty()) os << ", " << r.errors.size() << " stage error(s)";
    os << "\n";
  }
}

int cmd_construct(const RunConfig& config, std::ostream& os, const Text& text) {
  if (*config.n > kMaxConstructN) throw InputError("construct supports n <= " + std::to_string(kMaxConstructN));
  const SignatureSpec spec(*config.n, config.pairs(), !config.override_weil);
  const CMField tower = config.tower();
  const DiagonalHermitianForm form = build_form(spec, tower);

  if (config.format == OutputFormat::Machine) {
    const ordered_json doc = construct_json(config, form, spec.pairs(), spec.permutation());
    os << dump(doc);
    return doc["passed"].get<bool>() ? kExitOk : kExitCheckFailed;
  }

  print_header(os, config);
  warn_override(os, spec.violations());
  if (spec.pairs() != spec.input_pairs()) os << "pairs reordered by descending p: " << show_pairs(spec.pairs()) << "\n";
  os << "h = " << show_diag(form) << "\n";
  bool ok = true;
  const auto embeddings = tower.base().embeddings();
  os << "embedding  signature  expected  status\n";
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    const SignaturePair got = signature_at(form, embeddings[i]);
    const bool match = got == spec.pairs()[i];
    ok = ok && match;
    os << std::left << std::setw(11) << ("sigma_" + std::to_string(i + 1)) << std::setw(11) << show_pair(got)
       << std::setw(10) << show_pair(spec.pairs()[i]) << text.status(match) << "\n";
  }
  os << "discriminant: " << show(discriminant(form)) << "\n";
  const RationalityVerdict verdict = rationality_criterion(form, *config.n);
  os << "rationality: (-1)^n disc(h) = " << show(verdict.value);
  if (verdict.holds) {
    os << " is a square in " << tower.base().name() << ", witness " << *verdict.witness;
  } else {
    os << " is not a square in " << tower.base().name();
  }
  os << "  " << text.status(verdict.holds) << "\n";
  return ok && verdict.holds ? kExitOk : kExitCheckFailed;
}

int cmd_hodge(const RunConfig& config, std::ostream& os) {
  const int n = *config.n;
  if (n > kMaxHodgeN) throw InputError("hodge supports n <= " + std::to_string(kMaxHodgeN));
  for (int p : config.p_list) {
    if (p < 1 || p > 2 * n - 1) {
      throw InputError("p = " + std::to_string(p) + " is outside 1 <= p <= 2n - 1 = " + std::to_string(2 * n - 1));
    }
  }
  const SignatureSpec spec(n, config.pairs(), !config.override_weil);
  ConstructionParams params{n, CMField(TotallyRealField::rationals(), E0Element(1)), config.pairs(), config.seed,
                            config.override_weil, 0};
  const CyHodge hodge = cy_hodge_numbers(params);
  if (config.format == OutputFormat::Machine) {
    os << dump(hodge_json(config, hodge));
    return kExitOk;
  }
  os << "n = " << n << ", p = " << show_pairs(config.pairs()) << "\n";
  warn_override(os, spec.violations());
  print_hodge_tables(os, hodge, spec.pairs(), n);
  return kExitOk;
}

PipelineReport checked_pipeline(const RunConfig& config) {
  if (*config.n > kMaxVerifyN) {
    throw InputError("verify and report support n <= " + std::to_string(kMaxVerifyN) +
                     " (exact linear algebra on wedge^n of a 2n-dimensional space)");
  }
  const ConstructionParams params = config.params();
  const SignatureSpec spec(*config.n, config.pairs(), !config.override_weil);
  if (spec.degree() != params.tower.degree()) {
    throw InputError(std::to_string(spec.degree()) + " signature pairs given but [E0:Q] = " +
                     std::to_string(params.tower.degree()));
  }
  return run_pipeline(params);
}

int cmd_verify(const RunConfig& config, std::ostream& os, const Text& text, const std::string& command) {
  const PipelineReport r = checked_pipeline(config);
  if (config.format == OutputFormat::Machine) {
    os << dump(report_json(command, config, r));
    return r.passed() ? kExitOk : kExitCheckFailed;
  }
  print_header(os, config);
  warn_override(os, r.violations);
  os << "seed " << r.seed << ", " << r.lie_samples << " Lie-algebra samples per equivariance check\n";
  if (r.kernel) {
    os << "kernel dim " << r.kernel->kernel_dim << " (expected " << r.kernel->expected_dim << ")";
  }
  if (r.star_square) os << ", star o star = " << r.star_square->expected;
  os << ", dim W_0 = " << r.real_form_dimension << "\n";
  print_flag_table(os, r, text);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_report(const RunConfig& config, std::ostream& os, const Text& text) {
  if (config.format == OutputFormat::Machine) return cmd_verify(config, os, text, "report");
  const PipelineReport r = checked_pipeline(config);
  print_header(os, config);
  warn_override(os, r.violations);
  os << "seed " << r.seed << ", " << r.lie_samples << " Lie-algebra samples per equivariance check\n\n";

  os << "[hermitian form]\n";
  if (r.form) {
    os << "h = " << show_diag(*r.form) << "\n";
    os << "signatures: " << show_pairs(r.signatures) << "\n";
  }
  if (r.discriminant) os << "discriminant: " << show(*r.discriminant) << "\n";
  if (r.rationality) {
    os << "(-1)^n disc(h) = " << show(r.rationality->value) << ": "
       << (r.rationality->holds ? "square" : "not a square") << "\n";
  }

  os << "\n[star operator and real form]\n";
  if (r.star_square) os << "star o star = " << show(r.star_square->expected) << "\n";
  if (r.quaternion) {
    os << "quaternion parameters (" << r.quaternion->i_square << ", " << r.quaternion->j_square << "): "
       << (r.quaternion->split ? "split" : "not certified split") << "\n";
  }
  os << "dim W_0 = " << r.real_form_dimension << " (C(2n, n) = " << binomial(2 * r.n, r.n) << ")\n";

  os << "\n[restriction of scalars]\n";
  if (r.kernel) {
    os << "ker(phi_n - C(n,2) phi^2) in a " << r.kernel->ambient_dim << "-dimensional space: dim "
       << r.kernel->kernel_dim << ", image of the injection has rank " << r.kernel->injection_rank << "\n";
  }
  if (r.chain) os << "subrepresentation chain: " << r.chain->rows << " x " << r.chain->cols << ", rank " << r.chain->rank << "\n";

  os << "\n[abelian layer]\n";
  if (r.abelian) {
    os << "dim_Q U' = " << r.abelian->dim_q << ", h^{1,0} = " << r.abelian->h10 << ", h^{0,1} = " << r.abelian->h01
       << "\n";
  }

  os << "\n[hodge numbers]\n";
  if (r.hodge) print_hodge_tables(os, *r.hodge, r.ordered_pairs, r.n);
  if (!r.abelian_type_pieces.empty()) {
    os << "pieces of abelian-variety type (n odd, p_i = 1):";
    for (int i : r.abelian_type_pieces) os << " " << i;
    os << "\n";
  }

  os << "\n[checks]\n";
  print_flag_table(os, r, text);
  return r.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Exact constructions for Calabi-Yau variations of Hodge structure from Hermitian forms", "weilhodge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", WEILHODGE_VERSION);

  RawOptions raw;
  std::vector<std::pair<CLI::App*, OptionHandles>> subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"construct", "Build the diagonal Hermitian form and test the rationality criterion"},
           {"hodge", "Hodge numbers of each piece and of the combined variation"},
           {"verify", "Run every exact verification and print a pass/fail table"},
           {"report", "Full report, as text tables or a machine-readable document"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs.emplace_back(sub, add_options(*sub, raw));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  RunConfig config;
  try {
    for (const auto& [sub, handles] : subs) {
      if (!sub->parsed()) continue;
      config = resolve(raw, handles);
      const Text text(color && !config.out_path);
      const std::string name = sub->get_name();
      if (name == "construct") {
        code = cmd_construct(config, buffer, text);
      } else if (name == "hodge") {
        code = cmd_hodge(config, buffer);
      } else if (name == "verify") {
        code = cmd_verify(config, buffer, text, "verify");
      } else {
        code = cmd_report(config, buffer, text);
      }
    }
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitCheckFailed;
  } catch (...) {
    err << "error: unknown failure\n";
    return kExitCheckFailed;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "error: cannot write '" << *config.out_path << "'\n";
      return kExitInvalidInput;
    }
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace weilhodge::cli

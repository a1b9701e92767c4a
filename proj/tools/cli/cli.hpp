#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilhodge/vhs.hpp"

namespace weilhodge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Largest n accepted by construct and hodge, and by verify / report (which
/// do dense exact linear algebra on wedge^n of a 2n-dimensional space).
inline constexpr int kMaxHodgeN = 30;
inline constexpr int kMaxConstructN = 50;
inline constexpr int kMaxVerifyN = 3;

enum class OutputFormat { Text, Machine };

/// Raised for anything that should end the run with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> n;
  std::optional<long> m;
  Rational e{1};
  std::vector<int> p_list;
  std::uint64_t seed = 1;
  bool override_weil = false;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;

  /// (p_i, 2n - p_i) in input order.
  std::vector<SignaturePair> pairs() const;
  CMField tower() const;
  ConstructionParams params() const;
};

/// Parses "3,1" into {3, 1}; throws InputError.
std::vector<int> parse_p_list(const std::string& text);

/// Reads the JSON config keys {n, m, e, p, seed, override_weil} into `config`.
/// Unknown keys and ill-typed values throw InputError.
void apply_config_json(const nlohmann::json& doc, RunConfig& config);
void apply_config_file(const std::string& path, RunConfig& config);

using ordered_json = nlohmann::ordered_json;

ordered_json input_echo(const RunConfig& config);
ordered_json e0_json(const E0Element& x);
ordered_json construct_json(const RunConfig& config, const DiagonalHermitianForm& form,
                            const std::vector<SignaturePair>& ordered_pairs,
                            const std::vector<std::size_t>& permutation);
ordered_json hodge_json(const RunConfig& config, const CyHodge& hodge);
ordered_json report_json(const std::string& command, const RunConfig& config, const PipelineReport& report);

/// Serialized machine document: two-space indented JSON with a trailing newline.
std::string dump(const ordered_json& doc);

/// Entry point shared by the executable and the tests. Output for the
/// success stream is buffered and written only once the command finished.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool color = false);

}  // namespace weilhodge::cli

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "cli/cli.hpp"

namespace weilhodge::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError(what + ": '" + text + "' is not an integer");
  }
  return value;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

template <typename T>
T require_integer(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_integer()) throw InputError("config key '" + key + "' must be an integer");
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
    throw InputError("config key '" + key + "' is out of range");
  }
  const auto wide = value.get<long long>();
  if (wide < static_cast<long long>(std::numeric_limits<T>::min()) ||
      wide > static_cast<long long>(std::numeric_limits<T>::max())) {
    throw InputError("config key '" + key + "' is out of range");
  }
  return static_cast<T>(wide);
}

}  // namespace

std::vector<SignaturePair> RunConfig::pairs() const {
  std::vector<SignaturePair> out;
  for (int p : p_list) out.emplace_back(p, 2 * n.value_or(0) - p);
  return out;
}

CMField RunConfig::tower() const {
  try {
    const TotallyRealField base = m ? TotallyRealField::real_quadratic(*m) : TotallyRealField::rationals();
    return CMField(base, E0Element(e));
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
}

ConstructionParams RunConfig::params() const {
  return ConstructionParams{n.value_or(0), tower(), pairs(), seed, override_weil, 0};
}

std::vector<int> parse_p_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(trim(item), "--p"));
  if (out.empty() || (!text.empty() && text.back() == ',')) {
    throw InputError("--p: expected a comma-separated list of integers, got '" + text + "'");
  }
  return out;
}

void apply_config_json(const nlohmann::json& doc, RunConfig& config) {
  if (!doc.is_object()) throw InputError("config file must contain a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "n") {
      config.n = require_integer<int>(value, key);
    } else if (key == "m") {
      if (value.is_null()) {
        config.m.reset();
      } else {
        config.m = require_integer<long>(value, key);
      }
    } else if (key == "e") {
      if (value.is_number_integer()) {
        config.e = Rational(require_integer<long>(value, key));
      } else if (value.is_string()) {
        try {
          config.e = Rational::parse(value.get<std::string>());
        } catch (const std::invalid_argument& ex) {
          throw InputError(std::string("config key 'e': ") + ex.what());
        }
      } else {
        throw InputError("config key 'e' must be an integer or a \"num/den\" string");
      }
    } else if (key == "p") {
      if (value.is_string()) {
        config.p_list = parse_p_list(value.get<std::string>());
      } else if (value.is_array()) {
        config.p_list.clear();
        for (const auto& item : value) config.p_list.push_back(require_integer<int>(item, key));
        if (config.p_list.empty()) throw InputError("config key 'p' must not be empty");
      } else {
        throw InputError("config key 'p' must be a list of integers");
      }
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw InputError("config key 'seed' must be a non-negative integer");
      config.seed = value.get<std::uint64_t>();
    } else if (key == "override_weil") {
      if (!value.is_boolean()) throw InputError("config key 'override_weil' must be true or false");
      config.override_weil = value.get<bool>();
    } else {
      throw InputError("unknown config key '" + key + "'");
    }
  }
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError("config file '" + path + "' is not valid JSON: " + ex.what());
  }
  apply_config_json(doc, config);
}

}  // namespace weilhodge::cli

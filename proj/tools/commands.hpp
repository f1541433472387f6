#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "realbezout/bounds.hpp"
#include "realbezout/interval.hpp"
#include "realbezout/polynomial.hpp"

namespace rbz::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 2;
inline constexpr int kExitUsage = 64;

/// Bad command-line input or input file. main() maps it to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  Rational constant_base{1};
  int depth = 12;
};

/// {"k": 3, "degs": [1, 1, 6], "dims": [3, 2, 2, 0]}. Malformed JSON is
/// reported with its line and column.
Profile parse_profile(std::string_view json_text);
/// "-4:4,-1/2:3" -> one interval per axis.
Box parse_box(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

enum class BoundMode { kComponents, kSignConditions, kSubsets };

struct BoundArgs {
  std::string profile_text;
  BoundMode mode = BoundMode::kComponents;
  std::int64_t s = 0;  // family size, sign-condition mode
  std::int64_t d = 0;  // family degree, sign-condition mode
  std::vector<std::int64_t> family_degs;  // subset mode
};

struct VerifyArgs {
  int example = 0;  // 11 or 15
  int d = 0;
  int k = 0;
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> degs;
};

struct CensusArgs {
  std::vector<Polynomial> system;
  std::vector<Polynomial> family;
  Box box;
  std::optional<std::string> profile_text;  // enables the bound comparison
  std::string system_label, family_label;
};

struct DeformArgs {
  std::string profile_text;
  /// tau_0 = k, tau_1, ..., tau_j.
  std::vector<std::int64_t> chain;
  /// Q_1..Q_ell; when empty, Q_i = X_{((i-1) mod k)+1}^{d_i} - 1.
  std::vector<Polynomial> system;
  std::optional<std::vector<Rational>> schedule;
  std::optional<Rational> schedule_base;
  bool square = false;
  bool emit_polynomials = true;
};

Json cmd_bound(const BoundArgs& args, const GlobalOptions& g);
Json cmd_verify(const VerifyArgs& args, const GlobalOptions& g);
Json cmd_census(const CensusArgs& args, const GlobalOptions& g);
Json cmd_deform_audit(const DeformArgs& args, const GlobalOptions& g);

/// A report for a command that failed before producing results.
Json error_report(const std::string& command, const std::string& message);

/// kExitOk when every verdict passes, kExitVerdict otherwise, kExitUsage for
/// error reports.
int exit_code(const Json& report);

/// Two-space indented JSON with a trailing newline.
std::string render(const Json& report);
Json parse_report(std::string_view text);

}  // namespace rbz::cli

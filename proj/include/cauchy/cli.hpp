#pragma once

#include "cauchy/matrix.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cauchy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

enum class Format { plain, structured };

/// Result of one command: a plain-text rendering, the equivalent JSON tree
/// (strings, integers, booleans, arrays, objects; never floats) and the
/// process exit code.
struct OutputDocument {
  std::string text;
  nlohmann::json payload;
  int exit_code = kSuccess;

  std::string render(Format format) const;
};

/// Thrown for malformed command arguments; maps to kUsageError.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Reads {"n": N, "entries": [["1", "-7/2", ...], ...]}. Throws ParseError
/// for malformed documents and DimensionError for inconsistent sizes.
ExactMatrix parse_matrix_document(const std::string& text);
ExactMatrix load_matrix_file(const std::string& path);

struct JpolyOptions {
  std::size_t k = 1;
  bool plus = false;
  bool closed = false;
  bool check = false;
};
OutputDocument cmd_jpoly(const JpolyOptions& options);

OutputDocument cmd_classes(std::size_t n, bool verify);

enum class Method { minors, leverrier, cauchy, antisym };
std::string method_name(Method m);

struct InvariantsOptions {
  /// Empty selects every method; antisym is then skipped when its budget
  /// trips instead of failing.
  std::vector<Method> methods;
};
OutputDocument cmd_invariants(const ExactMatrix& a, const InvariantsOptions& options);

enum class Target { elementary, wronski };
/// Converts power sums s_1..s_k (values.size() >= k) to c_k or w_k.
OutputDocument cmd_convert(std::size_t k, Target to, const std::vector<std::string>& values);

struct BenchOptions {
  std::size_t nmax = 4;
  std::size_t kmax = 4;
  std::size_t repeats = 3;
  std::uint64_t seed = 1;
};
OutputDocument cmd_bench(const BenchOptions& options);

struct VerifyOptions {
  std::size_t max_k = 8;
  std::size_t max_n = 5;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  /// Subset of "polynomials", "symfun", "classes", "matrices", "operators";
  /// empty runs all of them.
  std::vector<std::string> sections;
};
OutputDocument cmd_verify(const VerifyOptions& options);

} // namespace cauchy::cli

#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "interior/ehrhart.hpp"
#include "interior/graph.hpp"
#include "interior/polynomial.hpp"
#include "interior/recursion.hpp"

namespace interior::cli {

enum class Method { Ehrhart, NonExpanding, AltCycle, ClosedForm, Auto, Verify };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

enum class OutputFormat { Text, Json };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;     // usage, I/O, parse and invalid-graph errors
inline constexpr int kExitMismatch = 3;  // verify mode found disagreeing methods
inline constexpr int kExitResource = 4;

struct RunConfig {
  std::optional<std::filesystem::path> input;
  std::optional<std::string> generator;
  Method method = Method::Auto;
  OutputFormat format = OutputFormat::Text;
  /// Also report the lattice counts for dilations 0..upto.
  std::optional<std::size_t> ehrhart_upto;
  EnumerationOptions enumeration;
  RecursionOptions recursion;
  /// Seed for "random" generator specs that do not carry their own.
  std::uint64_t seed = 1;
  /// Corrupt this method's result (add 1) before comparison. Exercises verify mode.
  std::optional<Method> inject_fault;
};

struct MethodResult {
  Method method = Method::Auto;
  /// Empty when the method was skipped.
  std::optional<IntPolynomial> polynomial;
  std::string skipped;
  double millis = 0;
};

struct Report {
  BipartiteGraph graph;
  /// The requested method; in auto mode, the one it resolved to.
  Method method = Method::Auto;
  std::vector<MethodResult> results;
  IntPolynomial polynomial;
  std::optional<std::vector<BigInt>> ehrhart_values;
  double ehrhart_values_millis = 0;
  /// Verify mode only.
  std::optional<bool> agreement;
};

/// Loads or generates the graph and computes the requested polynomial(s).
/// Module errors propagate; a verify-mode disagreement is reported through
/// `agreement`, not thrown.
Report run(const RunConfig& config);

/// Throws MethodMismatch, listing each method's result, when verify mode disagreed.
void require_agreement(const Report& report);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

/// Exit code for an exception escaping `run`.
int exit_code_for(const std::exception& e);

}  // namespace interior::cli

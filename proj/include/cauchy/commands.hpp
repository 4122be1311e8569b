#pragma once

// Subcommand drivers behind the `cauchy` executable. Each returns its result
// document; run_command turns exceptions into an error document and exit code.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cauchy/parse.hpp"
#include "cauchy/winding.hpp"

namespace cauchy {

enum class OutputFormat { json, csv, svg };

struct RunConfig {
  /// Target diameter 2^-precision.
  unsigned precision = 10;
  std::optional<Rectangle> rect;
  std::optional<std::pair<Rational, Rational>> interval;
  OutputFormat format = OutputFormat::json;
  /// Samples per edge; a plot has 4 * samples rows.
  unsigned samples = 16;
  unsigned newton = 0;
  unsigned jobs = 1;

  /// Throws PreconditionError for precision 0 or fewer than 16 plot rows.
  void validate() const;
  Rational target() const { return Rational::power_of_two(-static_cast<long>(precision)); }
  /// The --rect value, or [-1, 1]^2.
  Rectangle rectangle() const;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int precondition = 3;
inline constexpr int invariant = 4;
}  // namespace exit_code

/// "x0,x1,y0,y1" with rational entries.
Rectangle parse_rectangle(std::string_view text);
/// "a,b" with rational entries.
std::pair<Rational, Rational> parse_interval(std::string_view text);

nlohmann::json rational_json(const Rational& r);
nlohmann::json gaussian_json(const GaussianRational& z);
nlohmann::json rectangle_json(const Rectangle& r);

/// Real roots in the closed interval (default: the Cauchy bound interval),
/// each either exact or inside an isolating interval no longer than the target.
nlohmann::json cmd_real_roots(const PolyExpr& poly, const RunConfig& config);
nlohmann::json cmd_complex_roots(const PolyExpr& poly, const RunConfig& config);
nlohmann::json cmd_winding(const PolyExpr& poly, const RunConfig& config);
nlohmann::json cmd_routh(const PolyExpr& poly, const RunConfig& config);
nlohmann::json cmd_fixed_point(std::string_view p_text, std::string_view q_text,
                               const RunConfig& config);

/// F sampled at 4 * samples boundary points of the rectangle, t = j / samples
/// on each edge.
struct PlotSample {
  int edge;
  Rational t;
  GaussianRational value;
};
std::vector<PlotSample> sample_boundary(const ComplexPoly& f, const Rectangle& rect,
                                        unsigned samples);
/// CSV (edge,t,re,im), SVG, or a JSON array, according to config.format.
std::string cmd_plot(const PolyExpr& poly, const RunConfig& config);

struct CommandOutcome {
  int exit_code = exit_code::ok;
  std::string output;
};

/// Runs body and maps ParseError to 2, PreconditionError to 3 and everything
/// else to 4, with a JSON error document as output.
CommandOutcome run_command(const std::function<std::string()>& body);

}  // namespace cauchy

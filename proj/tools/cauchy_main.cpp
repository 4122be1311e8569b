// cauchy: exact root counting and isolation from the command line.
//
//   cauchy complex-roots "Z^5 - 5*Z^4 - 2*Z^3 - 2*Z^2 - 3*Z - 12" --precision 12
//   echo "X^2 - 2" | cauchy real-roots --interval 0,2
//   cauchy fixed-point "X/2" "Y/2" --rect -1,1,-1,1

#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "cauchy/commands.hpp"

namespace {

std::string read_stdin() {
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact root counting, isolation and fixed-point search via Cauchy indices"};
  app.require_subcommand(1);

  unsigned precision = 10;
  std::string rect_text;
  std::string interval_text;
  std::string format = "json";
  unsigned samples = 16;
  unsigned newton = 0;
  unsigned jobs = 1;
  std::string poly_text;
  std::string p_text;
  std::string q_text;

  auto add_poly = [&](CLI::App* cmd) {
    cmd->add_option("polynomial", poly_text, "polynomial in Z or X (read from stdin when omitted)");
  };
  auto add_precision = [&](CLI::App* cmd) {
    cmd->add_option("--precision", precision, "target size 2^-k")->check(CLI::PositiveNumber);
  };
  auto add_rect = [&](CLI::App* cmd) {
    cmd->add_option("--rect", rect_text, "rectangle x0,x1,y0,y1 (default -1,1,-1,1)");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* real_roots = app.add_subcommand("real-roots", "isolate real roots on an interval");
  add_poly(real_roots);
  add_precision(real_roots);
  real_roots->add_option("--interval", interval_text, "closed interval a,b (default: Cauchy bound)");

  auto* complex_roots = app.add_subcommand("complex-roots", "isolate all complex roots");
  add_poly(complex_roots);
  add_precision(complex_roots);
  add_jobs(complex_roots);
  complex_roots->add_option("--newton", newton, "Newton steps per root once the cells separate");

  auto* winding = app.add_subcommand("winding", "roots in a rectangle by the winding number");
  add_poly(winding);
  add_rect(winding);

  auto* routh = app.add_subcommand("routh", "Routh index and half-plane root counts");
  add_poly(routh);

  auto* fixed_point = app.add_subcommand("fixed-point", "fixed point of (X, Y) -> (P, Q)");
  fixed_point->add_option("P", p_text, "first component in X, Y")->required();
  fixed_point->add_option("Q", q_text, "second component in X, Y")->required();
  add_precision(fixed_point);
  add_rect(fixed_point);

  auto* plot = app.add_subcommand("plot", "image of the rectangle boundary under F");
  add_poly(plot);
  add_rect(plot);
  plot->add_option("--samples", samples, "samples per edge (at least 4)");

  for (auto* cmd : {real_roots, complex_roots, winding, routh, fixed_point, plot}) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cauchy::exit_code::parse;
  }

  auto* chosen = app.get_subcommands().front();
  const auto outcome = cauchy::run_command([&]() -> std::string {
    cauchy::RunConfig config;
    config.precision = precision;
    config.samples = samples;
    config.newton = newton;
    config.jobs = jobs;
    config.format = format == "csv"   ? cauchy::OutputFormat::csv
                    : format == "svg" ? cauchy::OutputFormat::svg
                                      : cauchy::OutputFormat::json;
    if (!rect_text.empty()) config.rect = cauchy::parse_rectangle(rect_text);
    if (!interval_text.empty()) config.interval = cauchy::parse_interval(interval_text);

    if (chosen == fixed_point) return cauchy::cmd_fixed_point(p_text, q_text, config).dump(2) + "\n";

    const cauchy::PolyExpr poly = cauchy::parse_poly(poly_text.empty() ? read_stdin() : poly_text);
    if (chosen == plot) return cauchy::cmd_plot(poly, config);
    if (config.format != cauchy::OutputFormat::json) {
      throw cauchy::PreconditionError("--format csv and svg apply to plot only");
    }
    nlohmann::json out;
    if (chosen == real_roots) out = cauchy::cmd_real_roots(poly, config);
    else if (chosen == complex_roots) out = cauchy::cmd_complex_roots(poly, config);
    else if (chosen == winding) out = cauchy::cmd_winding(poly, config);
    else out = cauchy::cmd_routh(poly, config);
    return out.dump(2) + "\n";
  });

  (outcome.exit_code == cauchy::exit_code::ok ? std::cout : std::cerr) << outcome.output;
  return outcome.exit_code;
}

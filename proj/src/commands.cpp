#include "cauchy/commands.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

#include "cauchy/brouwer.hpp"
#include "cauchy/cauchy_index.hpp"
#include "cauchy/isolate.hpp"
#include "cauchy/stability.hpp"

namespace cauchy {

using nlohmann::json;

void RunConfig::validate() const {
  if (precision == 0) throw PreconditionError("precision must be positive");
  if (4 * static_cast<unsigned long>(samples) < 16) {
    throw PreconditionError("a plot needs at least 16 samples in total (4 per edge)");
  }
}

Rectangle RunConfig::rectangle() const {
  return rect.value_or(Rectangle::centered_square(Rational(1)));
}

namespace {

std::vector<Rational> parse_rational_list(std::string_view text, std::size_t count,
                                          std::string_view what) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      std::string trimmed(item);
      std::erase_if(trimmed, [](unsigned char c) { return std::isspace(c); });
      out.push_back(Rational::parse(trimmed));
    } catch (const DivisionByZero&) {
      throw ParseError(start, "zero denominator in " + std::string(what));
    } catch (const PreconditionError&) {
      throw ParseError(start, "malformed rational '" + std::string(item) + "' in " + std::string(what));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) {
    throw ParseError(0, std::string(what) + " needs " + std::to_string(count) + " comma-separated values");
  }
  return out;
}

HalfInt open_root_count(const RealPoly& p, const Rational& lo, const Rational& hi) {
  HalfInt n = count_real_roots(p, lo, hi);
  if (p(lo).is_zero()) n -= HalfInt::from_units(1);
  if (p(hi).is_zero()) n -= HalfInt::from_units(1);
  if (!n.is_integer()) throw InvariantError("fractional open-interval root count");
  return n;
}

struct RealRootItem {
  Rational lo, hi;  // lo == hi for exact roots
  HalfInt weight;
};

// Left-to-right bisection of ]lo, hi[ whose endpoints are not roots of p.
void isolate_open(const RealPoly& p, const Rational& lo, const Rational& hi, HalfInt count,
                  const Rational& target, std::vector<RealRootItem>& out) {
  if (count.is_zero()) return;
  if (count == HalfInt::from_integer(1) && hi - lo <= target) {
    out.push_back({lo, hi, HalfInt::from_integer(1)});
    return;
  }
  const Rational mid = (lo + hi) * Rational(1, 2);
  const bool hit = p(mid).is_zero();
  const HalfInt left = open_root_count(p, lo, mid);
  isolate_open(p, lo, mid, left, target, out);
  if (hit) out.push_back({mid, mid, HalfInt::from_integer(1)});
  const HalfInt right = count - left - (hit ? HalfInt::from_integer(1) : HalfInt());
  isolate_open(p, mid, hi, right, target, out);
}

json index_json(const QuarterInt& q) { return q.to_string(); }
json index_json(const HalfInt& h) { return h.to_string(); }

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string plot_svg(const std::vector<PlotSample>& samples) {
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& s : samples) {
    lo_x = std::min(lo_x, s.value.re().to_double());
    hi_x = std::max(hi_x, s.value.re().to_double());
    lo_y = std::min(lo_y, s.value.im().to_double());
    hi_y = std::max(hi_y, s.value.im().to_double());
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double size = 480, pad = 20;
  const double scale = (size - 2 * pad) / span;
  auto px = [&](double x) { return pad + (x - lo_x) * scale; };
  auto py = [&](double y) { return size - pad - (y - lo_y) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t k = 0; k <= samples.size(); ++k) {
    const auto& s = samples[k % samples.size()];  // close the loop
    if (k) os << ' ';
    os << format_double(px(s.value.re().to_double())) << ','
       << format_double(py(s.value.im().to_double()));
  }
  os << "\"/>\n";
  os << "  <circle cx=\"" << format_double(px(0)) << "\" cy=\"" << format_double(py(0))
     << "\" r=\"4\" fill=\"crimson\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

Rectangle parse_rectangle(std::string_view text) {
  const auto v = parse_rational_list(text, 4, "rectangle");
  if (!(v[0] < v[1]) || !(v[2] < v[3])) throw ParseError(0, "rectangle needs x0 < x1 and y0 < y1");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<Rational, Rational> parse_interval(std::string_view text) {
  const auto v = parse_rational_list(text, 2, "interval");
  if (!(v[0] < v[1])) throw ParseError(0, "interval needs a < b");
  return {v[0], v[1]};
}

json rational_json(const Rational& r) { return r.to_string(); }

json gaussian_json(const GaussianRational& z) {
  return {{"re", rational_json(z.re())}, {"im", rational_json(z.im())}};
}

json rectangle_json(const Rectangle& r) {
  return {{"x0", rational_json(r.x0())},
          {"x1", rational_json(r.x1())},
          {"y0", rational_json(r.y0())},
          {"y1", rational_json(r.y1())}};
}

json cmd_real_roots(const PolyExpr& poly, const RunConfig& config) {
  config.validate();
  const RealPoly p = poly.real();
  if (p.is_zero()) throw PreconditionError("the zero polynomial has every number as a root");

  Rational lo, hi;
  if (config.interval) {
    std::tie(lo, hi) = *config.interval;
  } else {
    const Rational r = p.degree() > 0 ? cauchy_radius(to_complex(p)) : Rational(1);
    lo = -r;
    hi = r;
  }

  std::vector<RealRootItem> items;
  if (p.degree() > 0) {
    const RealPoly sf = square_free_part(p);
    const bool at_lo = sf(lo).is_zero();
    const bool at_hi = sf(hi).is_zero();
    if (at_lo) items.push_back({lo, lo, HalfInt::from_units(1)});
    isolate_open(sf, lo, hi, open_root_count(sf, lo, hi), config.target(), items);
    if (at_hi) items.push_back({hi, hi, HalfInt::from_units(1)});
  }

  json roots = json::array();
  HalfInt total;
  for (const auto& item : items) {
    total += item.weight;
    if (item.lo == item.hi) {
      roots.push_back({{"kind", "exact"},
                       {"value", rational_json(item.lo)},
                       {"multiplicity", divide_out_root(p, item.lo).second},
                       {"weight", index_json(item.weight)}});
    } else {
      roots.push_back({{"kind", "interval"},
                       {"lo", rational_json(item.lo)},
                       {"hi", rational_json(item.hi)},
                       {"weight", index_json(item.weight)}});
    }
  }
  return {{"command", "real-roots"},
          {"polynomial", to_string(p, poly.variable)},
          {"interval", {rational_json(lo), rational_json(hi)}},
          {"target_width", rational_json(config.target())},
          {"count", index_json(total)},
          {"roots", roots}};
}

json cmd_complex_roots(const PolyExpr& poly, const RunConfig& config) {
  config.validate();
  if (poly.poly.is_zero()) throw PreconditionError("the zero polynomial has no isolated roots");
  if (poly.poly.degree() == 0) {
    return {{"command", "complex-roots"},
            {"polynomial", poly.print()},
            {"degree", 0},
            {"target_diameter", rational_json(config.target())},
            {"generations", 0},
            {"exact_roots", json::array()},
            {"cells", json::array()},
            {"newton_switch_ready", true}};
  }
  const IsolationState state = isolate_roots(poly.poly, config.target(), std::max(1u, config.jobs));

  json exact = json::array();
  for (const auto& r : state.deflated_roots) {
    exact.push_back({{"value", gaussian_json(r.value)}, {"multiplicity", r.multiplicity}});
  }
  json cells = json::array();
  for (const Cell& c : state.cells) {
    cells.push_back({{"dim", c.dim},
                     {"x0", rational_json(c.x0)},
                     {"x1", rational_json(c.x1)},
                     {"y0", rational_json(c.y0)},
                     {"y1", rational_json(c.y1)},
                     {"center", gaussian_json(c.center())},
                     {"radius", rational_json(c.radius_bound())},
                     {"weight", index_json(c.root_weight)}});
  }
  const auto approx = approximate_roots(state);
  const bool ready = newton_switch_ready(approx);

  json out = {{"command", "complex-roots"},
              {"polynomial", poly.print()},
              {"degree", poly.poly.degree()},
              {"target_diameter", rational_json(config.target())},
              {"initial_radius", rational_json(state.initial_radius)},
              {"generations", state.generation},
              {"exact_roots", exact},
              {"cells", cells},
              {"newton_switch_ready", ready}};

  if (config.newton > 0) {
    if (!ready) {
      out["newton"] = nullptr;
      out["newton_skipped"] = "cells are not yet separated enough for the Newton switch";
    } else {
      const unsigned bits = newton_rounding_bits(config.target());
      json runs = json::array();
      for (const auto& a : approx) {
        json iterates = json::array();
        GaussianRational z = a.center;
        for (unsigned m = 0; m < config.newton; ++m) {
          z = newton_step(state.working, z, bits);
          iterates.push_back(gaussian_json(z));
        }
        runs.push_back({{"start", gaussian_json(a.center)},
                        {"alpha_test", smale_check(state.working, a.center)},
                        {"iterates", iterates}});
      }
      out["newton"] = {{"rounding_bits", bits}, {"runs", runs}};
    }
  }
  return out;
}

json cmd_winding(const PolyExpr& poly, const RunConfig& config) {
  const Rectangle rect = config.rectangle();
  // Evaluated before the initializer list: GCC 11 leaks the already built
  // elements when one of them throws.
  const QuarterInt index = count_roots_in_rectangle(poly.poly, rect);
  return {{"command", "winding"},
          {"polynomial", poly.print()},
          {"rectangle", rectangle_json(rect)},
          {"index", index_json(index)}};
}

json cmd_routh(const PolyExpr& poly, const RunConfig&) {
  const HalfPlaneCount counts = half_plane_count(poly.poly);
  const auto routh = routh_index(poly.poly);
  return {{"command", "routh"},
          {"polynomial", poly.print()},
          {"routh", index_json(routh)},
          {"right_half_plane", counts.positive},
          {"left_half_plane", counts.negative},
          {"imaginary_axis", counts.imaginary_axis},
          {"hurwitz_stable", counts.positive == 0 && counts.imaginary_axis == 0}};
}

json cmd_fixed_point(std::string_view p_text, std::string_view q_text, const RunConfig& config) {
  config.validate();
  const PlaneMap f{parse_bivariate(p_text), parse_bivariate(q_text)};
  const Rectangle rect = config.rectangle();
  const FixedPointResult r = fixed_point_search(f, rect, config.target());
  json out = {{"command", "fixed-point"},
              {"rectangle", rectangle_json(rect)},
              {"target_diameter", rational_json(config.target())},
              {"generations", r.generations}};
  switch (r.kind) {
    case FixedPointResult::Kind::exact_point:
      out["kind"] = "exact_point";
      out["point"] = gaussian_json(r.point);
      break;
    case FixedPointResult::Kind::cell:
      out["kind"] = "cell";
      out["cell"] = rectangle_json(*r.rectangle);
      out["center"] = gaussian_json(r.rectangle->center());
      out["index"] = index_json(r.index);
      break;
    case FixedPointResult::Kind::boundary_segment:
      out["kind"] = "boundary_segment";
      out["from"] = gaussian_json(r.segment_from);
      out["to"] = gaussian_json(r.segment_to);
      break;
  }
  return out;
}

std::vector<PlotSample> sample_boundary(const ComplexPoly& f, const Rectangle& rect,
                                        unsigned samples) {
  if (samples == 0) throw PreconditionError("samples must be positive");
  const auto v = rect.vertices();
  std::vector<PlotSample> out;
  out.reserve(4 * samples);
  for (int edge = 0; edge < 4; ++edge) {
    const GaussianRational& a = v[edge];
    const GaussianRational& b = v[(edge + 1) % 4];
    for (unsigned j = 0; j < samples; ++j) {
      const Rational t(static_cast<long>(j), static_cast<long>(samples));
      out.push_back({edge, t, f(a + (b - a) * GaussianRational(t))});
    }
  }
  return out;
}

std::string cmd_plot(const PolyExpr& poly, const RunConfig& config) {
  config.validate();
  const auto samples = sample_boundary(poly.poly, config.rectangle(), config.samples);
  switch (config.format) {
    case OutputFormat::csv: {
      std::string csv = "edge,t,re,im\n";
      for (const auto& s : samples) {
        csv += std::to_string(s.edge) + ',' + s.t.to_string() + ',' + s.value.re().to_string() +
               ',' + s.value.im().to_string() + '\n';
      }
      return csv;
    }
    case OutputFormat::svg:
      return plot_svg(samples);
    case OutputFormat::json:
      break;
  }
  json rows = json::array();
  for (const auto& s : samples) {
    rows.push_back({{"edge", s.edge}, {"t", rational_json(s.t)}, {"value", gaussian_json(s.value)}});
  }
  return json{{"command", "plot"},
              {"polynomial", poly.print()},
              {"rectangle", rectangle_json(config.rectangle())},
              {"samples", rows}}
             .dump(2) + "\n";
}

CommandOutcome run_command(const std::function<std::string()>& body) {
  auto failure = [](int code, std::string kind, const std::exception& e, json extra = json::object()) {
    json err = {{"kind", std::move(kind)}, {"message", e.what()}};
    err.update(extra);
    return CommandOutcome{code, json{{"error", err}}.dump(2) + "\n"};
  };
  try {
    return {exit_code::ok, body()};
  } catch (const ParseError& e) {
    return failure(exit_code::parse, "parse", e, {{"position", e.position()}});
  } catch (const VertexRootError& e) {
    return failure(exit_code::precondition, "vertex_root", e, {{"vertex", gaussian_json(e.vertex())}});
  } catch (const PreconditionError& e) {
    return failure(exit_code::precondition, "precondition", e);
  } catch (const InvariantError& e) {
    return failure(exit_code::invariant, "invariant", e);
  } catch (const std::exception& e) {
    return failure(exit_code::invariant, "internal", e);
  }
}

}  // namespace cauchy

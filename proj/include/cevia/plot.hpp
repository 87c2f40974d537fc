#pragma once

// Sampling of the affine normal form (ax+1)y^2 + (ax+1)(x-1)y + x^2 - x = 0
// in the chart z = 1 - x - y, rendered as CSV or SVG.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cevia/rational.hpp"

namespace cevia {

struct PlotWindow {
  Rational xmin{-5};
  Rational xmax{5};
  double ymin = -5.0;
  double ymax = 5.0;
  std::size_t samples = 401;  ///< at least 2
};

struct PlotRow {
  Rational x;
  std::optional<double> y1;  ///< y1 <= y2 when both exist
  std::optional<double> y2;
  bool after_pole = false;   ///< ax+1 changed sign since the previous row
};

struct PlotData {
  Rational a;
  std::vector<PlotRow> rows;
  std::size_t poles = 0;  ///< samples skipped because ax+1 = 0
  std::size_t empty = 0;  ///< samples with no real branch
};

/// Throws ParseError when the window is malformed.
PlotData sample_curve(const Rational& a, const PlotWindow& window);

/// Real y solving the normal form at x, ascending; empty at a pole or where D(x) < 0.
std::vector<double> solve_for_y(const Rational& a, const Rational& x);

std::string plot_csv(const PlotData& data);
std::string plot_svg(const PlotData& data, const PlotWindow& window);

}  // namespace cevia

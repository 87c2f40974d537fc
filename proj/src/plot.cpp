#include "cevia/plot.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "cevia/curve.hpp"
#include "cevia/error.hpp"

namespace cevia {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_fixed(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<double> solve_for_y(const Rational& a, const Rational& x) {
  const Rational lead = a * x + 1;
  if (lead.is_zero()) return {};
  const Rational d = quartic_discriminant(a).d(x);
  if (d.sign() < 0) return {};
  const Rational b = lead * (x - 1);
  const Rational two_lead = Rational(2) * lead;
  if (auto root = exact_sqrt(d)) {
    const double r1 = ((-b - *root) / two_lead).to_double();
    const double r2 = ((-b + *root) / two_lead).to_double();
    return r1 <= r2 ? std::vector{r1, r2} : std::vector{r2, r1};
  }
  const double s = std::sqrt(d.to_double());
  const double bb = b.to_double();
  const double tl = two_lead.to_double();
  const double r1 = (-bb - s) / tl;
  const double r2 = (-bb + s) / tl;
  return r1 <= r2 ? std::vector{r1, r2} : std::vector{r2, r1};
}

PlotData sample_curve(const Rational& a, const PlotWindow& window) {
  if (!(window.xmin < window.xmax)) throw Error(Errc::ParseError, "plot window needs xmin < xmax");
  if (!(window.ymin < window.ymax)) throw Error(Errc::ParseError, "plot window needs ymin < ymax");
  if (window.samples < 2) throw Error(Errc::ParseError, "plot needs at least 2 samples");

  PlotData data{a, {}, 0, 0};
  const Rational step = (window.xmax - window.xmin) / Rational(static_cast<long>(window.samples - 1));
  int last_sign = 0;
  bool pending_pole = false;
  for (std::size_t i = 0; i < window.samples; ++i) {
    const Rational x = window.xmin + step * Rational(static_cast<long>(i));
    const int sign = (a * x + 1).sign();
    if (sign == 0) {
      ++data.poles;
      pending_pole = true;
      continue;
    }
    PlotRow row{x, std::nullopt, std::nullopt, pending_pole || (last_sign != 0 && sign != last_sign)};
    pending_pole = false;
    last_sign = sign;
    const auto ys = solve_for_y(a, x);
    if (ys.empty()) {
      ++data.empty;
    } else {
      row.y1 = ys[0];
      row.y2 = ys[1];
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

std::string plot_csv(const PlotData& data) {
  std::ostringstream out;
  out << "x,y1,y2\n";
  for (const auto& row : data.rows) {
    out << row.x.str() << ',';
    if (row.y1) out << format_double(*row.y1);
    out << ',';
    if (row.y2) out << format_double(*row.y2);
    out << '\n';
  }
  return out.str();
}

std::string plot_svg(const PlotData& data, const PlotWindow& window) {
  constexpr double width = 800.0;
  constexpr double height = 600.0;
  const double x0 = window.xmin.to_double();
  const double x1 = window.xmax.to_double();
  auto sx = [&](double x) { return (x - x0) / (x1 - x0) * width; };
  auto sy = [&](double y) { return height - (y - window.ymin) / (window.ymax - window.ymin) * height; };
  auto inside = [&](double y) { return y >= window.ymin && y <= window.ymax; };

  std::vector<std::string> lines;
  for (int branch = 0; branch < 2; ++branch) {
    std::string current;
    std::size_t count = 0;
    auto flush = [&] {
      if (count >= 2) lines.push_back(current);
      current.clear();
      count = 0;
    };
    for (const auto& row : data.rows) {
      const auto& y = branch == 0 ? row.y1 : row.y2;
      if (row.after_pole) flush();
      if (!y || !inside(*y)) {
        flush();
        continue;
      }
      if (count != 0) current += ' ';
      current += format_fixed(sx(row.x.to_double())) + ',' + format_fixed(sy(*y));
      ++count;
    }
    flush();
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out << "<title>E_a, a = " << data.a.str() << "</title>\n";
  out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  if (x0 <= 0.0 && 0.0 <= x1) {
    out << "<line x1=\"" << format_fixed(sx(0.0)) << "\" y1=\"0\" x2=\"" << format_fixed(sx(0.0))
        << "\" y2=\"600\" stroke=\"#bbb\"/>\n";
  }
  if (inside(0.0)) {
    out << "<line x1=\"0\" y1=\"" << format_fixed(sy(0.0)) << "\" x2=\"800\" y2=\"" << format_fixed(sy(0.0))
        << "\" stroke=\"#bbb\"/>\n";
  }
  for (const auto& pts : lines) {
    out << "<polyline fill=\"none\" stroke=\"#1f4e9a\" stroke-width=\"1.5\" points=\"" << pts << "\"/>\n";
  }
  // Vertices A, B, C sit at (1,0), (0,1), (0,0) in this chart.
  const struct {
    const char* label;
    double x;
    double y;
  } marks[] = {{"A", 1.0, 0.0}, {"B", 0.0, 1.0}, {"C", 0.0, 0.0}};
  for (const auto& m : marks) {
    if (m.x < x0 || m.x > x1 || !inside(m.y)) continue;
    out << "<circle cx=\"" << format_fixed(sx(m.x)) << "\" cy=\"" << format_fixed(sy(m.y))
        << "\" r=\"4\" fill=\"#c0392b\"/>\n";
    out << "<text x=\"" << format_fixed(sx(m.x) + 6) << "\" y=\"" << format_fixed(sy(m.y) - 6)
        << "\" font-size=\"14\">" << m.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cevia

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "legspec/errors.hpp"
#include "legspec/io.hpp"

namespace legspec {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 40;

std::string header() {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s.str();
}

double scale(double v, double lo, double hi, double out_lo, double out_hi) {
  if (hi <= lo) return (out_lo + out_hi) / 2;
  return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
}

}  // namespace

std::string front_svg(const FrontCloud& cloud) {
  if (cloud.base_dim != 1) throw CapabilityError("svg: fronts are plotted only over a one-dimensional base");
  double zlo = 0;
  double zhi = 0;
  double pmax = 0;
  if (!cloud.points.empty()) {
    zlo = zhi = cloud.points.front().z;
  }
  for (const auto& pt : cloud.points) {
    zlo = std::min(zlo, pt.z);
    zhi = std::max(zhi, pt.z);
    pmax = std::max(pmax, std::abs(pt.p[0]));
  }
  std::ostringstream s;
  s << header();
  s << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
    << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10 << "\" font-size=\"12\">q</text>\n";
  s << "<text x=\"10\" y=\"" << kHeight / 2 << "\" font-size=\"12\">z</text>\n";
  for (const auto& pt : cloud.points) {
    const double x = scale(pt.q[0], 0, 2 * std::numbers::pi, kMargin, kWidth - kMargin);
    const double y = scale(pt.z, zlo, zhi, kHeight - kMargin, kMargin);
    // Hue runs from blue (p < 0) through green to red (p > 0).
    const double t = pmax > 0 ? pt.p[0] / pmax : 0;
    const int hue = static_cast<int>(std::lround(120 - 120 * t));
    s << "<circle cx=\"" << format_number(x) << "\" cy=\"" << format_number(y)
      << "\" r=\"2\" fill=\"none\" stroke=\"hsl(" << hue << ",80%,45%)\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string spectrum_svg(const Spectrum& spectrum) {
  double lo = 0;
  double hi = 0;
  if (!spectrum.values.empty()) {
    lo = spectrum.values.front();
    hi = spectrum.values.back();
  }
  const double pad = std::max(1e-9, (hi - lo) * 0.1 + (hi == lo ? 1 : 0));
  lo -= pad;
  hi += pad;
  const double axis = kHeight / 2;
  std::ostringstream s;
  s << header();
  s << "<line x1=\"" << kMargin << "\" y1=\"" << axis << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << axis
    << "\" stroke=\"black\"/>\n";
  for (double v : spectrum.values) {
    const double x = scale(v, lo, hi, kMargin, kWidth - kMargin);
    s << "<line x1=\"" << format_number(x) << "\" y1=\"" << axis - 20 << "\" x2=\"" << format_number(x)
      << "\" y2=\"" << axis + 20 << "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << format_number(x) << "\" y=\"" << axis + 40 << "\" font-size=\"12\" text-anchor=\"middle\">"
      << format_number(v) << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace legspec

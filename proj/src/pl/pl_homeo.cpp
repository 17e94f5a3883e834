#include "displace/pl/pl_homeo.hpp"

#include <algorithm>

#include "displace/core/errors.hpp"

namespace displace {

namespace {

Rational segment_slope(const Breakpoint& a, const Breakpoint& b) { return (b.y - a.y) / (b.x - a.x); }

// Evaluates the piecewise-linear graph through `pts` (identity outside).
// `swap` evaluates the inverse graph instead.
Rational evaluate(const std::vector<Breakpoint>& pts, const Rational& t, bool swap) {
  auto in = [swap](const Breakpoint& p) -> const Rational& { return swap ? p.y : p.x; };
  auto out = [swap](const Breakpoint& p) -> const Rational& { return swap ? p.x : p.y; };
  if (pts.empty() || t <= in(pts.front()) || t >= in(pts.back())) return t;
  auto it = std::upper_bound(pts.begin(), pts.end(), t,
                             [&](const Rational& v, const Breakpoint& p) { return v < in(p); });
  const Breakpoint& right = *it;
  const Breakpoint& left = *(it - 1);
  return out(left) + (t - in(left)) * (out(right) - out(left)) / (in(right) - in(left));
}

}  // namespace

PLHomeo PLHomeo::from_breakpoints(std::vector<Breakpoint> points) {
  for (auto& p : points) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x) || !(points[i - 1].y < points[i].y)) {
      throw InvalidArgument("breakpoints must be strictly increasing in both coordinates");
    }
  }
  if (!points.empty() && (points.front().x != points.front().y || points.back().x != points.back().y)) {
    throw InvalidArgument("first and last breakpoints must lie on the diagonal");
  }
  PLHomeo result;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rational left = i == 0 ? Rational(1) : segment_slope(points[i - 1], points[i]);
    Rational right = i + 1 == n ? Rational(1) : segment_slope(points[i], points[i + 1]);
    if (left != right) result.points_.push_back(points[i]);
  }
  return result;
}

Rational PLHomeo::operator()(const Rational& x) const { return evaluate(points_, x, false); }

Rational PLHomeo::preimage(const Rational& y) const { return evaluate(points_, y, true); }

PLHomeo PLHomeo::inverse() const {
  PLHomeo result;
  result.points_.reserve(points_.size());
  for (const auto& p : points_) result.points_.push_back({p.y, p.x});
  return result;
}

PLHomeo PLHomeo::compose(const PLHomeo& g) const {
  std::vector<Rational> xs;
  xs.reserve(points_.size() + g.points_.size());
  for (const auto& p : g.points_) xs.push_back(p.x);
  for (const auto& p : points_) xs.push_back(g.preimage(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, (*this)(g(x))});
  return from_breakpoints(std::move(pts));
}

std::vector<Rational> PLHomeo::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points_.size(); ++i) out.push_back(segment_slope(points_[i - 1], points_[i]));
  return out;
}

IntervalSet PLHomeo::support() const {
  if (points_.empty()) return {};
  // Zeros of the displacement x -> g(x) - x, in increasing order. Between two
  // consecutive zeros the displacement is either identically zero or of
  // constant sign, which the midpoint decides.
  std::vector<Rational> zeros;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    Rational d = points_[i].y - points_[i].x;
    if (d == 0) {
      zeros.push_back(points_[i].x);
    }
    if (i + 1 < points_.size()) {
      Rational d_next = points_[i + 1].y - points_[i + 1].x;
      if ((d < 0 && d_next > 0) || (d > 0 && d_next < 0)) {
        // d(x) = d + (x - x_i) * (d_next - d) / (x_{i+1} - x_i)
        zeros.push_back(points_[i].x - d * (points_[i + 1].x - points_[i].x) / (d_next - d));
      }
    }
  }
  std::vector<OpenInterval> pieces;
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    Rational mid = (zeros[i - 1] + zeros[i]) / 2;
    if ((*this)(mid) != mid) pieces.push_back({zeros[i - 1], zeros[i]});
  }
  return IntervalSet(std::move(pieces));
}

OpenInterval PLHomeo::image(const OpenInterval& interval) const {
  return {(*this)(interval.lo), (*this)(interval.hi)};
}

IntervalSet PLHomeo::image(const IntervalSet& set) const {
  std::vector<OpenInterval> out;
  out.reserve(set.size());
  for (const auto& piece : set.intervals()) out.push_back(image(piece));
  return IntervalSet(std::move(out));
}

std::string PLHomeo::to_string() const {
  if (points_.empty()) return "id";
  std::string out = "[";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + displace::to_string(points_[i].x) + ", " + displace::to_string(points_[i].y) + ")";
  }
  return out + "]";
}

}  // namespace displace

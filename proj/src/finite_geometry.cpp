#include "fgeo/finite_geometry.hpp"

#include "fgeo/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace fgeo {

namespace {

constexpr unsigned kMaxCountBits = 4096;

void require_compatible(const AffinePoint& a, const AffinePoint& b) {
  if (a.coords.size() != b.coords.size()) {
    throw Error(ErrorKind::DimMismatch, "points have different dimensions: " + std::to_string(a.coords.size()) +
                                            " vs " + std::to_string(b.coords.size()));
  }
}

std::string pair_witness(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool nearly_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

std::string AffinePoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].to_string();
  }
  return out + ")";
}

AffineSpace::AffineSpace(FieldRef field, std::uint32_t dim) : field_(std::move(field)), dim_(dim) {
  if (!field_) throw Error(ErrorKind::InvalidInput, "null field");
  if (dim_ < 1) throw Error(ErrorKind::InvalidInput, "affine dimension must be >= 1");
}

std::uint64_t AffineSpace::point_count() const {
  const std::uint64_t q = field_->order();
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / q) {
      throw Error(ErrorKind::Overflow, "point count q^dim exceeds 64 bits");
    }
    n *= q;
  }
  return n;
}

AffinePoint AffineSpace::point(std::uint64_t index) const {
  const std::uint64_t q = field_->order();
  AffinePoint pt;
  pt.coords.resize(dim_, FieldElement::zero(field_));
  for (std::uint32_t i = dim_; i-- > 0;) {
    pt.coords[i] = FieldElement::from_index(field_, index % q);
    index /= q;
  }
  return pt;
}

std::uint64_t AffineSpace::index_of(const AffinePoint& pt) const {
  if (pt.coords.size() != dim_) throw Error(ErrorKind::DimMismatch, "point dimension does not match space");
  const std::uint64_t q = field_->order();
  std::uint64_t idx = 0;
  for (const auto& c : pt.coords) {
    if (!(*c.spec() == *field_)) throw Error(ErrorKind::SpecMismatch, "point coordinate from another field");
    idx = idx * q + c.index();
  }
  return idx;
}

AffinePoint AffineSpace::origin() const { return point(0); }

std::vector<AffinePoint> AffineSpace::enumerate_points() const {
  const std::uint64_t n = point_count();
  if (n > kMaxPointScan) throw Error(ErrorKind::SizeLimit, "point enumeration limited to 2^20 points");
  std::vector<AffinePoint> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(point(i));
  return out;
}

bool Line::contains(const AffinePoint& pt) const {
  return std::find(points.begin(), points.end(), pt) != points.end();
}

FieldElement squared_distance(const AffinePoint& a, const AffinePoint& b) {
  require_compatible(a, b);
  if (a.coords.empty()) throw Error(ErrorKind::DimMismatch, "zero-dimensional points");
  FieldElement sum = FieldElement::zero(a.coords.front().spec());
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const FieldElement diff = sub(a.coords[i], b.coords[i]);
    sum = add(sum, mul(diff, diff));
  }
  return sum;
}

std::optional<std::pair<AffinePoint, AffinePoint>> find_degenerate_pair(const AffineSpace& space) {
  const std::uint64_t n = space.point_count();
  if (n > kMaxPointScan) throw Error(ErrorKind::SizeLimit, "degenerate-pair search limited to 2^20 points");
  // d^2 depends only on y - x, and the origin is the first point, so the first
  // degenerate pair is (origin, first nonzero isotropic point) if one exists.
  const AffinePoint origin = space.origin();
  for (std::uint64_t j = 1; j < n; ++j) {
    AffinePoint candidate = space.point(j);
    if (squared_distance(origin, candidate).is_zero()) return std::make_pair(origin, std::move(candidate));
  }
  return std::nullopt;
}

std::vector<Line> enumerate_lines(const AffineSpace& space) {
  const std::uint64_t n = space.point_count();
  if (n > kMaxLineEnumeration) throw Error(ErrorKind::SizeLimit, "line enumeration limited to 2^16 points");
  const auto& field = space.field();
  const auto scalars = enumerate_elements(field);
  const auto points = space.enumerate_points();

  std::vector<Line> lines;
  std::vector<char> visited(n);
  for (std::uint64_t d = 1; d < n; ++d) {
    const AffinePoint& dir = points[d];
    const auto lead = std::find_if(dir.coords.begin(), dir.coords.end(), [](const auto& c) { return !c.is_zero(); });
    if (!lead->is_one()) continue;

    // Parallel lines partition the space; the first unvisited point in order is
    // the smallest point of a new line.
    std::fill(visited.begin(), visited.end(), 0);
    for (std::uint64_t b = 0; b < n; ++b) {
      if (visited[b]) continue;
      Line line{points[b], dir, {}};
      std::vector<std::uint64_t> ids;
      ids.reserve(scalars.size());
      for (const auto& t : scalars) {
        AffinePoint pt = points[b];
        for (std::size_t i = 0; i < pt.coords.size(); ++i) pt.coords[i] = add(pt.coords[i], mul(t, dir.coords[i]));
        const auto id = space.index_of(pt);
        visited[id] = 1;
        ids.push_back(id);
      }
      std::sort(ids.begin(), ids.end());
      line.points.reserve(ids.size());
      for (auto id : ids) line.points.push_back(points[id]);
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

IncidenceStructure::IncidenceStructure(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> lines)
    : labels_(std::move(labels)), lines_(std::move(lines)) {
  for (std::size_t li = 0; li < lines_.size(); ++li) {
    auto& line = lines_[li];
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw Error(ErrorKind::MalformedStructure, "line " + std::to_string(li) + " repeats a point");
    }
    if (line.size() < 2) {
      throw Error(ErrorKind::MalformedStructure, "line " + std::to_string(li) + " has fewer than 2 points");
    }
    if (line.back() >= labels_.size()) {
      throw Error(ErrorKind::MalformedStructure, "line " + std::to_string(li) + " references undeclared point");
    }
  }
}

bool IncidenceStructure::incident(std::size_t point, std::size_t line) const {
  const auto& l = lines_.at(line);
  return std::binary_search(l.begin(), l.end(), point);
}

std::vector<std::size_t> IncidenceStructure::point_degrees() const {
  std::vector<std::size_t> deg(labels_.size(), 0);
  for (const auto& l : lines_) {
    for (auto p : l) ++deg[p];
  }
  return deg;
}

std::vector<std::size_t> IncidenceStructure::line_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(lines_.size());
  for (const auto& l : lines_) sizes.push_back(l.size());
  return sizes;
}

std::size_t IncidenceStructure::ordinary_line_count() const {
  return static_cast<std::size_t>(
      std::count_if(lines_.begin(), lines_.end(), [](const auto& l) { return l.size() == 2; }));
}

IncidenceStructure incidence_structure(const AffineSpace& space) {
  auto lines = enumerate_lines(space);
  std::vector<std::string> labels;
  const auto points = space.enumerate_points();
  labels.reserve(points.size());
  for (const auto& pt : points) labels.push_back(pt.to_string());
  std::vector<std::vector<std::size_t>> ids;
  ids.reserve(lines.size());
  for (const auto& line : lines) {
    std::vector<std::size_t> members;
    members.reserve(line.points.size());
    for (const auto& pt : line.points) members.push_back(static_cast<std::size_t>(space.index_of(pt)));
    ids.push_back(std::move(members));
  }
  return IncidenceStructure(std::move(labels), std::move(ids));
}

HesseResult check_hesse_property(const IncidenceStructure& s) {
  const std::size_t n = s.point_count();
  std::vector<std::vector<std::size_t>> through(n);
  for (std::size_t li = 0; li < s.line_count(); ++li) {
    for (auto p : s.lines()[li]) through[p].push_back(li);
  }
  std::vector<char> covered(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(covered.begin(), covered.end(), 0);
    for (auto li : through[x]) {
      const auto& line = s.lines()[li];
      if (line.size() < 3) continue;
      for (auto y : line) covered[y] = 1;
    }
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!covered[y]) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

std::string RationalPoint::to_string() const { return "(" + x.to_string() + "," + y.to_string() + ")"; }

bool collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).is_zero();
}

std::string_view to_string(OrdinaryLineResult::Status s) {
  switch (s) {
    case OrdinaryLineResult::Status::Collinear: return "Collinear";
    case OrdinaryLineResult::Status::OrdinaryLine: return "OrdinaryLine";
    case OrdinaryLineResult::Status::Counterexample: return "Counterexample";
  }
  return "Unknown";
}

OrdinaryLineResult find_ordinary_line(std::span<const RationalPoint> points) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorKind::TooFewPoints, "need at least 3 points, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::InvalidInput, "duplicate point " + points[i].to_string(), pair_witness(i, j));
      }
    }
  }

  bool all_collinear = true;
  for (std::size_t k = 2; k < n && all_collinear; ++k) all_collinear = collinear(points[0], points[1], points[k]);
  if (all_collinear) return {OrdinaryLineResult::Status::Collinear, std::nullopt};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t on_line = 2;
      for (std::size_t k = 0; k < n && on_line == 2; ++k) {
        if (k != i && k != j && collinear(points[i], points[j], points[k])) ++on_line;
      }
      if (on_line == 2) return {OrdinaryLineResult::Status::OrdinaryLine, std::make_pair(i, j)};
    }
  }
  return {OrdinaryLineResult::Status::Counterexample, std::nullopt};
}

double saturating_add(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return std::numeric_limits<double>::infinity();
  return a + b;
}

double saturating_mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

namespace {

void validate_table(const DistanceTable& metric, std::size_t expected) {
  if (metric.size() != expected) {
    throw Error(ErrorKind::MalformedTable, "distance table has " + std::to_string(metric.size()) + " rows, expected " +
                                               std::to_string(expected));
  }
  for (std::size_t i = 0; i < metric.size(); ++i) {
    if (metric[i].size() != expected) {
      throw Error(ErrorKind::MalformedTable, "distance table row " + std::to_string(i) + " is not total");
    }
    for (double d : metric[i]) {
      if (std::isnan(d)) throw Error(ErrorKind::MalformedTable, "distance table contains NaN");
    }
  }
}

template <class SamePoint>
AxiomReport run_metric_checks(const DistanceTable& m, double rel_tol, SamePoint same) {
  const std::size_t n = m.size();
  AxiomReport report;
  report.structure = "metric table (" + std::to_string(n) + " points)";

  AxiomCheck m1{"M1"};
  for (std::size_t i = 0; i < n && m1.passed; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] < 0.0) {
        m1 = {"M1", false, pair_witness(i, j)};
        break;
      }
    }
  }
  report.checks.push_back(m1);

  AxiomCheck m2{"M2"};
  for (std::size_t i = 0; i < n && m2.passed; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!nearly_equal(m[i][j], m[j][i], rel_tol)) {
        m2 = {"M2", false, pair_witness(i, j)};
        break;
      }
    }
  }
  report.checks.push_back(m2);

  AxiomCheck m3{"M3"};
  for (std::size_t i = 0; i < n && m3.passed; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((m[i][j] == 0.0) != same(i, j)) {
        m3 = {"M3", false, pair_witness(i, j)};
        break;
      }
    }
  }
  report.checks.push_back(m3);

  AxiomCheck m4{"M4"};
  for (std::size_t x = 0; x < n && m4.passed; ++x) {
    for (std::size_t y = 0; y < n && m4.passed; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const double bound = saturating_add(m[x][y], m[y][z]);
        if (m[x][z] > bound && !nearly_equal(m[x][z], bound, rel_tol)) {
          m4 = {"M4", false, "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")"};
          break;
        }
      }
    }
  }
  report.checks.push_back(m4);
  return report;
}

}  // namespace

AxiomReport check_metric_axioms(std::span<const RationalPoint> points, const DistanceTable& metric, double rel_tol) {
  validate_table(metric, points.size());
  return run_metric_checks(metric, rel_tol, [&](std::size_t i, std::size_t j) { return points[i] == points[j]; });
}

AxiomReport check_metric_axioms(const DistanceTable& metric, double rel_tol) {
  validate_table(metric, metric.size());
  return run_metric_checks(metric, rel_tol, [](std::size_t i, std::size_t j) { return i == j; });
}

DistanceTable euclidean_distance_table(std::span<const RationalPoint> points) {
  const std::size_t n = points.size();
  DistanceTable t(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RationalNumber dx = points[i].x - points[j].x;
      const RationalNumber dy = points[i].y - points[j].y;
      t[i][j] = std::sqrt((dx * dx + dy * dy).to_double());
    }
  }
  return t;
}

double metric_diameter(const DistanceTable& metric) {
  validate_table(metric, metric.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < metric.size(); ++i) {
    for (std::size_t j = 0; j < metric.size(); ++j) {
      if (i != j) sup = std::max(sup, metric[i][j]);
    }
  }
  return sup;
}

BigInt pointset_cardinality(std::uint64_t subfield_order, std::uint32_t dim) {
  if (subfield_order < 2) throw Error(ErrorKind::InvalidInput, "subfield order must be >= 2");
  if (dim < 1) throw Error(ErrorKind::InvalidInput, "dimension must be >= 1");
  if (static_cast<double>(dim) * std::log2(static_cast<double>(subfield_order)) > kMaxCountBits) {
    throw Error(ErrorKind::Overflow, "cardinality exceeds 4096-bit exact-integer capacity");
  }
  return boost::multiprecision::pow(BigInt(subfield_order), dim);
}

double subspace_diameter(double d0, std::uint64_t field_order) {
  if (!(d0 > 0.0) || !std::isfinite(d0)) throw Error(ErrorKind::InvalidInput, "d0 must be positive and finite");
  if (field_order < 2) throw Error(ErrorKind::InvalidInput, "field order must be >= 2");
  return d0 * static_cast<double>(field_order - 1);
}

}  // namespace fgeo

#pragma once

#include "fgeo/finite_field.hpp"
#include "fgeo/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fgeo {

inline constexpr std::uint64_t kMaxPointScan = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxLineEnumeration = std::uint64_t{1} << 16;

struct AffinePoint {
  std::vector<FieldElement> coords;

  std::string to_string() const;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// AG(dim, q). Points are ordered lexicographically with the first
/// coordinate most significant and each coordinate in field-index order.
class AffineSpace {
 public:
  AffineSpace(FieldRef field, std::uint32_t dim);

  const FieldRef& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  /// q^dim, or an Overflow error if it does not fit in 64 bits.
  std::uint64_t point_count() const;

  AffinePoint point(std::uint64_t index) const;
  std::uint64_t index_of(const AffinePoint& pt) const;
  AffinePoint origin() const;
  std::vector<AffinePoint> enumerate_points() const;

 private:
  FieldRef field_;
  std::uint32_t dim_;
};

/// {base + t * direction : t in F}, direction scaled so its first nonzero
/// coordinate is 1 and base the smallest point on the line.
struct Line {
  AffinePoint base;
  AffinePoint direction;
  std::vector<AffinePoint> points;

  bool contains(const AffinePoint& pt) const;
  friend bool operator==(const Line& a, const Line& b) { return a.points == b.points; }
};

/// Sum of squared coordinate differences, evaluated in the field.
FieldElement squared_distance(const AffinePoint& a, const AffinePoint& b);

/// First pair (x, y), x before y in point order, with x != y and d^2 = 0.
std::optional<std::pair<AffinePoint, AffinePoint>> find_degenerate_pair(const AffineSpace& space);

std::vector<Line> enumerate_lines(const AffineSpace& space);

class IncidenceStructure {
 public:
  /// Lines are sets of indices into `labels`. Throws MalformedStructure if a
  /// line references an undeclared point, repeats a point or has < 2 points.
  IncidenceStructure(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> lines);

  std::size_t point_count() const noexcept { return labels_.size(); }
  std::size_t line_count() const noexcept { return lines_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<std::size_t>>& lines() const noexcept { return lines_; }

  bool incident(std::size_t point, std::size_t line) const;
  /// Number of lines through each point.
  std::vector<std::size_t> point_degrees() const;
  std::vector<std::size_t> line_sizes() const;
  /// Lines holding exactly two points.
  std::size_t ordinary_line_count() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> lines_;
};

IncidenceStructure incidence_structure(const AffineSpace& space);

struct HesseResult {
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// True iff every pair of distinct points lies on a common line with at
/// least three points.
HesseResult check_hesse_property(const IncidenceStructure& s);

struct RationalPoint {
  RationalNumber x;
  RationalNumber y;

  std::string to_string() const;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

bool collinear(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c);

struct OrdinaryLineResult {
  enum class Status { Collinear, OrdinaryLine, Counterexample };
  Status status = Status::Collinear;
  /// Indices of the two points spanning the ordinary line.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

std::string_view to_string(OrdinaryLineResult::Status s);

/// Exhaustive O(n^3) scan for a line through exactly two of the points.
OrdinaryLineResult find_ordinary_line(std::span<const RationalPoint> points);

/// Extended non-negative reals: infinity is +inf, with inf * 0 = 0.
double saturating_add(double a, double b);
double saturating_mul(double a, double b);

using DistanceTable = std::vector<std::vector<double>>;

/// M1 non-negativity, M2 symmetry, M3 identity of indiscernibles,
/// M4 triangle inequality. Points are identical iff their coordinates agree.
AxiomReport check_metric_axioms(std::span<const RationalPoint> points, const DistanceTable& metric,
                                double rel_tol = 1e-12);
/// Same checks with every table index treated as a distinct point.
AxiomReport check_metric_axioms(const DistanceTable& metric, double rel_tol = 1e-12);

DistanceTable euclidean_distance_table(std::span<const RationalPoint> points);

/// Least upper bound of d(x, y) over distinct points.
double metric_diameter(const DistanceTable& metric);

BigInt pointset_cardinality(std::uint64_t subfield_order, std::uint32_t dim);

/// d0 * (field_order - 1): a line of field_order equally spaced points.
double subspace_diameter(double d0, std::uint64_t field_order);

}  // namespace fgeo

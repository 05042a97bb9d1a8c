// The Dynkin curve as a typed incidence structure: projective lines with one
// line per hat-diagram node, intersection points, the symmetry action of the
// folding group, cell partitions of lines, and orbit censuses.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "subreg/root_system.hpp"

namespace subreg {

/// One projective line of the curve: its type (a base simple root, 1-based)
/// and its index 1..length_class(type) within that type.
struct Line {
  int type = 0;
  int index = 0;
  friend bool operator==(const Line&, const Line&) = default;
};

struct DynkinCurve {
  TypeLabel type;
  int rank = 0;
  std::vector<Line> lines;                  // line id = position
  std::vector<std::array<int, 2>> points;   // point id -> incident line ids
  std::vector<std::vector<int>> line_points;  // line id -> sorted point ids
  std::vector<int> hat_node;                // line id -> hat base node (1-based)

  int line_count_of_type(int alpha) const;
  int line_id(int alpha, int index) const;
};

/// For simply-laced systems the curve is the diagram dual to the Dynkin
/// diagram; otherwise it is the curve of the associated simply-laced system
/// with line types relabelled along the folding.
DynkinCurve build_curve(TypeLabel type, int rank);

/// Permutations of lines (and induced permutations of points) for each
/// generator of the folding symmetry group; no generators when simply laced.
struct SymmetryAction {
  int group_order = 1;
  std::vector<std::vector<int>> line_perm;
  std::vector<std::vector<int>> point_perm;
};

SymmetryAction symmetry_action(const DynkinCurve& curve);

enum class CellKind { Point, OpenPart };

/// A cell of the partition of one line: an intersection point (id into
/// curve.points) or the open complement of all points on a line (id into
/// curve.lines).
struct Cell {
  CellKind kind = CellKind::Point;
  int id = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend bool operator<(const Cell& a, const Cell& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.id < b.id;
  }
};

/// The partition of one line: its incident points plus one open part.
std::vector<Cell> upsilon_partition(const DynkinCurve& curve, int line_id);

/// Whether the subregular orbit meets u_alpha cap u_beta (alpha != beta),
/// which happens exactly when <alpha, beta> != 0.
bool intersection_nonempty(const RootSystem& rs, int alpha, int beta);

struct LineVerdict {
  Line line;
  bool finite = false;
  int coefficient = 0;  // of the orbit of alpha in the hat highest root
};

/// Orbit census of the centralizer action on the curve.  For finite lines the
/// cells are the connected-centralizer orbits; cell_orbits groups the cells of
/// finite lines under the symmetry action (full-centralizer orbits).  total is
/// set iff every line is finite, and then counts cell orbits with points
/// counted once.
struct OrbitCensus {
  TypeLabel type;
  int rank = 0;
  std::vector<LineVerdict> lines;  // per line id
  std::vector<std::vector<Cell>> cell_orbits;
  std::optional<long long> total;
};

OrbitCensus fibre_orbit_census(TypeLabel type, int rank);

/// Number of full-centralizer orbits meeting the union of type-alpha lines,
/// or nullopt (infinite) when those lines carry infinitely many orbits.
std::optional<long long> b_orbit_count(TypeLabel type, int rank, int alpha);

}  // namespace subreg

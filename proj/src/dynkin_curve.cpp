#include "subreg/dynkin_curve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace subreg {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Union-find grouping of 0..n-1 under a set of permutations.
std::vector<std::vector<int>> group_under(
    int n, const std::vector<std::vector<int>>& perms) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : perms)
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(perm[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace

int DynkinCurve::line_count_of_type(int alpha) const {
  int count = 0;
  for (const Line& l : lines) count += (l.type == alpha);
  return count;
}

int DynkinCurve::line_id(int alpha, int index) const {
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].type == alpha && lines[i].index == index)
      return static_cast<int>(i);
  throw std::invalid_argument("no such line");
}

DynkinCurve build_curve(TypeLabel t, int r) {
  FoldingData fd = folding_or_identity(t, r);
  DynkinCurve curve;
  curve.type = t;
  curve.rank = r;

  // One line per hat node; index within a type follows the ascending Bourbaki
  // order of the orbit.
  std::vector<int> line_of_node(fd.hat.rank() + 1, -1);
  for (std::size_t k = 0; k < fd.orbits.size(); ++k) {
    int idx = 1;
    for (int node : fd.orbits[k]) {
      line_of_node[node] = static_cast<int>(curve.lines.size());
      curve.lines.push_back({fd.orbit_to_root[k], idx++});
      curve.hat_node.push_back(node);
    }
  }

  // Points are the edges of the hat diagram.
  curve.line_points.assign(curve.lines.size(), {});
  for (int i = 1; i <= fd.hat.rank(); ++i)
    for (int j = i + 1; j <= fd.hat.rank(); ++j) {
      if (!fd.hat.adjacent(i, j)) continue;
      int id = static_cast<int>(curve.points.size());
      int a = line_of_node[i], b = line_of_node[j];
      curve.points.push_back({std::min(a, b), std::max(a, b)});
      curve.line_points[a].push_back(id);
      curve.line_points[b].push_back(id);
    }
  return curve;
}

SymmetryAction symmetry_action(const DynkinCurve& curve) {
  FoldingData fd = folding_or_identity(curve.type, curve.rank);
  SymmetryAction action;
  action.group_order = fd.group_order;

  std::vector<int> line_of_node(fd.hat.rank() + 1, -1);
  for (std::size_t l = 0; l < curve.lines.size(); ++l)
    line_of_node[curve.hat_node[l]] = static_cast<int>(l);

  std::map<std::array<int, 2>, int> point_id;
  for (std::size_t p = 0; p < curve.points.size(); ++p)
    point_id[curve.points[p]] = static_cast<int>(p);

  for (const auto& gen : fd.generators) {
    std::vector<int> lp(curve.lines.size());
    for (std::size_t l = 0; l < curve.lines.size(); ++l)
      lp[l] = line_of_node[gen[curve.hat_node[l] - 1]];
    std::vector<int> pp(curve.points.size());
    for (std::size_t p = 0; p < curve.points.size(); ++p) {
      int a = lp[curve.points[p][0]], b = lp[curve.points[p][1]];
      pp[p] = point_id.at({std::min(a, b), std::max(a, b)});
    }
    action.line_perm.push_back(std::move(lp));
    action.point_perm.push_back(std::move(pp));
  }
  return action;
}

std::vector<Cell> upsilon_partition(const DynkinCurve& curve, int line_id) {
  require(line_id >= 0 && line_id < static_cast<int>(curve.lines.size()),
          "line id out of range");
  std::vector<Cell> cells;
  for (int p : curve.line_points[line_id]) cells.push_back({CellKind::Point, p});
  cells.push_back({CellKind::OpenPart, line_id});
  return cells;
}

bool intersection_nonempty(const RootSystem& rs, int alpha, int beta) {
  require(alpha != beta, "alpha and beta must be distinct simple roots");
  return rs.cartan_pairing(alpha, beta) != 0;
}

OrbitCensus fibre_orbit_census(TypeLabel t, int r) {
  DynkinCurve curve = build_curve(t, r);
  SymmetryAction action = symmetry_action(curve);

  OrbitCensus census;
  census.type = t;
  census.rank = r;

  std::vector<int> coeff_of_type(r + 1, 0);
  for (int a = 1; a <= r; ++a) coeff_of_type[a] = folded_coefficient(t, r, a);

  bool all_finite = true;
  for (const Line& line : curve.lines) {
    LineVerdict v;
    v.line = line;
    v.coefficient = coeff_of_type[line.type];
    v.finite = (v.coefficient == 1);
    all_finite = all_finite && v.finite;
    census.lines.push_back(v);
  }

  // Cell universe: points on at least one finite line, plus the open part of
  // every finite line.  Cells are numbered points first, then opens.
  const int n_points = static_cast<int>(curve.points.size());
  const int n_lines = static_cast<int>(curve.lines.size());
  auto cell_of = [&](int raw) {
    return raw < n_points ? Cell{CellKind::Point, raw}
                          : Cell{CellKind::OpenPart, raw - n_points};
  };
  std::vector<bool> in_universe(n_points + n_lines, false);
  for (int l = 0; l < n_lines; ++l) {
    if (!census.lines[l].finite) continue;
    in_universe[n_points + l] = true;
    for (int p : curve.line_points[l]) in_universe[p] = true;
  }

  // The symmetry action permutes the universe (it preserves line types and
  // hence verdicts); group cells under it.
  std::vector<std::vector<int>> perms;
  for (std::size_t g = 0; g < action.line_perm.size(); ++g) {
    std::vector<int> perm(n_points + n_lines);
    for (int p = 0; p < n_points; ++p) perm[p] = action.point_perm[g][p];
    for (int l = 0; l < n_lines; ++l)
      perm[n_points + l] = n_points + action.line_perm[g][l];
    perms.push_back(std::move(perm));
  }
  for (const auto& klass : group_under(n_points + n_lines, perms)) {
    if (!in_universe[klass.front()]) continue;
    std::vector<Cell> orbit;
    for (int raw : klass) orbit.push_back(cell_of(raw));
    census.cell_orbits.push_back(std::move(orbit));
  }

  if (all_finite)
    census.total = static_cast<long long>(census.cell_orbits.size());
  return census;
}

std::optional<long long> b_orbit_count(TypeLabel t, int r, int alpha) {
  RootSystem rs = build_root_system(t, r);
  require(alpha >= 1 && alpha <= r, "simple root index out of range");
  if (folded_coefficient(t, r, alpha) != 1) return std::nullopt;

  OrbitCensus census = fibre_orbit_census(t, r);
  DynkinCurve curve = build_curve(t, r);
  auto touches_type = [&](const Cell& c) {
    if (c.kind == CellKind::OpenPart) return curve.lines[c.id].type == alpha;
    return curve.lines[curve.points[c.id][0]].type == alpha ||
           curve.lines[curve.points[c.id][1]].type == alpha;
  };
  long long count = 0;
  for (const auto& orbit : census.cell_orbits)
    count += std::any_of(orbit.begin(), orbit.end(), touches_type);
  return count;
}

}  // namespace subreg

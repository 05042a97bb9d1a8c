// Irreducible root systems over a Bourbaki-labelled base, and the folding of
// non-simply-laced diagrams onto their associated simply-laced ones.
//
// Roots are integer coefficient vectors over the simple roots; all pairings
// come from the Cartan matrix, so no Euclidean embedding is ever needed.
#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subreg {

enum class TypeLabel : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char to_char(TypeLabel t);
TypeLabel type_label_from_char(char c);

/// A root, as its coefficient vector over the simple roots.
using Root = Eigen::VectorXi;

/// A finite irreducible root system with the Bourbaki Planches labelling.
/// Simple roots are addressed 1-based throughout the public surface.
class RootSystem {
public:
  TypeLabel type() const { return type_; }
  int rank() const { return rank_; }
  bool simply_laced() const { return simply_laced_; }

  /// Cartan pairing <alpha_i, alpha_j> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j).
  int cartan_pairing(int i, int j) const;
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  /// Positive roots sorted by (height, lexicographic coefficients).
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Root& highest_root() const { return highest_root_; }

  /// |alpha_i|^2 / |alpha_s|^2 for a fixed short root alpha_s; one of 1, 2, 3.
  int length_class(int i) const;

  Root simple_root(int i) const;
  bool is_positive_root(const Root& r) const;
  bool is_root(const Root& r) const;

  /// <gamma, alpha_j^vee>, linear in gamma.
  int pairing_with_simple(const Root& gamma, int j) const;

  /// Whether nodes i != j are joined in the Dynkin diagram.
  bool adjacent(int i, int j) const { return i != j && cartan_pairing(i, j) != 0; }

  std::string name() const;

private:
  friend RootSystem build_root_system_unchecked(TypeLabel, int);

  TypeLabel type_ = TypeLabel::A;
  int rank_ = 0;
  bool simply_laced_ = true;
  Eigen::MatrixXi cartan_;
  std::vector<Root> positive_roots_;
  Root highest_root_;
  std::vector<int> length_class_;
  std::map<std::vector<int>, int> root_index_;
};

/// Builds the root system for a valid irreducible (type, rank): A_r (r>=1),
/// B_r (r>=2), C_r (r>=2), D_r (r>=4), E_6..E_8, F_4, G_2.  Positive roots are
/// generated from the base by the root-string rule, not hardcoded.
RootSystem build_root_system(TypeLabel type, int rank);

bool valid_type_rank(TypeLabel type, int rank);
std::vector<std::pair<TypeLabel, int>> all_types_up_to_rank(int max_rank);

/// Accessor for the i-th coefficient of a root (1-based); the root must
/// belong to the system (either sign).
int coefficient(const RootSystem& rs, const Root& root, int i);

int cartan_pairing(const RootSystem& rs, int i, int j);

/// Folding data: the associated simply-laced system, the symmetry-group orbit
/// partition of its base, and the orbit -> simple-root map.
///
///   base   B_r      C_r      F_4   G_2
///   hat    A_{2r-1} D_{r+1}  E_6   D_4
///   group  S_2      S_2      S_2   S_3
struct FoldingData {
  TypeLabel base_type;
  int base_rank = 0;
  RootSystem hat;
  /// One orbit per base simple root; orbits[k] (sorted hat-node indices,
  /// 1-based) maps to orbit_to_root[k].
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_to_root;
  /// Generating permutations of the hat base (1-based images).
  std::vector<std::vector<int>> generators;
  int group_order = 1;

  /// Index into `orbits` of the orbit mapped to base root alpha.
  int orbit_of_root(int alpha) const;
};

/// Folding of a non-simply-laced system per the table above; throws
/// std::domain_error for simply-laced input.
FoldingData fold(TypeLabel type, int rank);

/// Identity presentation for simply-laced systems, folding otherwise; used by
/// the curve construction.
FoldingData folding_or_identity(TypeLabel type, int rank);

/// Coefficient in the highest root of the associated simply-laced system of
/// (any representative of) the orbit corresponding to alpha; equals the plain
/// highest-root coefficient when the system is already simply laced.  The
/// coefficient is checked to be constant across the orbit.
int folded_coefficient(TypeLabel type, int rank, int alpha);

}  // namespace subreg

#include "subreg/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subreg {
namespace {

std::vector<int> to_std(const Root& r) {
  return std::vector<int>(r.data(), r.data() + r.size());
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Cartan matrix per the Bourbaki Planches labelling, with the convention
// C(i,j) = 2(alpha_i, alpha_j) / (alpha_j, alpha_j); for G_2 this puts -3 at
// (2,1) since alpha_1 is the short root.
Eigen::MatrixXi cartan_matrix(TypeLabel t, int r) {
  Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(r, r);
  auto edge = [&](int i, int j) {  // 1-based simply-laced bond
    c(i - 1, j - 1) = -1;
    c(j - 1, i - 1) = -1;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) edge(i, i + 1);
  };
  switch (t) {
    case TypeLabel::A:
      chain(1, r);
      break;
    case TypeLabel::B:  // alpha_r short
      chain(1, r);
      c(r - 2, r - 1) = -2;
      break;
    case TypeLabel::C:  // alpha_r long
      chain(1, r);
      c(r - 1, r - 2) = -2;
      break;
    case TypeLabel::D:
      chain(1, r - 1);
      edge(r - 2, r);
      break;
    case TypeLabel::E:
      edge(1, 3);
      chain(3, r);
      edge(2, 4);
      break;
    case TypeLabel::F:  // alpha_1, alpha_2 long
      chain(1, 4);
      c(1, 2) = -2;
      break;
    case TypeLabel::G:  // alpha_1 short
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
  }
  return c;
}

std::vector<int> length_classes(const Eigen::MatrixXi& cartan) {
  const int r = static_cast<int>(cartan.rows());
  // Propagate squared-length ratios |a_i|^2/|a_j|^2 = C(i,j)/C(j,i) along the
  // (connected) diagram, then normalize so the short roots get 1.
  std::vector<Rational> cls(r);
  std::vector<bool> seen(r, false);
  cls[0] = Rational(1);
  seen[0] = true;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < r; ++j) {
      if (seen[j] || cartan(i, j) == 0 || i == j) continue;
      cls[j] = cls[i] * Rational(cartan(j, i)) / Rational(cartan(i, j));
      seen[j] = true;
      stack.push_back(j);
    }
  }
  Rational shortest = cls[0];
  for (const auto& v : cls) shortest = std::min(shortest, v);
  std::vector<int> out(r);
  for (int i = 0; i < r; ++i) {
    Rational ratio = cls[i] / shortest;
    if (!ratio.is_integer())
      throw std::logic_error("length_classes: non-integral ratio");
    out[i] = static_cast<int>(ratio.numerator().convert_to<long long>());
  }
  return out;
}

}  // namespace

char to_char(TypeLabel t) { return static_cast<char>(t); }

TypeLabel type_label_from_char(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  require(c >= 'A' && c <= 'G', std::string("unknown type label '") + c + "'");
  return static_cast<TypeLabel>(c);
}

bool valid_type_rank(TypeLabel t, int r) {
  switch (t) {
    case TypeLabel::A: return r >= 1;
    case TypeLabel::B: return r >= 2;
    case TypeLabel::C: return r >= 2;
    case TypeLabel::D: return r >= 4;
    case TypeLabel::E: return r >= 6 && r <= 8;
    case TypeLabel::F: return r == 4;
    case TypeLabel::G: return r == 2;
  }
  return false;
}

std::vector<std::pair<TypeLabel, int>> all_types_up_to_rank(int max_rank) {
  std::vector<std::pair<TypeLabel, int>> out;
  for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D,
                      TypeLabel::E, TypeLabel::F, TypeLabel::G})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_type_rank(t, r)) out.emplace_back(t, r);
  return out;
}

// Builds the system without the public rank restrictions (the folding of C_2
// needs the hat system D_3, which build_root_system rejects).
RootSystem build_root_system_unchecked(TypeLabel t, int r) {
  RootSystem rs;
  rs.type_ = t;
  rs.rank_ = r;
  rs.cartan_ = cartan_matrix(t, r);
  rs.length_class_ = length_classes(rs.cartan_);
  rs.simply_laced_ =
      *std::max_element(rs.length_class_.begin(), rs.length_class_.end()) == 1;

  // Positive roots, generated height by height with the root-string rule:
  // gamma + alpha_j is a root iff p - <gamma, alpha_j^vee> >= 1, where p is
  // the number of backward steps gamma - k alpha_j staying inside the system.
  std::set<std::vector<int>> known;
  std::vector<Root> level;
  for (int i = 0; i < r; ++i) {
    Root a = Root::Zero(r);
    a(i) = 1;
    level.push_back(a);
    known.insert(to_std(a));
  }
  std::vector<Root> all = level;
  while (!level.empty()) {
    std::vector<Root> next;
    for (const Root& gamma : level) {
      for (int j = 1; j <= r; ++j) {
        Root candidate = gamma;
        candidate(j - 1) += 1;
        if (known.count(to_std(candidate))) continue;
        int p = 0;
        Root back = gamma;
        back(j - 1) -= 1;
        while (back(j - 1) >= 0 && known.count(to_std(back))) {
          ++p;
          back(j - 1) -= 1;
        }
        int pairing = 0;
        for (int i = 0; i < r; ++i) pairing += gamma(i) * rs.cartan_(i, j - 1);
        if (p - pairing >= 1) {
          known.insert(to_std(candidate));
          next.push_back(candidate);
          all.push_back(candidate);
        }
      }
    }
    level = std::move(next);
  }

  std::sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
    int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });
  rs.positive_roots_ = std::move(all);
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k)
    rs.root_index_[to_std(rs.positive_roots_[k])] = static_cast<int>(k);
  rs.highest_root_ = rs.positive_roots_.back();
  return rs;
}

RootSystem build_root_system(TypeLabel t, int r) {
  require(valid_type_rank(t, r),
          "invalid irreducible type " + std::string(1, to_char(t)) + "_" +
              std::to_string(r));
  return build_root_system_unchecked(t, r);
}

int RootSystem::cartan_pairing(int i, int j) const {
  require(i >= 1 && i <= rank_ && j >= 1 && j <= rank_,
          "simple root index out of range");
  return cartan_(i - 1, j - 1);
}

int RootSystem::length_class(int i) const {
  require(i >= 1 && i <= rank_, "simple root index out of range");
  return length_class_[i - 1];
}

Root RootSystem::simple_root(int i) const {
  require(i >= 1 && i <= rank_, "simple root index out of range");
  Root a = Root::Zero(rank_);
  a(i - 1) = 1;
  return a;
}

bool RootSystem::is_positive_root(const Root& r) const {
  return r.size() == rank_ && root_index_.count(to_std(r)) > 0;
}

bool RootSystem::is_root(const Root& r) const {
  return is_positive_root(r) || is_positive_root(Root(-r));
}

int RootSystem::pairing_with_simple(const Root& gamma, int j) const {
  require(j >= 1 && j <= rank_, "simple root index out of range");
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += gamma(i) * cartan_(i, j - 1);
  return s;
}

std::string RootSystem::name() const {
  return std::string(1, to_char(type_)) + "_" + std::to_string(rank_);
}

int coefficient(const RootSystem& rs, const Root& root, int i) {
  require(rs.is_root(root), "not a root of " + rs.name());
  require(i >= 1 && i <= rs.rank(), "simple root index out of range");
  return root(i - 1);
}

int cartan_pairing(const RootSystem& rs, int i, int j) {
  return rs.cartan_pairing(i, j);
}

int FoldingData::orbit_of_root(int alpha) const {
  for (std::size_t k = 0; k < orbit_to_root.size(); ++k)
    if (orbit_to_root[k] == alpha) return static_cast<int>(k);
  throw std::invalid_argument("no orbit maps to alpha_" + std::to_string(alpha));
}

namespace {

// Orbits of the generated permutation group on {1..n}, each sorted.
std::vector<std::vector<int>> permutation_orbits(
    int n, const std::vector<std::vector<int>>& generators) {
  std::vector<int> owner(n + 1, -1);
  std::vector<std::vector<int>> orbits;
  for (int start = 1; start <= n; ++start) {
    if (owner[start] >= 0) continue;
    std::vector<int> orbit{start};
    owner[start] = static_cast<int>(orbits.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : generators) {
        int image = g[orbit[k] - 1];
        if (owner[image] < 0) {
          owner[image] = owner[start];
          orbit.push_back(image);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

// Assigns orbits to base simple roots: orbit sizes must equal length classes
// and the quotient of the hat diagram must be carried isomorphically onto the
// base diagram.  Backtracking over at most rank <= 8 nodes.
std::vector<int> assign_orbits(const RootSystem& base, const RootSystem& hat,
                               const std::vector<std::vector<int>>& orbits) {
  const int k = static_cast<int>(orbits.size());
  require(k == base.rank(), "folding: orbit count mismatch");
  // quotient adjacency
  std::vector<std::vector<bool>> qadj(k, std::vector<bool>(k, false));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      bool touch = false;
      for (int u : orbits[a])
        for (int v : orbits[b]) touch = touch || hat.adjacent(u, v);
      qadj[a][b] = qadj[b][a] = touch;
    }

  std::vector<int> image(k, 0);  // orbit -> base root, 1-based
  std::vector<bool> used(base.rank() + 1, false);
  auto compatible = [&](int orbit, int root) {
    if (static_cast<int>(orbits[orbit].size()) != base.length_class(root))
      return false;
    for (int prev = 0; prev < orbit; ++prev)
      if (qadj[orbit][prev] != base.adjacent(root, image[prev])) return false;
    return true;
  };
  std::vector<int> stack;
  int orbit = 0;
  int candidate = 1;
  while (orbit < k) {
    bool placed = false;
    for (int root = candidate; root <= base.rank(); ++root) {
      if (used[root] || !compatible(orbit, root)) continue;
      image[orbit] = root;
      used[root] = true;
      stack.push_back(root);
      ++orbit;
      candidate = 1;
      placed = true;
      break;
    }
    if (!placed) {
      if (stack.empty()) throw std::logic_error("folding: no quotient-graph isomorphism");
      --orbit;
      candidate = stack.back() + 1;
      used[stack.back()] = false;
      stack.pop_back();
    }
  }
  return image;
}

}  // namespace

FoldingData fold(TypeLabel t, int r) {
  require(valid_type_rank(t, r),
          "invalid irreducible type " + std::string(1, to_char(t)) + "_" +
              std::to_string(r));
  RootSystem base = build_root_system(t, r);
  if (base.simply_laced())
    throw std::domain_error("no folding: " + base.name() + " is simply laced");

  FoldingData fd;
  fd.base_type = t;
  fd.base_rank = r;
  switch (t) {
    case TypeLabel::B: {
      fd.hat = build_root_system_unchecked(TypeLabel::A, 2 * r - 1);
      std::vector<int> flip(2 * r - 1);
      for (int i = 1; i <= 2 * r - 1; ++i) flip[i - 1] = 2 * r - i;
      fd.generators = {flip};
      fd.group_order = 2;
      break;
    }
    case TypeLabel::C: {
      fd.hat = build_root_system_unchecked(TypeLabel::D, r + 1);
      std::vector<int> swap_ends(r + 1);
      std::iota(swap_ends.begin(), swap_ends.end(), 1);
      std::swap(swap_ends[r - 1], swap_ends[r]);
      fd.generators = {swap_ends};
      fd.group_order = 2;
      break;
    }
    case TypeLabel::F: {
      fd.hat = build_root_system_unchecked(TypeLabel::E, 6);
      std::vector<int> flip{6, 2, 5, 4, 3, 1};
      fd.generators = {flip};
      fd.group_order = 2;
      break;
    }
    case TypeLabel::G: {
      fd.hat = build_root_system_unchecked(TypeLabel::D, 4);
      std::vector<int> cycle{3, 2, 4, 1};  // 1 -> 3 -> 4 -> 1
      std::vector<int> swap34{1, 2, 4, 3};
      fd.generators = {cycle, swap34};
      fd.group_order = 6;
      break;
    }
    default:
      throw std::logic_error("fold: unreachable");
  }

  auto orbits = permutation_orbits(fd.hat.rank(), fd.generators);
  auto image = assign_orbits(base, fd.hat, orbits);
  // present orbits in base-root order
  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return image[a] < image[b]; });
  for (std::size_t idx : order) {
    fd.orbits.push_back(orbits[idx]);
    fd.orbit_to_root.push_back(image[idx]);
  }
  return fd;
}

FoldingData folding_or_identity(TypeLabel t, int r) {
  RootSystem base = build_root_system(t, r);
  if (!base.simply_laced()) return fold(t, r);
  FoldingData fd;
  fd.base_type = t;
  fd.base_rank = r;
  fd.hat = std::move(base);
  for (int i = 1; i <= r; ++i) {
    fd.orbits.push_back({i});
    fd.orbit_to_root.push_back(i);
  }
  fd.group_order = 1;
  return fd;
}

int folded_coefficient(TypeLabel t, int r, int alpha) {
  require(valid_type_rank(t, r), "invalid irreducible type");
  FoldingData fd = folding_or_identity(t, r);
  require(alpha >= 1 && alpha <= r, "simple root index out of range");
  const auto& orbit = fd.orbits[fd.orbit_of_root(alpha)];
  const Root& hat_rho = fd.hat.highest_root();
  int value = hat_rho(orbit.front() - 1);
  for (int node : orbit)
    if (hat_rho(node - 1) != value)
      throw std::logic_error("folded_coefficient: not constant on the orbit");
  return value;
}

}  // namespace subreg

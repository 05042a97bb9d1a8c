// Finiteness classifications: the coefficient-1 criterion for the fibre and
// Richardson sides, and the truth table for Borel orbits on the subregular
// orbital varieties u_alpha, with verifiable provenance for every infinite
// entry.
#pragma once

#include <optional>
#include <vector>

#include "subreg/root_system.hpp"

namespace subreg {

/// Verdict for the connected-centralizer action on the lines of one type.
struct FibreVerdict {
  bool finite = false;
  int reason = 0;  // the highest-root coefficient used; finite iff reason == 1
};

FibreVerdict fibre_finite(TypeLabel type, int rank, int alpha);

/// Same criterion on the Richardson side (B acting on O cap u_alpha).
bool richardson_finite(TypeLabel type, int rank, int alpha);

/// How an infinite orbital-variety verdict is backed.
enum class InfiniteEvidence {
  kIdealWitness,         // a Borel-stable ideal n subset u_alpha with dim B/N < dim n/[n,n]
  kRichardsonCriterion,  // already infinitely many orbits on O cap u_alpha
  kMinimalParabolic,     // P_alpha itself has infinitely many orbits on u_alpha
};

struct OrbitalVerdict {
  bool finite = false;
  std::optional<std::vector<int>> witness_generators;  // set for kIdealWitness
  std::optional<InfiniteEvidence> evidence;            // set iff !finite
};

/// Finiteness of the B-action on the orbital variety u_alpha.  Finite exactly
/// for: A_r (r <= 4); A_5 with alpha in {1,3,5}; B_2; B_3 with alpha = 2;
/// C_2; C_3 with alpha in {1,3}; G_2 with alpha = 2.
OrbitalVerdict orbital_variety_finite(TypeLabel type, int rank, int alpha);

/// B acts on the full nilradical u with finitely many orbits iff the type is
/// A_r (r <= 4) or B_2 (= C_2).
bool borel_full_nilradical_finite(TypeLabel type, int rank);

/// P_alpha acts on u_alpha with finitely many orbits iff the type is A_r
/// (r <= 5), B_r (r <= 3), C_r (r <= 3), D_4 or G_2.
bool parabolic_nilradical_finite(TypeLabel type, int rank);

/// Orbit totals determined by external enumeration over an algebraically
/// closed field; recorded for reference only, never recomputed or asserted
/// here (the required algorithm is out of scope).
struct RecordedOrbitCount {
  TypeLabel type;
  int rank;
  int alpha;
  int b_orbits_on_u_alpha;
};

inline constexpr RecordedOrbitCount kRecordedOrbitCounts[] = {
    {TypeLabel::B, 3, 2, 23},  {TypeLabel::C, 3, 1, 24}, {TypeLabel::C, 3, 3, 21},
    {TypeLabel::G, 2, 2, 8},   {TypeLabel::A, 5, 1, 185}, {TypeLabel::A, 5, 3, 200},
};

std::optional<int> recorded_orbit_count(TypeLabel type, int rank, int alpha);

}  // namespace subreg

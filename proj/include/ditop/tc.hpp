#pragma once

#include <optional>
#include <vector>

#include "ditop/maps.hpp"

namespace ditop {

/// One patch of the reachable-pair space with a class-valued section.
struct Patch {
  std::vector<int> pairSlots;    // indices into the table's entries, sorted
  std::vector<int> assignment;   // parallel: chosen class id per pair
};

struct SectionCover {
  int k = 0;
  std::vector<Patch> patches;
};

/// Section continuity discretized as single-edge naturality: for an edge
/// tau: a->b and a vertex x with (x,a),(x,b) in the patch,
/// s(x,a).[tau] == s(x,b); mirrored for source extensions.
bool patch_consistent(const ClassTable& table, const Patch& patch);

struct DtcResult {
  bool found = false;
  int k = 0;
  SectionCover cover;
};

/// Least k <= max_k admitting a disjoint cover of all reachable pairs by
/// consistent patches; exact backtracking with patch-label symmetry
/// breaking; the witness cover is the search-order least one.
DtcResult directed_tc(const ClassTable& table, int max_k);

/// Equal dtc values for two complexes related by a validated dhe certificate.
bool invariance_check(Analysis& anX, Analysis& anY, const AdmissibleMap& f,
                      const DheResult& cert, int max_k);

}  // namespace ditop

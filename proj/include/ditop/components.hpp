#pragma once

#include <string>
#include <vector>

#include "ditop/maps.hpp"

namespace ditop {

/// Localization verdict for one edge, per the two-sided bijection criterion:
/// target use needs every past context to act bijectively on classes,
/// source use every future context.
struct EdgeVerdict {
  int edge = -1;
  bool targetInessential = false;
  bool sourceInessential = false;
  bool inessential() const { return targetInessential && sourceInessential; }
};

/// Requires an exhaustive class table (refuses bounded tables).
std::vector<EdgeVerdict> classify_edges(const ClassTable& table);

/// A certified inessential endomap to be added to the localization.
struct CertifiedEndomap {
  AdmissibleMap map;
  Alpha alpha = Alpha::Neutral;
  WitnessChain chain;
};

struct PairComponentCategory {
  std::vector<std::pair<int, int>> pairs;     // reachable pairs, lexicographic
  std::vector<int> component;                 // pair slot -> component id (canonical)
  int objectCount = 0;
  std::vector<std::vector<int>> signatures;   // component -> sorted distinct class counts
  std::vector<int> memberCount;               // component -> number of member pairs
  std::vector<std::string> appliedEndomaps;
};

/// Union-find over reachable pairs: inessential edges merge in either
/// coordinate; registered endomaps merge (x,y) with (fx,fy). Uncertified
/// endomaps are refused.
PairComponentCategory pair_components(Analysis& an,
                                      const std::vector<CertifiedEndomap>& extra = {});

enum class CompareVerdict { Compatible, Distinguished };

/// Sound obstruction only: "distinguished" iff the object counts or the
/// multisets of component signatures differ.
CompareVerdict compare_categories(const PairComponentCategory& a,
                                  const PairComponentCategory& b);

struct ComponentMapResult {
  bool wellDefined = false;
  bool bijective = false;
  std::vector<int> objectMap;  // X component -> Y component
};

/// Object map of the pair component categories induced by a map carrying a
/// validated dhe certificate.
ComponentMapResult induced_component_map(const AdmissibleMap& f, const DheResult& cert,
                                         Analysis& anX, Analysis& anY,
                                         const PairComponentCategory& CX,
                                         const PairComponentCategory& CY);

/// DOT export: one node per component labeled "count x signature", edges for
/// essential extension generators between components; stable ordering.
std::string to_dot(const Analysis& an, const PairComponentCategory& C,
                   const std::vector<EdgeVerdict>& verdicts);

}  // namespace ditop

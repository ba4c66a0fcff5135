#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ditop/paths.hpp"

namespace ditop {

/// A d-map at vertex level. Edge condition: every edge maps to an edge or
/// collapses; square condition: the images of a 2-cube's two corner paths
/// are swap-equivalent in the target. The canonical image edge per non-
/// collapsed source edge is the one of smallest id.
struct AdmissibleMap {
  ComplexPtr src, tgt;
  std::vector<int> v;        // vertex rank -> target vertex rank
  std::vector<int> edgeImg;  // edge rank -> target edge rank, or -1 (collapsed)

  bool sameVertexMap(const AdmissibleMap& o) const { return v == o.v; }
  bool isIdentity() const;

  /// Image of an edge path (collapsed edges dropped).
  EdgePath apply(const EdgePath& p) const;
};

bool map_less(const AdmissibleMap& a, const AdmissibleMap& b);

struct MapCheckReport {
  bool admissible = true;
  std::vector<std::string> violations;
};

/// Validates the edge and square conditions for a raw vertex map and
/// resolves canonical edge images. tgtTable must belong to tgt.
MapCheckReport check_admissible(const PrecubicalSet& src, const ClassTable& tgtTable,
                                const std::vector<int>& vertexMap,
                                AdmissibleMap* out = nullptr);

AdmissibleMap identity_map(ComplexPtr X, const ClassTable& table);
AdmissibleMap constant_map(ComplexPtr src, const ClassTable& tgtTable, int targetVertex);

/// g after f. Throws if f.tgt and g.src differ.
AdmissibleMap compose(const AdmissibleMap& g, const AdmissibleMap& f,
                      const ClassTable& tgtTable);

/// All admissible maps src -> tgt by backtracking over vertices ordered by
/// constraint degree; result sorted by vertex map. budget bounds the number
/// of explored assignment nodes.
std::vector<AdmissibleMap> enumerate_maps(ComplexPtr src, ComplexPtr tgt,
                                          const ClassTable& tgtTable, long budget);

/// classes(X,x,y) -> classes(Y,fx,fy) by mapping representatives.
std::vector<int> induced_class_map(const AdmissibleMap& f, const ClassTable& srcTable,
                                   const ClassTable& tgtTable, int x, int y);

struct PspResult {
  bool psp = false;
  bool boundedMode = false;  // verdict relative to a length bound
  std::string failure;       // first failing pair, if any
};

PspResult check_psp(const AdmissibleMap& f, const ClassTable& srcTable,
                    const ClassTable& tgtTable);

/// An elementary d-homotopy between maps with common source and target.
/// future: w(x) runs from from(x) to to(x); past: from to(x) to from(x).
/// Naturality per edge a->b (future case):
///   class(image_from(e) . w(b)) == class(w(a) . image_to(e)).
struct HomotopyWitness {
  bool future = true;
  AdmissibleMap from, to;
  std::vector<EdgePath> w;  // by source vertex rank
};

bool check_witness(const HomotopyWitness& H, const ClassTable& tgtTable,
                   std::string* why = nullptr);

/// Searches for an elementary witness between two maps; deterministic
/// (vertices in rank order, candidate paths in lexicographic order).
std::optional<HomotopyWitness> find_witness(const AdmissibleMap& from, const AdmissibleMap& to,
                                            bool future, const ClassTable& tgtTable);

/// A chain of elementary witnesses joining two maps, with psp flags for the
/// maps occurring in the chain.
struct WitnessChain {
  std::vector<HomotopyWitness> steps;
  std::vector<char> pspFlags;  // per chain map (steps.size()+1 when nonempty)
};

enum class Alpha { Future, Past, Neutral };
Alpha alpha_from_string(const std::string& s);  // "+", "-", "0"
std::string alpha_to_string(Alpha a);

enum class Verdict { True, False, Unknown };

/// Analysis context for one complex: class table plus lazily enumerated
/// endomap pool, psp flags and inessential sets.
class Analysis {
 public:
  explicit Analysis(ComplexPtr X, std::optional<int> maxLen = std::nullopt, int workers = 1);

  const PrecubicalSet& complex() const { return *X_; }
  ComplexPtr complexPtr() const { return X_; }
  const ClassTable& table() const { return *table_; }
  ClassTablePtr tablePtr() const { return table_; }

  const std::vector<AdmissibleMap>& endomaps(long budget);
  const std::vector<int>& pspEndomaps(long budget);     // indices into endomaps()
  /// Indices of endomaps verified alpha-inessential (exhaustive over the
  /// enumerated pool).
  const std::vector<int>& inessentialSet(Alpha a, long budget);
  int endomapIndex(const AdmissibleMap& f, long budget);  // -1 if not in pool

  AdmissibleMap identity();

 private:
  ComplexPtr X_;
  ClassTablePtr table_;
  std::optional<std::vector<AdmissibleMap>> endos_;
  std::optional<std::vector<int>> psp_;
  std::optional<std::vector<int>> iness_[3];
};

/// find_witness_chain: alpha=+ demands one future witness f->g, alpha=- one
/// past witness, alpha=0 a roof f -> m <- g through a common psp upper map
/// (the discrete stand-in for one neutral psp d-homotopy; see README).
std::optional<WitnessChain> find_witness_chain(const AdmissibleMap& f, const AdmissibleMap& g,
                                               Alpha alpha, int depth, Analysis& an,
                                               long budget);

struct InessentialResult {
  Verdict verdict = Verdict::Unknown;
  WitnessChain chain;  // certificate when verdict == True
  std::string note;
};

/// f alpha-inessential: a witness chain of flavour alpha joins id and f and
/// every chain map is psp. False is only reported after the candidate space
/// was exhausted.
InessentialResult check_inessential(const AdmissibleMap& f, Alpha alpha, int depth,
                                    Analysis& an, long budget);

struct RatherResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<AdmissibleMap> g;  // certificate: g inessential, f.g inessential
  WitnessChain chainG, chainFG;
  std::string note;
};

/// f rather alpha-inessential: some alpha-inessential g in the pool makes
/// f o g alpha-inessential. Pool defaults to the exhaustively enumerated
/// inessential set of the complex.
RatherResult check_rather_inessential(const AdmissibleMap& f, Alpha alpha, Analysis& an,
                                      long budget,
                                      const std::vector<AdmissibleMap>* pool = nullptr);

struct DheResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<AdmissibleMap> g;  // reverse map
  RatherResult gof, fog;
  std::string note;
};

/// f is an alpha directed homotopy equivalence iff some admissible
/// g: Y -> X makes g o f and f o g alpha-rather-inessential.
DheResult check_dhe(const AdmissibleMap& f, Alpha alpha, Analysis& anX, Analysis& anY,
                    long budget);

/// Re-validates a dhe certificate (used by the components and tc modules).
bool validate_dhe_certificate(const AdmissibleMap& f, const DheResult& cert, Analysis& anX,
                              Analysis& anY, std::string* why = nullptr);

/// Validates the internal consistency of an endomap witness chain: adjacent
/// steps share maps, every witness checks, every chain map is psp.
bool validate_witness_chain(const WitnessChain& chain, const ClassTable& table,
                            std::string* why = nullptr);

}  // namespace ditop

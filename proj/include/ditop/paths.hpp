#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ditop/complex.hpp"

namespace ditop {

/// A directed edge path, by edge ranks. Empty sequence = constant path.
struct EdgePath {
  int src = -1, tgt = -1;
  std::vector<int> edges;

  bool operator==(const EdgePath& o) const {
    return src == o.src && tgt == o.tgt && edges == o.edges;
  }
};

/// All directed edge paths from x to y in lexicographic edge-id order.
/// max_len is required unless X is loop-free.
std::vector<EdgePath> enumerate_paths(const PrecubicalSet& X, int x, int y,
                                      std::optional<int> max_len = std::nullopt);

/// Replaces the corner pair of `square` at `position` in p by the
/// complementary corner pair. The pair (bottom, right) swaps with
/// (left, top); anything else is rejected.
EdgePath swap_step(const PrecubicalSet& X, const EdgePath& p, int position, int squareIdx);

struct DihoClass {
  int x = -1, y = -1;    // vertex ranks
  int classId = -1;      // canonical within the pair (ordered by least member path)
  EdgePath representative;
};

/// Dihomotopy classes of one reachable pair: enumerated paths partitioned
/// under the closure of elementary swaps.
struct PairClasses {
  int x = -1, y = -1;
  std::vector<EdgePath> paths;          // lexicographic
  std::vector<int> pathClass;           // path index -> class id
  std::vector<int> classRep;            // class id -> path index (least member)
  int classCount = 0;

  int classOf(const std::vector<int>& edges) const;  // -1 if path unknown
  DihoClass dihoClass(int classId) const;
};

/// Per-pair class data for a whole complex. In exhaustive mode (loop-free
/// complexes) counts are exact; in bounded mode they are lower bounds.
class ClassTable {
 public:
  ClassTable(ComplexPtr X, std::optional<int> max_len = std::nullopt, int workers = 1);

  const PrecubicalSet& complex() const { return *X_; }
  ComplexPtr complexPtr() const { return X_; }
  bool exhaustive() const { return exhaustive_; }
  std::optional<int> maxLen() const { return maxLen_; }

  bool hasPair(int x, int y) const;
  const PairClasses& pair(int x, int y) const;
  const std::vector<PairClasses>& entries() const { return entries_; }

  /// True when every reachable pair has at most one class (then induced
  /// maps are automatically bijective and witness naturality is trivial).
  bool allSingleton() const { return allSingleton_; }

 private:
  ComplexPtr X_;
  bool exhaustive_;
  std::optional<int> maxLen_;
  std::map<std::pair<int, int>, int> slot_;
  std::vector<PairClasses> entries_;
  bool allSingleton_ = true;
};

using ClassTablePtr = std::shared_ptr<const ClassTable>;

/// classes(X, x, y): the DihoClass list of one pair.
std::vector<DihoClass> classes(const ClassTable& table, int x, int y);

/// Class of the concatenation; independent of the chosen representatives.
DihoClass concat_class(const ClassTable& table, const DihoClass& c1, const DihoClass& c2);

}  // namespace ditop

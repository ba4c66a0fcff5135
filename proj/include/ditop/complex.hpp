#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ditop {

struct ParameterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  long explored;
  explicit BudgetExceeded(long n)
      : std::runtime_error("search budget exceeded after " + std::to_string(n) + " nodes"),
        explored(n) {}
};

/// A single cell as it appears in the file format: an id, a dimension and,
/// for dim >= 1, one (-,+) face pair per axis 1..dim.
struct RawCell {
  std::string id;
  int dim = 0;
  std::vector<std::array<std::string, 2>> faces;  // faces[i-1][0]='-' face, [1]='+' face
};

struct RawComplex {
  std::string name;
  std::vector<RawCell> cells;
};

struct Violation {
  std::string cell;
  std::string what;  // human-readable description of the broken constraint
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;
};

/// Checks ids, dimensions, dangling references and the pre-cubical relations
/// d_i^a d_j^b = d_{j-1}^b d_i^a (i < j) by direct evaluation.
ValidationReport validate(const RawComplex& raw);

/// An oriented 2-cell, by the ranks of its four boundary edges.
/// left = d1^-, right = d1^+, bottom = d2^-, top = d2^+.
struct Square {
  int cell;  // cell index of the 2-cube
  int left, right, bottom, top;
};

/// A finite validated pre-cubical set. Immutable after construction; the
/// constructor rejects raw data that does not validate.
class PrecubicalSet {
 public:
  explicit PrecubicalSet(RawComplex raw);

  const std::string& name() const { return name_; }
  int cellCount() const { return (int)cells_.size(); }
  int maxDim() const { return (int)byDim_.size() - 1; }
  const std::vector<RawCell>& cells() const { return cells_; }
  const std::vector<int>& cellsOfDim(int d) const;
  int cellIndex(const std::string& id) const;  // -1 if absent
  const RawCell& cell(int idx) const { return cells_[idx]; }
  int face(int cellIdx, int i, int sign) const;  // i in 1..dim, sign 0='-' 1='+'

  // 1-skeleton, with dense vertex/edge ranks ordered by cell id.
  int vertexCount() const { return (int)vertices_.size(); }
  int edgeCount() const { return (int)edges_.size(); }
  const std::string& vertexId(int vrank) const { return cells_[vertices_[vrank]].id; }
  const std::string& edgeId(int erank) const { return cells_[edges_[erank]].id; }
  int vertexRank(const std::string& id) const;  // -1 if absent
  int edgeRank(const std::string& id) const;
  int edgeSrc(int erank) const { return esrc_[erank]; }
  int edgeTgt(int erank) const { return etgt_[erank]; }
  const std::vector<int>& outEdges(int vrank) const { return out_[vrank]; }
  const std::vector<int>& inEdges(int vrank) const { return in_[vrank]; }
  const std::vector<Square>& squares() const { return squares_; }

  bool reachable(int x, int y) const { return reach_[x][y] != 0; }
  bool loopFree() const { return loopFree_; }

  /// Vertices with no incoming / no outgoing edges (candidates for the
  /// "0" / "1" aliases used by the CLI).
  std::optional<int> uniqueSource() const;
  std::optional<int> uniqueSink() const;

  RawComplex toRaw() const;

 private:
  std::string name_;
  std::vector<RawCell> cells_;              // canonical order: (dim, id)
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> byDim_;
  std::vector<std::vector<std::array<int, 2>>> faceIdx_;
  std::vector<int> vertices_, edges_;       // cell indices
  std::vector<int> vrank_, erank_;          // cell index -> rank or -1
  std::vector<int> esrc_, etgt_;
  std::vector<std::vector<int>> out_, in_;  // by vertex rank, edge ranks sorted
  std::vector<Square> squares_;
  std::vector<std::vector<char>> reach_;    // reflexive-transitive closure on vertices
  bool loopFree_ = true;
};

using ComplexPtr = std::shared_ptr<const PrecubicalSet>;

struct ReachabilityTable {
  std::vector<std::pair<int, int>> pairs;  // vertex-rank pairs, lexicographic
  std::vector<std::vector<char>> order;
};

ReachabilityTable reachability(const PrecubicalSet& X);
bool is_loop_free(const PrecubicalSet& X);

/// Every n-cube must have 2^i * C(n,i) pairwise distinct iterated (n-i)-faces.
bool is_non_self_linked(const PrecubicalSet& X);

/// Named builders: cube n, boundary-cube n, circle, torus n, branch,
/// letter-w, dubut-d, swiss-grid, point, graph <edges>.
PrecubicalSet build_named(const std::string& name, int n = 0);
PrecubicalSet build_graph(const std::string& name,
                          const std::vector<std::pair<std::string, std::string>>& edges);

PrecubicalSet product(const PrecubicalSet& X, const PrecubicalSet& Y);

}  // namespace ditop

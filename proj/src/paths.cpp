#include "ditop/paths.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace ditop {

std::vector<EdgePath> enumerate_paths(const PrecubicalSet& X, int x, int y,
                                      std::optional<int> max_len) {
  if (x < 0 || x >= X.vertexCount() || y < 0 || y >= X.vertexCount())
    throw ParameterError("enumerate_paths: vertex out of range");
  if (!X.loopFree() && !max_len)
    throw PreconditionError("complex '" + X.name() +
                            "' has a directed loop; --max-len is required");

  std::vector<EdgePath> out;
  std::vector<int> edges;

  // DFS in edge-rank order yields lexicographic path order (prefixes first).
  std::function<void(int)> dfs = [&](int v) {
    if (v == y) {
      out.push_back(EdgePath{x, y, edges});
      if (X.loopFree()) return;  // a loop-free path never revisits y
    }
    if (max_len && (int)edges.size() >= *max_len) return;
    for (int e : X.outEdges(v)) {
      int w = X.edgeTgt(e);
      if (!X.reachable(w, y)) continue;
      edges.push_back(e);
      dfs(w);
      edges.pop_back();
    }
  };
  if (X.reachable(x, y)) dfs(x);
  return out;
}

EdgePath swap_step(const PrecubicalSet& X, const EdgePath& p, int position, int squareIdx) {
  if (position < 0 || position + 1 >= (int)p.edges.size())
    throw ParameterError("swap position out of range");
  if (squareIdx < 0 || squareIdx >= (int)X.squares().size())
    throw ParameterError("no such square");
  const Square& s = X.squares()[squareIdx];
  int e1 = p.edges[position], e2 = p.edges[position + 1];
  EdgePath q = p;
  if (e1 == s.bottom && e2 == s.right) {
    q.edges[position] = s.left;
    q.edges[position + 1] = s.top;
  } else if (e1 == s.left && e2 == s.top) {
    q.edges[position] = s.bottom;
    q.edges[position + 1] = s.right;
  } else {
    throw ParameterError("edges at position do not bound the named square");
  }
  return q;
}

int PairClasses::classOf(const std::vector<int>& edges) const {
  // paths are lex-sorted; binary search
  auto cmp = [](const EdgePath& p, const std::vector<int>& e) { return p.edges < e; };
  auto it = std::lower_bound(paths.begin(), paths.end(), edges, cmp);
  if (it == paths.end() || it->edges != edges) return -1;
  return pathClass[it - paths.begin()];
}

DihoClass PairClasses::dihoClass(int classId) const {
  DihoClass c;
  c.x = x;
  c.y = y;
  c.classId = classId;
  c.representative = paths[classRep[classId]];
  return c;
}

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

PairClasses buildPair(const PrecubicalSet& X, int x, int y, std::optional<int> maxLen,
                      const std::map<std::pair<int, int>, std::vector<std::array<int, 2>>>&
                          swapNeighbors) {
  PairClasses pc;
  pc.x = x;
  pc.y = y;
  pc.paths = enumerate_paths(X, x, y, maxLen);

  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)pc.paths.size(); ++i) idx[pc.paths[i].edges] = i;

  UF uf((int)pc.paths.size());
  std::vector<int> alt;
  for (int i = 0; i < (int)pc.paths.size(); ++i) {
    const auto& e = pc.paths[i].edges;
    for (int k = 0; k + 1 < (int)e.size(); ++k) {
      auto it = swapNeighbors.find({e[k], e[k + 1]});
      if (it == swapNeighbors.end()) continue;
      for (const auto& rep : it->second) {
        alt = e;
        alt[k] = rep[0];
        alt[k + 1] = rep[1];
        auto jt = idx.find(alt);
        if (jt != idx.end()) uf.unite(i, jt->second);
      }
    }
  }

  // canonical class ids: order of first appearance in lex path order
  pc.pathClass.assign(pc.paths.size(), -1);
  std::map<int, int> rootToClass;
  for (int i = 0; i < (int)pc.paths.size(); ++i) {
    int r = uf.find(i);
    auto it = rootToClass.find(r);
    if (it == rootToClass.end()) {
      int id = (int)pc.classRep.size();
      rootToClass[r] = id;
      pc.classRep.push_back(i);
      pc.pathClass[i] = id;
    } else {
      pc.pathClass[i] = it->second;
    }
  }
  pc.classCount = (int)pc.classRep.size();
  return pc;
}

}  // namespace

ClassTable::ClassTable(ComplexPtr X, std::optional<int> max_len, int workers)
    : X_(std::move(X)), maxLen_(max_len) {
  exhaustive_ = X_->loopFree() && !max_len;
  if (!X_->loopFree() && !max_len)
    throw PreconditionError("complex '" + X_->name() +
                            "' has a directed loop; a length bound is required");

  // Swap neighbor index: (e1,e2) -> replacements, over all 2-cells.
  std::map<std::pair<int, int>, std::vector<std::array<int, 2>>> swapNeighbors;
  for (const auto& s : X_->squares()) {
    swapNeighbors[{s.bottom, s.right}].push_back({s.left, s.top});
    swapNeighbors[{s.left, s.top}].push_back({s.bottom, s.right});
  }

  ReachabilityTable reach = reachability(*X_);
  entries_.resize(reach.pairs.size());
  for (int i = 0; i < (int)reach.pairs.size(); ++i) slot_[reach.pairs[i]] = i;

  auto work = [&](int begin, int step) {
    for (int i = begin; i < (int)reach.pairs.size(); i += step)
      entries_[i] = buildPair(*X_, reach.pairs[i].first, reach.pairs[i].second, maxLen_,
                              swapNeighbors);
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> ts;
    for (int w = 0; w < workers; ++w) ts.emplace_back(work, w, workers);
    for (auto& t : ts) t.join();
  }
  for (const auto& e : entries_)
    if (e.classCount > 1) allSingleton_ = false;
}

bool ClassTable::hasPair(int x, int y) const { return slot_.count({x, y}) > 0; }

const PairClasses& ClassTable::pair(int x, int y) const {
  auto it = slot_.find({x, y});
  if (it == slot_.end()) throw ParameterError("pair not reachable");
  return entries_[it->second];
}

std::vector<DihoClass> classes(const ClassTable& table, int x, int y) {
  std::vector<DihoClass> out;
  if (!table.hasPair(x, y)) return out;
  const PairClasses& pc = table.pair(x, y);
  for (int c = 0; c < pc.classCount; ++c) out.push_back(pc.dihoClass(c));
  return out;
}

DihoClass concat_class(const ClassTable& table, const DihoClass& c1, const DihoClass& c2) {
  if (c1.y != c2.x) throw ParameterError("concat_class: endpoint mismatch");
  const PairClasses& pc = table.pair(c1.x, c2.y);
  std::vector<int> edges = c1.representative.edges;
  edges.insert(edges.end(), c2.representative.edges.begin(), c2.representative.edges.end());
  int cid = pc.classOf(edges);
  if (cid < 0) throw PreconditionError("concatenated path exceeds the table's length bound");
  return pc.dihoClass(cid);
}

}  // namespace ditop

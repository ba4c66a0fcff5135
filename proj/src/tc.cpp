#include "ditop/tc.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ditop {

namespace {

/// A single-edge extension constraint between two pair slots:
/// value(toSlot) is forced from value(fromSlot) by composing with the edge.
struct Constraint {
  int fromSlot, toSlot;
  int edge;
  bool covariant;  // target extension (append edge) vs source (prepend)
};

struct Instance {
  const ClassTable* table;
  std::vector<std::pair<int, int>> pairs;  // slot -> (x, y)
  std::map<std::pair<int, int>, int> slot;
  std::vector<Constraint> constraints;
  std::vector<std::vector<int>> bySlot;  // slot -> constraint indices touching it
  // forced[c][classOfFrom] -> class of to (precomputed)
  std::vector<std::vector<int>> forced;
};

Instance buildInstance(const ClassTable& table) {
  Instance I;
  I.table = &table;
  const PrecubicalSet& X = table.complex();
  for (const auto& pc : table.entries()) {
    I.slot[{pc.x, pc.y}] = (int)I.pairs.size();
    I.pairs.push_back({pc.x, pc.y});
  }
  for (int e = 0; e < X.edgeCount(); ++e) {
    int a = X.edgeSrc(e), b = X.edgeTgt(e);
    for (int x = 0; x < X.vertexCount(); ++x)
      if (table.hasPair(x, a))
        I.constraints.push_back({I.slot.at({x, a}), I.slot.at({x, b}), e, true});
    for (int y = 0; y < X.vertexCount(); ++y)
      if (table.hasPair(b, y))
        I.constraints.push_back({I.slot.at({b, y}), I.slot.at({a, y}), e, false});
  }
  I.bySlot.assign(I.pairs.size(), {});
  I.forced.resize(I.constraints.size());
  for (int c = 0; c < (int)I.constraints.size(); ++c) {
    const Constraint& ct = I.constraints[c];
    I.bySlot[ct.fromSlot].push_back(c);
    I.bySlot[ct.toSlot].push_back(c);
    const PairClasses& from = table.entries()[ct.fromSlot];
    const PairClasses& to = table.entries()[ct.toSlot];
    I.forced[c].assign(from.classCount, -1);
    for (int cl = 0; cl < from.classCount; ++cl) {
      std::vector<int> path;
      const auto& rep = from.paths[from.classRep[cl]].edges;
      if (ct.covariant) {
        path = rep;
        path.push_back(ct.edge);
      } else {
        path.push_back(ct.edge);
        path.insert(path.end(), rep.begin(), rep.end());
      }
      I.forced[c][cl] = to.classOf(path);
    }
  }
  return I;
}

}  // namespace

bool patch_consistent(const ClassTable& table, const Patch& patch) {
  if (!table.exhaustive())
    throw PreconditionError("patch consistency needs an exhaustive class table");
  Instance I = buildInstance(table);
  std::vector<int> value(I.pairs.size(), -1);
  for (size_t i = 0; i < patch.pairSlots.size(); ++i) {
    int s = patch.pairSlots[i];
    int cls = patch.assignment[i];
    if (s < 0 || s >= (int)I.pairs.size())
      throw ParameterError("patch references an unknown pair");
    if (cls < 0 || cls >= table.entries()[s].classCount)
      throw ParameterError("assignment references a class id not belonging to the pair");
    value[s] = cls;
  }
  for (int c = 0; c < (int)I.constraints.size(); ++c) {
    const Constraint& ct = I.constraints[c];
    if (value[ct.fromSlot] < 0 || value[ct.toSlot] < 0) continue;
    if (I.forced[c][value[ct.fromSlot]] != value[ct.toSlot]) return false;
  }
  return true;
}

DtcResult directed_tc(const ClassTable& table, int max_k) {
  if (!table.exhaustive())
    throw PreconditionError("directed_tc needs an exhaustive class table");
  if (max_k < 1) throw ParameterError("max_k must be at least 1");

  Instance I = buildInstance(table);
  int n = (int)I.pairs.size();

  // order pairs by descending constraint degree, then slot
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return I.bySlot[a].size() > I.bySlot[b].size();
  });

  DtcResult res;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> patchOf(n, -1), classOf(n, -1);
    int used = 0;

    std::function<bool(int)> rec = [&](int step) -> bool {
      if (step == n) return true;
      int s = order[step];
      const PairClasses& pc = table.entries()[s];
      int maxPatch = std::min(used, k - 1);  // symmetry: new patch only lowest unused
      for (int p = 0; p <= maxPatch; ++p) {
        // candidate classes, filtered by constraints against same-patch slots
        for (int cl = 0; cl < pc.classCount; ++cl) {
          bool ok = true;
          for (int c : I.bySlot[s]) {
            const Constraint& ct = I.constraints[c];
            int other = ct.fromSlot == s ? ct.toSlot : ct.fromSlot;
            if (patchOf[other] != p) continue;
            int fv = ct.fromSlot == s ? cl : classOf[other];
            int tv = ct.fromSlot == s ? classOf[other] : cl;
            if (I.forced[c][fv] != tv) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          patchOf[s] = p;
          classOf[s] = cl;
          int prevUsed = used;
          used = std::max(used, p + 1);
          if (rec(step + 1)) return true;
          used = prevUsed;
          patchOf[s] = -1;
          classOf[s] = -1;
        }
      }
      return false;
    };

    if (rec(0)) {
      res.found = true;
      res.k = k;
      res.cover.k = k;
      res.cover.patches.assign(k, {});
      for (int s = 0; s < n; ++s) {
        res.cover.patches[patchOf[s]].pairSlots.push_back(s);
        res.cover.patches[patchOf[s]].assignment.push_back(classOf[s]);
      }
      return res;
    }
  }
  return res;  // found = false: no cover within max_k
}

bool invariance_check(Analysis& anX, Analysis& anY, const AdmissibleMap& f,
                      const DheResult& cert, int max_k) {
  std::string why;
  if (!validate_dhe_certificate(f, cert, anX, anY, &why))
    throw PreconditionError("invalid dhe certificate: " + why);
  DtcResult a = directed_tc(anX.table(), max_k);
  DtcResult b = directed_tc(anY.table(), max_k);
  return a.found && b.found && a.k == b.k;
}

}  // namespace ditop

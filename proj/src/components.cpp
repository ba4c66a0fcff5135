#include "ditop/components.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ditop {

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

bool bijectiveOn(const PairClasses& from, const PairClasses& to,
                 const std::function<std::vector<int>(const EdgePath&)>& extend) {
  if (from.classCount != to.classCount) return false;
  std::set<int> images;
  for (int c = 0; c < from.classCount; ++c) {
    int img = to.classOf(extend(from.paths[from.classRep[c]]));
    if (img < 0) return false;
    images.insert(img);
  }
  return (int)images.size() == from.classCount;
}

}  // namespace

std::vector<EdgeVerdict> classify_edges(const ClassTable& table) {
  if (!table.exhaustive())
    throw PreconditionError("edge classification needs an exhaustive class table");
  const PrecubicalSet& X = table.complex();
  std::vector<EdgeVerdict> out(X.edgeCount());
  for (int e = 0; e < X.edgeCount(); ++e) {
    int a = X.edgeSrc(e), b = X.edgeTgt(e);
    EdgeVerdict v;
    v.edge = e;
    // target use: for every x with (x,a), appending e must be a bijection
    v.targetInessential = true;
    for (int x = 0; x < X.vertexCount() && v.targetInessential; ++x) {
      if (!table.hasPair(x, a)) continue;
      const PairClasses& from = table.pair(x, a);
      const PairClasses& to = table.pair(x, b);
      v.targetInessential = bijectiveOn(from, to, [&](const EdgePath& p) {
        std::vector<int> q = p.edges;
        q.push_back(e);
        return q;
      });
    }
    // source use: for every y with (b,y), prepending e must be a bijection
    v.sourceInessential = true;
    for (int y = 0; y < X.vertexCount() && v.sourceInessential; ++y) {
      if (!table.hasPair(b, y)) continue;
      const PairClasses& from = table.pair(b, y);
      const PairClasses& to = table.pair(a, y);
      v.sourceInessential = bijectiveOn(from, to, [&](const EdgePath& p) {
        std::vector<int> q;
        q.push_back(e);
        q.insert(q.end(), p.edges.begin(), p.edges.end());
        return q;
      });
    }
    out[e] = v;
  }
  return out;
}

PairComponentCategory pair_components(Analysis& an,
                                      const std::vector<CertifiedEndomap>& extra) {
  const ClassTable& table = an.table();
  const PrecubicalSet& X = an.complex();
  std::vector<EdgeVerdict> verdicts = classify_edges(table);

  PairComponentCategory C;
  std::map<std::pair<int, int>, int> slot;
  for (const auto& pc : table.entries()) {
    slot[{pc.x, pc.y}] = (int)C.pairs.size();
    C.pairs.push_back({pc.x, pc.y});
  }

  UF uf((int)C.pairs.size());
  for (const auto& v : verdicts) {
    if (!v.inessential()) continue;
    int a = X.edgeSrc(v.edge), b = X.edgeTgt(v.edge);
    for (int x = 0; x < X.vertexCount(); ++x)
      if (table.hasPair(x, a)) uf.unite(slot.at({x, a}), slot.at({x, b}));
    for (int y = 0; y < X.vertexCount(); ++y)
      if (table.hasPair(b, y)) uf.unite(slot.at({a, y}), slot.at({b, y}));
  }

  for (const auto& ce : extra) {
    if (ce.map.src.get() != &X || ce.map.tgt.get() != &X)
      throw PreconditionError("registered endomap belongs to a different complex");
    AdmissibleMap id = an.identity();
    bool ok = !ce.chain.steps.empty() || ce.map.isIdentity();
    if (!ce.map.isIdentity()) {
      // re-verify the supplied chain joins id and the map
      if (ce.chain.steps.empty() || ce.chain.steps.front().from.v != id.v ||
          ce.chain.steps.back().to.v != ce.map.v)
        ok = false;
      for (const auto& H : ce.chain.steps) {
        std::string why;
        if (!check_witness(H, table, &why)) ok = false;
        if (!check_psp(H.from, table, table).psp || !check_psp(H.to, table, table).psp)
          ok = false;
      }
    }
    if (!ok) throw PreconditionError("registered endomap lacks a valid inessentiality certificate");
    for (const auto& pr : C.pairs) {
      int fx = ce.map.v[pr.first], fy = ce.map.v[pr.second];
      uf.unite(slot.at(pr), slot.at({fx, fy}));
    }
    std::string nm = "[";
    for (int x = 0; x < X.vertexCount(); ++x)
      nm += (x ? "," : "") + X.vertexId(ce.map.v[x]);
    C.appliedEndomaps.push_back(nm + "]");
  }

  // canonical component ids by least member slot
  std::map<int, int> rootToComp;
  C.component.assign(C.pairs.size(), -1);
  for (int i = 0; i < (int)C.pairs.size(); ++i) {
    int r = uf.find(i);
    auto it = rootToComp.find(r);
    if (it == rootToComp.end()) {
      rootToComp[r] = (int)rootToComp.size();
      it = rootToComp.find(r);
    }
    C.component[i] = it->second;
  }
  C.objectCount = (int)rootToComp.size();
  C.signatures.assign(C.objectCount, {});
  C.memberCount.assign(C.objectCount, 0);
  std::vector<std::set<int>> sig(C.objectCount);
  for (int i = 0; i < (int)C.pairs.size(); ++i) {
    sig[C.component[i]].insert(table.pair(C.pairs[i].first, C.pairs[i].second).classCount);
    ++C.memberCount[C.component[i]];
  }
  for (int c = 0; c < C.objectCount; ++c)
    C.signatures[c].assign(sig[c].begin(), sig[c].end());
  return C;
}

CompareVerdict compare_categories(const PairComponentCategory& a,
                                  const PairComponentCategory& b) {
  if (a.objectCount != b.objectCount) return CompareVerdict::Distinguished;
  std::vector<std::vector<int>> sa = a.signatures, sb = b.signatures;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb ? CompareVerdict::Compatible : CompareVerdict::Distinguished;
}

ComponentMapResult induced_component_map(const AdmissibleMap& f, const DheResult& cert,
                                         Analysis& anX, Analysis& anY,
                                         const PairComponentCategory& CX,
                                         const PairComponentCategory& CY) {
  std::string why;
  if (!validate_dhe_certificate(f, cert, anX, anY, &why))
    throw PreconditionError("invalid dhe certificate: " + why);

  std::map<std::pair<int, int>, int> slotY;
  for (int i = 0; i < (int)CY.pairs.size(); ++i) slotY[CY.pairs[i]] = i;

  ComponentMapResult r;
  r.objectMap.assign(CX.objectCount, -1);
  r.wellDefined = true;
  for (int i = 0; i < (int)CX.pairs.size(); ++i) {
    auto [x, y] = CX.pairs[i];
    int img = CY.component[slotY.at({f.v[x], f.v[y]})];
    int& tgt = r.objectMap[CX.component[i]];
    if (tgt < 0)
      tgt = img;
    else if (tgt != img)
      r.wellDefined = false;
  }
  if (r.wellDefined) {
    std::set<int> hit(r.objectMap.begin(), r.objectMap.end());
    r.bijective = (int)hit.size() == CX.objectCount && CX.objectCount == CY.objectCount;
  }
  return r;
}

std::string to_dot(const Analysis& an, const PairComponentCategory& C,
                   const std::vector<EdgeVerdict>& verdicts) {
  const PrecubicalSet& X = an.complex();
  std::map<std::pair<int, int>, int> slot;
  for (int i = 0; i < (int)C.pairs.size(); ++i) slot[C.pairs[i]] = i;

  std::ostringstream os;
  os << "digraph components {\n";
  for (int c = 0; c < C.objectCount; ++c) {
    os << "  c" << c << " [label=\"" << C.memberCount[c] << "x{";
    for (size_t k = 0; k < C.signatures[c].size(); ++k)
      os << (k ? "," : "") << C.signatures[c][k];
    os << "}\"];\n";
  }
  std::set<std::pair<int, int>> arrows;
  for (const auto& v : verdicts) {
    if (v.inessential()) continue;
    int a = X.edgeSrc(v.edge), b = X.edgeTgt(v.edge);
    for (int x = 0; x < X.vertexCount(); ++x)
      if (slot.count({x, a})) {
        int ca = C.component[slot.at({x, a})], cb = C.component[slot.at({x, b})];
        if (ca != cb) arrows.insert({ca, cb});
      }
    for (int y = 0; y < X.vertexCount(); ++y)
      if (slot.count({b, y})) {
        int cb = C.component[slot.at({b, y})], ca = C.component[slot.at({a, y})];
        if (cb != ca) arrows.insert({cb, ca});
      }
  }
  for (const auto& [u, w] : arrows) os << "  c" << u << " -> c" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ditop

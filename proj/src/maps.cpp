#include "ditop/maps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ditop {

bool AdmissibleMap::isIdentity() const {
  if (src.get() != tgt.get()) return false;
  for (int i = 0; i < (int)v.size(); ++i)
    if (v[i] != i) return false;
  return true;
}

EdgePath AdmissibleMap::apply(const EdgePath& p) const {
  EdgePath q;
  q.src = v[p.src];
  q.tgt = v[p.tgt];
  for (int e : p.edges)
    if (edgeImg[e] >= 0) q.edges.push_back(edgeImg[e]);
  return q;
}

bool map_less(const AdmissibleMap& a, const AdmissibleMap& b) { return a.v < b.v; }

namespace {

/// Smallest-id edge u -> w in the target, or -1.
struct EdgeLookup {
  std::vector<std::vector<int>> best;  // [u][w] -> edge rank or -1
  explicit EdgeLookup(const PrecubicalSet& Y)
      : best(Y.vertexCount(), std::vector<int>(Y.vertexCount(), -1)) {
    for (int e = Y.edgeCount() - 1; e >= 0; --e) best[Y.edgeSrc(e)][Y.edgeTgt(e)] = e;
  }
};

struct SquareCorners {
  int v00, v10, v01, v11;
};

SquareCorners corners(const PrecubicalSet& X, const Square& s) {
  return {X.edgeSrc(s.bottom), X.edgeTgt(s.bottom), X.edgeTgt(s.left), X.edgeTgt(s.right)};
}

/// Checks that the two image corner paths of a square are swap-equivalent
/// in the target. Image paths here have length <= 2, so the bounded class
/// tables cover them as well.
bool squareImagesEquivalent(const ClassTable& tgtTable, const std::vector<int>& imgA,
                            const std::vector<int>& imgB, int fv00, int fv11) {
  if (imgA == imgB) return true;
  const PairClasses& pc = tgtTable.pair(fv00, fv11);
  if (pc.classCount <= 1) return true;
  int ca = pc.classOf(imgA), cb = pc.classOf(imgB);
  return ca >= 0 && ca == cb;
}

std::vector<int> imagePathEdges(const std::vector<int>& vmap,
                                const std::vector<std::vector<int>>& best,
                                const PrecubicalSet& X, std::initializer_list<int> edges) {
  std::vector<int> out;
  for (int e : edges) {
    int a = vmap[X.edgeSrc(e)], b = vmap[X.edgeTgt(e)];
    if (a == b) continue;
    out.push_back(best[a][b]);
  }
  return out;
}

}  // namespace

MapCheckReport check_admissible(const PrecubicalSet& src, const ClassTable& tgtTable,
                                const std::vector<int>& vertexMap, AdmissibleMap* out) {
  const PrecubicalSet& Y = tgtTable.complex();
  MapCheckReport rep;
  if ((int)vertexMap.size() != src.vertexCount()) {
    rep.admissible = false;
    rep.violations.push_back("vertex map has wrong size");
    return rep;
  }
  for (int x : vertexMap)
    if (x < 0 || x >= Y.vertexCount()) {
      rep.admissible = false;
      rep.violations.push_back("vertex image out of range");
      return rep;
    }

  EdgeLookup lut(Y);
  std::vector<int> edgeImg(src.edgeCount(), -1);
  for (int e = 0; e < src.edgeCount(); ++e) {
    int a = vertexMap[src.edgeSrc(e)], b = vertexMap[src.edgeTgt(e)];
    if (a == b) continue;
    int img = lut.best[a][b];
    if (img < 0) {
      rep.admissible = false;
      rep.violations.push_back("edge '" + src.edgeId(e) + "' maps to (" + Y.vertexId(a) +
                               "," + Y.vertexId(b) + ") but no such target edge exists");
    } else {
      edgeImg[e] = img;
    }
  }
  if (!rep.admissible) return rep;

  for (const Square& s : src.squares()) {
    SquareCorners c = corners(src, s);
    auto imgA = imagePathEdges(vertexMap, lut.best, src, {s.bottom, s.right});
    auto imgB = imagePathEdges(vertexMap, lut.best, src, {s.left, s.top});
    if (!squareImagesEquivalent(tgtTable, imgA, imgB, vertexMap[c.v00], vertexMap[c.v11])) {
      rep.admissible = false;
      rep.violations.push_back("square '" + src.cell(s.cell).id +
                               "': corner path images are not swap-equivalent");
    }
  }
  if (rep.admissible && out) {
    out->v = vertexMap;
    out->edgeImg = std::move(edgeImg);
  }
  return rep;
}

AdmissibleMap identity_map(ComplexPtr X, const ClassTable& table) {
  AdmissibleMap f;
  f.src = X;
  f.tgt = X;
  f.v.resize(X->vertexCount());
  std::iota(f.v.begin(), f.v.end(), 0);
  f.edgeImg.resize(X->edgeCount());
  std::iota(f.edgeImg.begin(), f.edgeImg.end(), 0);
  (void)table;
  return f;
}

AdmissibleMap constant_map(ComplexPtr src, const ClassTable& tgtTable, int targetVertex) {
  AdmissibleMap f;
  f.src = src;
  f.tgt = tgtTable.complexPtr();
  f.v.assign(src->vertexCount(), targetVertex);
  f.edgeImg.assign(src->edgeCount(), -1);
  return f;
}

AdmissibleMap compose(const AdmissibleMap& g, const AdmissibleMap& f,
                      const ClassTable& tgtTable) {
  if (f.tgt.get() != g.src.get()) throw ParameterError("compose: middle complex mismatch");
  std::vector<int> vm(f.v.size());
  for (int i = 0; i < (int)f.v.size(); ++i) vm[i] = g.v[f.v[i]];
  AdmissibleMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  MapCheckReport rep = check_admissible(*f.src, tgtTable, vm, &h);
  if (!rep.admissible)
    throw PreconditionError("composite of admissible maps failed admissibility: " +
                            rep.violations.front());
  return h;
}

std::vector<AdmissibleMap> enumerate_maps(ComplexPtr src, ComplexPtr tgt,
                                          const ClassTable& tgtTable, long budget) {
  const PrecubicalSet& X = *src;
  const PrecubicalSet& Y = *tgt;
  int n = X.vertexCount();

  // vertices by descending constraint degree, then rank
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = (int)(X.outEdges(v).size() + X.inEdges(v).size());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // per step: edges / squares that become fully decided
  std::vector<std::vector<int>> edgesAt(n), squaresAt(n);
  for (int e = 0; e < X.edgeCount(); ++e)
    edgesAt[std::max(pos[X.edgeSrc(e)], pos[X.edgeTgt(e)])].push_back(e);
  const auto& sqs = X.squares();
  for (int s = 0; s < (int)sqs.size(); ++s) {
    SquareCorners c = corners(X, sqs[s]);
    int last = std::max(std::max(pos[c.v00], pos[c.v10]), std::max(pos[c.v01], pos[c.v11]));
    squaresAt[last].push_back(s);
  }

  EdgeLookup lut(Y);
  std::vector<int> vm(n, -1);
  std::vector<AdmissibleMap> found;
  long explored = 0;

  std::function<void(int)> rec = [&](int step) {
    if (step == n) {
      AdmissibleMap f;
      f.src = src;
      f.tgt = tgt;
      MapCheckReport rep = check_admissible(X, tgtTable, vm, &f);
      if (rep.admissible) found.push_back(std::move(f));
      return;
    }
    int x = order[step];
    for (int cand = 0; cand < Y.vertexCount(); ++cand) {
      if (++explored > budget) throw BudgetExceeded(explored);
      vm[x] = cand;
      bool ok = true;
      for (int e : edgesAt[step]) {
        int a = vm[X.edgeSrc(e)], b = vm[X.edgeTgt(e)];
        if (a != b && lut.best[a][b] < 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (int s : squaresAt[step]) {
          SquareCorners c = corners(X, sqs[s]);
          auto imgA = imagePathEdges(vm, lut.best, X, {sqs[s].bottom, sqs[s].right});
          auto imgB = imagePathEdges(vm, lut.best, X, {sqs[s].left, sqs[s].top});
          if (!squareImagesEquivalent(tgtTable, imgA, imgB, vm[c.v00], vm[c.v11])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) rec(step + 1);
      vm[x] = -1;
    }
  };
  rec(0);
  std::sort(found.begin(), found.end(), map_less);
  return found;
}

std::vector<int> induced_class_map(const AdmissibleMap& f, const ClassTable& srcTable,
                                   const ClassTable& tgtTable, int x, int y) {
  const PairClasses& pc = srcTable.pair(x, y);
  const PairClasses& qc = tgtTable.pair(f.v[x], f.v[y]);
  std::vector<int> img(pc.classCount, -1);
  for (int c = 0; c < pc.classCount; ++c) {
    EdgePath ip = f.apply(pc.paths[pc.classRep[c]]);
    img[c] = qc.classOf(ip.edges);
    if (img[c] < 0)
      throw PreconditionError("image path missing from target table (length bound too small)");
  }
  return img;
}

PspResult check_psp(const AdmissibleMap& f, const ClassTable& srcTable,
                    const ClassTable& tgtTable) {
  PspResult r;
  r.boundedMode = !srcTable.exhaustive() || !tgtTable.exhaustive();
  for (const auto& pc : srcTable.entries()) {
    const PairClasses& qc = tgtTable.pair(f.v[pc.x], f.v[pc.y]);
    std::vector<int> img = induced_class_map(f, srcTable, tgtTable, pc.x, pc.y);
    std::set<int> distinct(img.begin(), img.end());
    if ((int)distinct.size() != pc.classCount || pc.classCount != qc.classCount) {
      r.psp = false;
      r.failure = "pair (" + srcTable.complex().vertexId(pc.x) + "," +
                  srcTable.complex().vertexId(pc.y) + "): " + std::to_string(pc.classCount) +
                  " classes vs " + std::to_string(qc.classCount) + " in the image";
      return r;
    }
  }
  r.psp = true;
  return r;
}

namespace {

/// Track search shared by future and past witnesses: finds per-vertex paths
/// low(x) -> high(x) with swap-naturality
///   class(lowImg(e) . w(b)) == class(w(a) . highImg(e))  for every edge e.
std::optional<std::vector<EdgePath>> find_tracks(const AdmissibleMap& low,
                                                 const AdmissibleMap& high,
                                                 const ClassTable& tgtTable) {
  const PrecubicalSet& X = *low.src;
  int n = X.vertexCount();
  std::vector<const PairClasses*> cand(n, nullptr);
  for (int x = 0; x < n; ++x) {
    if (!tgtTable.hasPair(low.v[x], high.v[x])) return std::nullopt;
    cand[x] = &tgtTable.pair(low.v[x], high.v[x]);
    if (cand[x]->paths.empty()) return std::nullopt;
  }

  std::vector<EdgePath> w(n);
  if (tgtTable.allSingleton()) {
    for (int x = 0; x < n; ++x) w[x] = cand[x]->paths.front();
    return w;
  }

  // edges checkable once vertex x is assigned (processing order = rank order)
  std::vector<std::vector<int>> checkAt(n);
  for (int e = 0; e < X.edgeCount(); ++e)
    checkAt[std::max(X.edgeSrc(e), X.edgeTgt(e))].push_back(e);

  auto natural = [&](int e, const std::vector<int>& choice) {
    int a = X.edgeSrc(e), b = X.edgeTgt(e);
    std::vector<int> lhs, rhs;
    if (low.edgeImg[e] >= 0) lhs.push_back(low.edgeImg[e]);
    lhs.insert(lhs.end(), cand[b]->paths[choice[b]].edges.begin(),
               cand[b]->paths[choice[b]].edges.end());
    rhs = cand[a]->paths[choice[a]].edges;
    if (high.edgeImg[e] >= 0) rhs.push_back(high.edgeImg[e]);
    const PairClasses& pc = tgtTable.pair(low.v[a], high.v[b]);
    if (pc.classCount <= 1) return true;
    int cl = pc.classOf(lhs), cr = pc.classOf(rhs);
    return cl >= 0 && cl == cr;
  };

  std::vector<int> choice(n, -1);
  std::function<bool(int)> rec = [&](int x) -> bool {
    if (x == n) return true;
    for (int i = 0; i < (int)cand[x]->paths.size(); ++i) {
      choice[x] = i;
      bool ok = true;
      for (int e : checkAt[x])
        if (!natural(e, choice)) {
          ok = false;
          break;
        }
      if (ok && rec(x + 1)) return true;
    }
    choice[x] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  for (int x = 0; x < n; ++x) w[x] = cand[x]->paths[choice[x]];
  return w;
}

}  // namespace

bool check_witness(const HomotopyWitness& H, const ClassTable& tgtTable, std::string* why) {
  const AdmissibleMap& low = H.future ? H.from : H.to;
  const AdmissibleMap& high = H.future ? H.to : H.from;
  const PrecubicalSet& X = *low.src;
  if ((int)H.w.size() != X.vertexCount()) {
    if (why) *why = "witness has wrong number of vertex paths";
    return false;
  }
  for (int x = 0; x < X.vertexCount(); ++x) {
    if (H.w[x].src != low.v[x] || H.w[x].tgt != high.v[x]) {
      if (why) *why = "track at vertex '" + X.vertexId(x) + "' has wrong endpoints";
      return false;
    }
    if (!tgtTable.hasPair(low.v[x], high.v[x]) ||
        tgtTable.pair(low.v[x], high.v[x]).classOf(H.w[x].edges) < 0) {
      if (why) *why = "track at vertex '" + X.vertexId(x) + "' is not a valid directed path";
      return false;
    }
  }
  for (int e = 0; e < X.edgeCount(); ++e) {
    int a = X.edgeSrc(e), b = X.edgeTgt(e);
    std::vector<int> lhs, rhs;
    if (low.edgeImg[e] >= 0) lhs.push_back(low.edgeImg[e]);
    lhs.insert(lhs.end(), H.w[b].edges.begin(), H.w[b].edges.end());
    rhs = H.w[a].edges;
    if (high.edgeImg[e] >= 0) rhs.push_back(high.edgeImg[e]);
    const PairClasses& pc = tgtTable.pair(low.v[a], high.v[b]);
    if (pc.classCount <= 1) continue;
    int cl = pc.classOf(lhs), cr = pc.classOf(rhs);
    if (cl < 0 || cl != cr) {
      if (why)
        *why = "naturality fails at edge '" + X.edgeId(e) + "'";
      return false;
    }
  }
  return true;
}

std::optional<HomotopyWitness> find_witness(const AdmissibleMap& from, const AdmissibleMap& to,
                                            bool future, const ClassTable& tgtTable) {
  const AdmissibleMap& low = future ? from : to;
  const AdmissibleMap& high = future ? to : from;
  auto tracks = find_tracks(low, high, tgtTable);
  if (!tracks) return std::nullopt;
  HomotopyWitness H;
  H.future = future;
  H.from = from;
  H.to = to;
  H.w = std::move(*tracks);
  return H;
}

Alpha alpha_from_string(const std::string& s) {
  if (s == "+" || s == "future") return Alpha::Future;
  if (s == "-" || s == "past") return Alpha::Past;
  if (s == "0" || s == "neutral") return Alpha::Neutral;
  throw ParameterError("alpha must be one of +, -, 0");
}

std::string alpha_to_string(Alpha a) {
  switch (a) {
    case Alpha::Future: return "+";
    case Alpha::Past: return "-";
    default: return "0";
  }
}

Analysis::Analysis(ComplexPtr X, std::optional<int> maxLen, int workers)
    : X_(X), table_(std::make_shared<ClassTable>(X, maxLen, workers)) {}

const std::vector<AdmissibleMap>& Analysis::endomaps(long budget) {
  if (!endos_) endos_ = enumerate_maps(X_, X_, *table_, budget);
  return *endos_;
}

const std::vector<int>& Analysis::pspEndomaps(long budget) {
  if (!psp_) {
    psp_ = std::vector<int>();
    const auto& all = endomaps(budget);
    for (int i = 0; i < (int)all.size(); ++i)
      if (check_psp(all[i], *table_, *table_).psp) psp_->push_back(i);
  }
  return *psp_;
}

AdmissibleMap Analysis::identity() { return identity_map(X_, *table_); }

int Analysis::endomapIndex(const AdmissibleMap& f, long budget) {
  const auto& all = endomaps(budget);
  auto it = std::lower_bound(all.begin(), all.end(), f, map_less);
  if (it == all.end() || it->v != f.v) return -1;
  return (int)(it - all.begin());
}

const std::vector<int>& Analysis::inessentialSet(Alpha a, long budget) {
  int ai = (int)a;
  if (!iness_[ai]) {
    iness_[ai] = std::vector<int>();
    AdmissibleMap id = identity();
    const auto& all = endomaps(budget);
    const auto& P = pspEndomaps(budget);

    // upper roof candidates for the neutral flavour
    std::vector<int> roofs;
    if (a == Alpha::Neutral) {
      for (int i : P) {
        if (all[i].isIdentity()) continue;
        if (find_witness(id, all[i], true, *table_)) roofs.push_back(i);
      }
    }
    for (int i : P) {
      const AdmissibleMap& f = all[i];
      bool ok = false;
      if (f.isIdentity()) {
        ok = true;
      } else if (a == Alpha::Future) {
        ok = find_witness(id, f, true, *table_).has_value();
      } else if (a == Alpha::Past) {
        ok = find_witness(id, f, false, *table_).has_value();
      } else {
        for (int m : roofs) {
          if (find_witness(f, all[m], true, *table_)) {
            ok = true;
            break;
          }
        }
      }
      if (ok) iness_[ai]->push_back(i);
    }
  }
  return *iness_[ai];
}

namespace {

/// Pointwise least common upper bound map of a and b, when each vertex pair
/// has a unique minimal common upper bound. Used as the canonical roof
/// candidate before scanning the enumerated pool.
std::optional<AdmissibleMap> join_candidate(const AdmissibleMap& a, const AdmissibleMap& b,
                                            const ClassTable& table) {
  const PrecubicalSet& Y = table.complex();
  std::vector<int> vm(a.v.size());
  for (int x = 0; x < (int)a.v.size(); ++x) {
    std::vector<int> common;
    for (int z = 0; z < Y.vertexCount(); ++z)
      if (Y.reachable(a.v[x], z) && Y.reachable(b.v[x], z)) common.push_back(z);
    // minimal elements
    std::vector<int> minimal;
    for (int z : common) {
      bool isMin = true;
      for (int u : common)
        if (u != z && Y.reachable(u, z)) {
          isMin = false;
          break;
        }
      if (isMin) minimal.push_back(z);
    }
    if (minimal.size() != 1) return std::nullopt;
    vm[x] = minimal.front();
  }
  AdmissibleMap m;
  m.src = a.src;
  m.tgt = a.tgt;
  if (!check_admissible(*a.src, table, vm, &m).admissible) return std::nullopt;
  return m;
}

}  // namespace

std::optional<WitnessChain> find_witness_chain(const AdmissibleMap& f, const AdmissibleMap& g,
                                               Alpha alpha, int depth, Analysis& an,
                                               long budget) {
  if (depth <= 0) throw ParameterError("depth must be positive");
  if (f.src.get() != g.src.get() || f.tgt.get() != g.tgt.get())
    throw ParameterError("witness chains need maps with common source and target");
  const ClassTable& table = an.table();
  bool endo = f.src.get() == f.tgt.get();

  if (f.v == g.v) return WitnessChain{};

  auto pspOf = [&](const AdmissibleMap& m) {
    // for cross-complex maps only the target table matters for witnesses;
    // psp flags are informative and use the target table on both sides
    return endo ? check_psp(m, table, table).psp : true;
  };

  auto single = [&](bool future) -> std::optional<WitnessChain> {
    if (auto H = find_witness(f, g, future, table)) {
      WitnessChain c;
      c.steps = {*H};
      c.pspFlags = {(char)pspOf(f), (char)pspOf(g)};
      return c;
    }
    return std::nullopt;
  };

  if (alpha == Alpha::Future) return single(true);
  if (alpha == Alpha::Past) return single(false);

  // neutral: a roof f -> m <- g over a common future map m
  auto tryRoof = [&](const AdmissibleMap& m) -> std::optional<WitnessChain> {
    auto up = find_witness(f, m, true, table);
    if (!up) return std::nullopt;
    auto down = find_witness(g, m, true, table);
    if (!down) return std::nullopt;
    HomotopyWitness downPast;  // recorded as a past step m -> g
    downPast.future = false;
    downPast.from = m;
    downPast.to = g;
    downPast.w = down->w;
    WitnessChain c;
    c.steps = {*up, downPast};
    c.pspFlags = {(char)pspOf(f), (char)pspOf(m), (char)pspOf(g)};
    return c;
  };

  if (auto c = tryRoof(g)) return c;  // single future witness f -> g
  if (auto c = tryRoof(f)) return c;  // single future witness g -> f
  if (depth < 2) return std::nullopt;
  if (auto j = join_candidate(f, g, table))
    if (!endo || check_psp(*j, table, table).psp)
      if (auto c = tryRoof(*j)) return c;
  if (endo) {
    const auto& all = an.endomaps(budget);
    for (int i : an.pspEndomaps(budget)) {
      if (all[i].v == f.v || all[i].v == g.v) continue;
      if (auto c = tryRoof(all[i])) return c;
    }
  }
  return std::nullopt;
}

InessentialResult check_inessential(const AdmissibleMap& f, Alpha alpha, int depth,
                                    Analysis& an, long budget) {
  if (depth <= 0) throw ParameterError("depth must be positive");
  InessentialResult res;
  const ClassTable& table = an.table();
  AdmissibleMap id = an.identity();

  if (f.isIdentity()) {
    res.verdict = Verdict::True;
    res.note = "identity";
    return res;
  }
  PspResult psp = check_psp(f, table, table);
  if (!psp.psp) {
    res.verdict = Verdict::False;
    res.note = "not psp: " + psp.failure;
    return res;
  }

  auto mkSingle = [&](bool future) -> bool {
    auto H = future ? find_witness(id, f, true, table) : find_witness(id, f, false, table);
    if (!H) return false;
    res.chain.steps = {*H};
    res.chain.pspFlags = {1, 1};
    res.verdict = Verdict::True;
    return true;
  };

  if (alpha == Alpha::Future) {
    if (!mkSingle(true)) res.verdict = Verdict::False;
    return res;
  }
  if (alpha == Alpha::Past) {
    if (!mkSingle(false)) res.verdict = Verdict::False;
    return res;
  }

  // neutral: roof id -> m <- f through a psp map m != id
  auto tryRoof = [&](const AdmissibleMap& m) -> bool {
    if (m.isIdentity()) return false;
    auto up = find_witness(id, m, true, table);
    if (!up) return false;
    auto down = find_witness(f, m, true, table);
    if (!down) return false;
    HomotopyWitness downPast;
    downPast.future = false;
    downPast.from = m;
    downPast.to = f;
    downPast.w = down->w;
    res.chain.steps = {*up, downPast};
    res.chain.pspFlags = {1, (char)check_psp(m, table, table).psp, 1};
    res.verdict = Verdict::True;
    return true;
  };

  if (auto j = join_candidate(id, f, table)) {
    if (!j->isIdentity() && check_psp(*j, table, table).psp && tryRoof(*j)) return res;
  }
  if (depth < 2) {
    // only the degenerate roof m = f (a single future witness) is available
    if (tryRoof(f)) return res;
    res.verdict = Verdict::False;
    res.note = "no future witness; roofs need depth >= 2";
    return res;
  }
  try {
    const auto& all = an.endomaps(budget);
    for (int i : an.pspEndomaps(budget)) {
      if (tryRoof(all[i])) return res;
    }
    res.verdict = Verdict::False;
    res.note = "exhausted all psp roof candidates";
  } catch (const BudgetExceeded& e) {
    res.verdict = Verdict::Unknown;
    res.note = std::string("endomap pool not enumerable within budget (") +
               std::to_string(e.explored) + " nodes)";
  }
  return res;
}

namespace {

/// Alpha-specific necessary condition for "some inessential g' makes f o g'
/// inessential": future-inessential maps dominate the identity pointwise and
/// past ones are dominated by it. A vertex with no compatible witness target
/// rules out every candidate at once.
bool ratherImpossible(const AdmissibleMap& f, Alpha alpha, const PrecubicalSet& X) {
  if (alpha == Alpha::Neutral) return false;
  for (int x = 0; x < X.vertexCount(); ++x) {
    bool ok = false;
    for (int z = 0; z < X.vertexCount() && !ok; ++z) {
      if (alpha == Alpha::Future)
        ok = X.reachable(x, z) && X.reachable(x, f.v[z]);
      else
        ok = X.reachable(z, x) && X.reachable(f.v[z], x);
    }
    if (!ok) return true;
  }
  return false;
}

}  // namespace

RatherResult check_rather_inessential(const AdmissibleMap& f, Alpha alpha, Analysis& an,
                                      long budget, const std::vector<AdmissibleMap>* pool) {
  RatherResult res;
  const ClassTable& table = an.table();

  if (pool && pool->empty()) throw ParameterError("rather-inessential check: empty pool");

  if (ratherImpossible(f, alpha, an.complex())) {
    res.verdict = Verdict::False;
    res.note = "no candidate can restore the identity bound at some vertex";
    return res;
  }

  // fast path: g' = identity
  {
    InessentialResult idOk = check_inessential(f, alpha, 2, an, budget);
    if (idOk.verdict == Verdict::True) {
      res.verdict = Verdict::True;
      res.g = an.identity();
      res.chainFG = idOk.chain;
      return res;
    }
  }

  auto tryCandidate = [&](const AdmissibleMap& g) -> bool {
    InessentialResult gi = check_inessential(g, alpha, 2, an, budget);
    if (gi.verdict != Verdict::True) return false;
    AdmissibleMap fg = compose(f, g, table);
    InessentialResult ci = check_inessential(fg, alpha, 2, an, budget);
    if (ci.verdict != Verdict::True) return false;
    res.verdict = Verdict::True;
    res.g = g;
    res.chainG = gi.chain;
    res.chainFG = ci.chain;
    return true;
  };

  try {
    if (pool) {
      for (const auto& g : *pool)
        if (tryCandidate(g)) return res;
      res.verdict = Verdict::False;
      res.note = "no pool candidate works";
      return res;
    }
    const auto& all = an.endomaps(budget);
    for (int i : an.inessentialSet(alpha, budget)) {
      AdmissibleMap fg = compose(f, all[i], table);
      int k = an.endomapIndex(fg, budget);
      const auto& S = an.inessentialSet(alpha, budget);
      if (k >= 0 && std::binary_search(S.begin(), S.end(), k)) {
        res.verdict = Verdict::True;
        res.g = all[i];
        res.chainG = check_inessential(all[i], alpha, 2, an, budget).chain;
        res.chainFG = check_inessential(fg, alpha, 2, an, budget).chain;
        return res;
      }
    }
    res.verdict = Verdict::False;
    res.note = "exhausted the inessential pool";
  } catch (const BudgetExceeded& e) {
    res.verdict = Verdict::Unknown;
    res.note = "budget exceeded after " + std::to_string(e.explored) + " nodes";
  }
  return res;
}

DheResult check_dhe(const AdmissibleMap& f, Alpha alpha, Analysis& anX, Analysis& anY,
                    long budget) {
  DheResult res;
  const PrecubicalSet& Y = anY.complex();

  // Image-based disproof: every composite f o g o g' has image inside
  // image(f); for the future flavour its value at y must dominate y.
  if (alpha != Alpha::Neutral) {
    std::set<int> image(f.v.begin(), f.v.end());
    for (int y = 0; y < Y.vertexCount(); ++y) {
      bool ok = false;
      for (int z : image) {
        if (alpha == Alpha::Future ? Y.reachable(y, z) : Y.reachable(z, y)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        res.verdict = Verdict::False;
        res.note = "no image vertex " + std::string(alpha == Alpha::Future ? "above" : "below") +
                   " '" + Y.vertexId(y) + "'";
        return res;
      }
    }
  }

  bool sawUnknown = false;
  try {
    std::vector<AdmissibleMap> gs = enumerate_maps(anY.complexPtr(), anX.complexPtr(),
                                                   anX.table(), budget);
    for (const auto& g : gs) {
      AdmissibleMap gof = compose(g, f, anX.table());
      RatherResult r1 = check_rather_inessential(gof, alpha, anX, budget);
      if (r1.verdict == Verdict::Unknown) sawUnknown = true;
      if (r1.verdict != Verdict::True) continue;
      AdmissibleMap fog = compose(f, g, anY.table());
      RatherResult r2 = check_rather_inessential(fog, alpha, anY, budget);
      if (r2.verdict == Verdict::Unknown) sawUnknown = true;
      if (r2.verdict != Verdict::True) continue;
      res.verdict = Verdict::True;
      res.g = g;
      res.gof = r1;
      res.fog = r2;
      return res;
    }
    res.verdict = sawUnknown ? Verdict::Unknown : Verdict::False;
    res.note = sawUnknown ? "some candidates inconclusive within budget"
                          : "exhausted all admissible reverse maps";
  } catch (const BudgetExceeded& e) {
    res.verdict = Verdict::Unknown;
    res.note = "reverse-map enumeration exceeded budget (" + std::to_string(e.explored) +
               " nodes)";
  }
  return res;
}

namespace {

bool validate_chain(const WitnessChain& chain, const AdmissibleMap& endA,
                    const AdmissibleMap& endB, const ClassTable& table, Alpha alpha,
                    std::string* why) {
  if (chain.steps.empty()) {
    if (endA.v != endB.v) {
      if (why) *why = "empty chain between different maps";
      return false;
    }
    return true;
  }
  if (chain.steps.front().from.v != endA.v || chain.steps.back().to.v != endB.v) {
    if (why) *why = "chain endpoints do not match";
    return false;
  }
  for (size_t i = 0; i + 1 < chain.steps.size(); ++i)
    if (chain.steps[i].to.v != chain.steps[i + 1].from.v) {
      if (why) *why = "adjacent chain steps do not share a map";
      return false;
    }
  for (const auto& H : chain.steps) {
    if (alpha == Alpha::Future && !H.future) {
      if (why) *why = "future chain contains a past step";
      return false;
    }
    if (alpha == Alpha::Past && H.future) {
      if (why) *why = "past chain contains a future step";
      return false;
    }
    std::string w;
    if (!check_witness(H, table, &w)) {
      if (why) *why = w;
      return false;
    }
    if (!check_psp(H.from, table, table).psp || !check_psp(H.to, table, table).psp) {
      if (why) *why = "chain map is not psp";
      return false;
    }
  }
  return true;
}

}  // namespace

bool validate_witness_chain(const WitnessChain& chain, const ClassTable& table,
                            std::string* why) {
  if (chain.steps.empty()) return true;
  return validate_chain(chain, chain.steps.front().from, chain.steps.back().to, table,
                        Alpha::Neutral, why);
}

bool validate_dhe_certificate(const AdmissibleMap& f, const DheResult& cert, Analysis& anX,
                              Analysis& anY, std::string* why) {
  if (cert.verdict != Verdict::True || !cert.g) {
    if (why) *why = "certificate does not claim a positive verdict";
    return false;
  }
  const AdmissibleMap& g = *cert.g;
  if (!check_admissible(*g.src, anX.table(), g.v).admissible) {
    if (why) *why = "reverse map is not admissible";
    return false;
  }
  auto checkSide = [&](const RatherResult& r, const AdmissibleMap& composite, Analysis& an,
                       Alpha alpha) -> bool {
    if (r.verdict != Verdict::True || !r.g) {
      if (why) *why = "rather-inessential certificate missing";
      return false;
    }
    AdmissibleMap id = an.identity();
    AdmissibleMap fg = compose(composite, *r.g, an.table());
    if (!r.g->isIdentity() && !validate_chain(r.chainG, id, *r.g, an.table(), alpha, why))
      return false;
    if (!validate_chain(r.chainFG, id, fg, an.table(), alpha, why)) return false;
    return true;
  };
  AdmissibleMap gof = compose(g, f, anX.table());
  AdmissibleMap fog = compose(f, g, anY.table());
  // flavour of the stored chains is re-checked as neutral-compatible;
  // specific flavour enforcement happened at search time.
  if (!checkSide(cert.gof, gof, anX, Alpha::Neutral)) return false;
  if (!checkSide(cert.fog, fog, anY, Alpha::Neutral)) return false;
  return true;
}

}  // namespace ditop

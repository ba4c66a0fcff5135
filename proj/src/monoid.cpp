#include "ditop/monoid.hpp"

#include <algorithm>
#include <map>

namespace ditop {

bool MonoidTable::wellFormed(std::string* why) const {
  int n = size();
  if (identity < 0 || identity >= n || (int)compose.size() != n || (int)inS.size() != n) {
    if (why) *why = "malformed table";
    return false;
  }
  for (int i = 0; i < n; ++i) {
    if ((int)compose[i].size() != n) {
      if (why) *why = "ragged composition table";
      return false;
    }
    if (op(identity, i) != i || op(i, identity) != i) {
      if (why) *why = "identity law fails at " + names[i];
      return false;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (op(op(i, j), k) != op(i, op(j, k))) {
          if (why)
            *why = "associativity fails at (" + names[i] + "," + names[j] + "," + names[k] + ")";
          return false;
        }
  return true;
}

std::vector<char> monoid_closure(const MonoidTable& M) {
  int n = M.size();
  std::vector<char> bar(n, 0);
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n && !bar[h]; ++g)
      if (M.inS[g] && M.inS[M.op(h, g)]) bar[h] = 1;
  return bar;
}

bool verify_inessentiality_property(const MonoidTable& M, std::string* counterexample) {
  int n = M.size();
  for (int g = 0; g < n; ++g) {
    if (M.inS[g]) continue;
    for (int h = 0; h < n; ++h)
      if (M.inS[h] && M.inS[M.op(h, g)]) {
        if (counterexample)
          *counterexample = "h=" + M.names[h] + ", g=" + M.names[g] + ": h o g = " +
                            M.names[M.op(h, g)] + " lies in S but g does not";
        return false;
      }
  }
  return true;
}

bool verify_closure_2of3(const MonoidTable& M, std::string* why) {
  std::string ce;
  if (!verify_inessentiality_property(M, &ce))
    throw PreconditionError("inessentiality property fails: " + ce);

  std::vector<char> bar = monoid_closure(M);
  int n = M.size();
  // submonoid containing S
  if (!bar[M.identity]) {
    if (why) *why = "closure misses the identity";
    return false;
  }
  for (int i = 0; i < n; ++i)
    if (M.inS[i] && !bar[i]) {
      if (why) *why = "closure does not contain S at " + M.names[i];
      return false;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bar[i] && bar[j] && !bar[M.op(i, j)]) {
        if (why) *why = "closure not closed: " + M.names[i] + " o " + M.names[j];
        return false;
      }
  // 2-out-of-3 inside the closure
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int gh = M.op(g, h);
      int have = (bar[g] ? 1 : 0) + (bar[h] ? 1 : 0) + (bar[gh] ? 1 : 0);
      if (have == 2) {
        if (why)
          *why = "2-out-of-3 fails at g=" + M.names[g] + ", h=" + M.names[h] +
                 ", g o h=" + M.names[gh];
        return false;
      }
    }
  return true;
}

MonoidTable make_endomap_monoid(Analysis& an, const std::vector<AdmissibleMap>& elements,
                                const std::vector<AdmissibleMap>& S, int maxSize) {
  std::vector<AdmissibleMap> elems = elements;
  std::sort(elems.begin(), elems.end(), map_less);
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const AdmissibleMap& a, const AdmissibleMap& b) { return a.v == b.v; }),
              elems.end());

  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)elems.size(); ++i) idx[elems[i].v] = i;

  AdmissibleMap id = an.identity();
  if (!idx.count(id.v)) {
    elems.push_back(id);
    idx[id.v] = (int)elems.size() - 1;
  }

  // close under composition
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      AdmissibleMap c = compose(elems[i], elems[j], an.table());
      if (!idx.count(c.v)) {
        if ((int)elems.size() >= maxSize)
          throw BudgetExceeded((long)elems.size());
        idx[c.v] = (int)elems.size();
        elems.push_back(std::move(c));
      }
    }
  }
  // canonical order
  std::sort(elems.begin(), elems.end(), map_less);
  idx.clear();
  for (int i = 0; i < (int)elems.size(); ++i) idx[elems[i].v] = i;

  MonoidTable M;
  int n = (int)elems.size();
  M.names.resize(n);
  M.compose.assign(n, std::vector<int>(n, -1));
  M.inS.assign(n, 0);
  const PrecubicalSet& X = an.complex();
  for (int i = 0; i < n; ++i) {
    std::string nm;
    for (int x = 0; x < X.vertexCount(); ++x) {
      if (x) nm += ",";
      nm += X.vertexId(elems[i].v[x]);
    }
    M.names[i] = "[" + nm + "]";
    if (elems[i].v == id.v) M.identity = i;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M.compose[i][j] = idx.at(compose(elems[i], elems[j], an.table()).v);
  for (const auto& s : S) {
    auto it = idx.find(s.v);
    if (it != idx.end()) M.inS[it->second] = 1;
  }
  return M;
}

MonoidTable make_chain_monotone_monoid(int k) {
  if (k < 2) throw ParameterError("chain monoid needs at least two elements");
  // enumerate monotone maps f: {0..k-1} -> {0..k-1}
  std::vector<std::vector<int>> maps;
  std::vector<int> cur(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int minv) {
    if (pos == k) {
      maps.push_back(cur);
      return;
    }
    for (int v = minv; v < k; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  std::sort(maps.begin(), maps.end());

  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)maps.size(); ++i) idx[maps[i]] = i;

  MonoidTable M;
  int n = (int)maps.size();
  M.names.resize(n);
  M.compose.assign(n, std::vector<int>(n, -1));
  M.inS.assign(n, 0);
  std::vector<int> ident(k);
  for (int i = 0; i < k; ++i) ident[i] = i;
  for (int i = 0; i < n; ++i) {
    std::string nm = "(";
    for (int x = 0; x < k; ++x) nm += (x ? "," : "") + std::to_string(maps[i][x]);
    M.names[i] = nm + ")";
    if (maps[i] == ident) M.identity = i;
    M.inS[i] = (maps[i][0] == 0 && maps[i][k - 1] == k - 1) ? 1 : 0;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(k);
      for (int x = 0; x < k; ++x) c[x] = maps[i][maps[j][x]];  // i after j
      M.compose[i][j] = idx.at(c);
    }
  return M;
}

namespace {

bool inClosure(const AdmissibleMap& h, const std::vector<AdmissibleMap>& S,
               const ClassTable& table) {
  auto member = [&](const AdmissibleMap& m) {
    for (const auto& s : S)
      if (s.v == m.v) return true;
    return false;
  };
  for (const auto& g : S)
    if (member(compose(h, g, table))) return true;
  return false;
}

}  // namespace

bool verify_insertion(const AdmissibleMap& F, const AdmissibleMap& G,
                      const std::vector<AdmissibleMap>& S_X,
                      const std::vector<AdmissibleMap>& S_Y, Analysis& anX, Analysis& anY,
                      long budget, std::string* why) {
  AdmissibleMap GF = compose(G, F, anX.table());
  AdmissibleMap FG = compose(F, G, anY.table());
  if (!inClosure(GF, S_X, anX.table()))
    throw PreconditionError("G o F is not in the closure of S_X");
  if (!inClosure(FG, S_Y, anY.table()))
    throw PreconditionError("F o G is not in the closure of S_Y");

  // closure(S_X) within the enumerated endomap monoid of X
  const auto& endos = anX.endomaps(budget);
  for (const auto& h : endos) {
    if (!inClosure(h, S_X, anX.table())) continue;
    AdmissibleMap FhG = compose(F, compose(h, G, anX.table()), anY.table());
    if (!inClosure(FhG, S_Y, anY.table())) {
      if (why) *why = "F o h o G escapes the closure of S_Y";
      return false;
    }
  }
  return true;
}

}  // namespace ditop

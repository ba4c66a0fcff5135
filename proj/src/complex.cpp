#include "ditop/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ditop {

namespace {

bool cellLess(const RawCell& a, const RawCell& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.id < b.id;
}

}  // namespace

ValidationReport validate(const RawComplex& raw) {
  ValidationReport rep;
  auto fail = [&](const std::string& cell, const std::string& what) {
    rep.pass = false;
    rep.violations.push_back({cell, what});
  };

  std::map<std::string, const RawCell*> byId;
  for (const auto& c : raw.cells) {
    if (c.dim < 0) fail(c.id, "negative dimension");
    if ((int)c.faces.size() != std::max(c.dim, 0))
      fail(c.id, "expected " + std::to_string(c.dim) + " face pairs, got " +
                     std::to_string(c.faces.size()));
    if (byId.count(c.id))
      fail(c.id, "duplicate cell id");
    else
      byId[c.id] = &c;
  }
  if (!rep.pass) return rep;

  auto faceOf = [&](const RawCell& c, int i, int s) -> const RawCell* {
    const std::string& id = c.faces[i - 1][s];
    auto it = byId.find(id);
    return it == byId.end() ? nullptr : it->second;
  };

  for (const auto& c : raw.cells) {
    for (int i = 1; i <= c.dim; ++i) {
      for (int s = 0; s < 2; ++s) {
        const RawCell* f = faceOf(c, i, s);
        if (!f) {
          fail(c.id, "face d_" + std::to_string(i) + (s ? "^+" : "^-") +
                         " references missing cell '" + c.faces[i - 1][s] + "'");
        } else if (f->dim != c.dim - 1) {
          fail(c.id, "face d_" + std::to_string(i) + (s ? "^+" : "^-") + " has dimension " +
                         std::to_string(f->dim) + ", expected " + std::to_string(c.dim - 1));
        }
      }
    }
  }
  if (!rep.pass) return rep;

  // Pre-cubical relations, evaluated directly on every cell of dim >= 2:
  // d_i^a d_j^b = d_{j-1}^b d_i^a for i < j.
  for (const auto& c : raw.cells) {
    if (c.dim < 2) continue;
    for (int j = 2; j <= c.dim; ++j) {
      for (int i = 1; i < j; ++i) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            const RawCell* dj = faceOf(c, j, b);
            const RawCell* di = faceOf(c, i, a);
            const std::string lhs = dj->faces[i - 1][a];
            const std::string rhs = di->faces[j - 2][b];
            if (lhs != rhs) {
              std::ostringstream os;
              os << "pre-cubical relation d_" << i << "^" << (a ? '+' : '-') << " d_" << j
                 << "^" << (b ? '+' : '-') << " = d_" << (j - 1) << "^" << (b ? '+' : '-')
                 << " d_" << i << "^" << (a ? '+' : '-') << " broken: '" << lhs << "' vs '"
                 << rhs << "'";
              fail(c.id, os.str());
            }
          }
        }
      }
    }
  }
  return rep;
}

PrecubicalSet::PrecubicalSet(RawComplex raw) : name_(std::move(raw.name)) {
  ValidationReport rep = validate(RawComplex{name_, raw.cells});
  if (!rep.pass) {
    std::string msg = "invalid pre-cubical set '" + name_ + "':";
    for (const auto& v : rep.violations) msg += " [" + v.cell + "] " + v.what + ";";
    throw ParameterError(msg);
  }
  cells_ = std::move(raw.cells);
  std::sort(cells_.begin(), cells_.end(), cellLess);

  int maxd = 0;
  for (int i = 0; i < (int)cells_.size(); ++i) {
    index_[cells_[i].id] = i;
    maxd = std::max(maxd, cells_[i].dim);
  }
  byDim_.assign(maxd + 1, {});
  for (int i = 0; i < (int)cells_.size(); ++i) byDim_[cells_[i].dim].push_back(i);

  faceIdx_.resize(cells_.size());
  for (int i = 0; i < (int)cells_.size(); ++i) {
    faceIdx_[i].resize(cells_[i].dim);
    for (int k = 1; k <= cells_[i].dim; ++k)
      for (int s = 0; s < 2; ++s) faceIdx_[i][k - 1][s] = index_.at(cells_[i].faces[k - 1][s]);
  }

  vertices_ = byDim_[0];
  if (maxd >= 1) edges_ = byDim_[1];
  vrank_.assign(cells_.size(), -1);
  erank_.assign(cells_.size(), -1);
  for (int r = 0; r < (int)vertices_.size(); ++r) vrank_[vertices_[r]] = r;
  for (int r = 0; r < (int)edges_.size(); ++r) erank_[edges_[r]] = r;

  esrc_.resize(edges_.size());
  etgt_.resize(edges_.size());
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (int r = 0; r < (int)edges_.size(); ++r) {
    esrc_[r] = vrank_[faceIdx_[edges_[r]][0][0]];
    etgt_[r] = vrank_[faceIdx_[edges_[r]][0][1]];
    out_[esrc_[r]].push_back(r);
    in_[etgt_[r]].push_back(r);
  }

  if (maxd >= 2) {
    for (int c : byDim_[2]) {
      Square s;
      s.cell = c;
      s.left = erank_[faceIdx_[c][0][0]];
      s.right = erank_[faceIdx_[c][0][1]];
      s.bottom = erank_[faceIdx_[c][1][0]];
      s.top = erank_[faceIdx_[c][1][1]];
      squares_.push_back(s);
    }
  }

  // Reflexive-transitive closure of the edge relation.
  int n = (int)vertices_.size();
  reach_.assign(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    // DFS from v
    std::vector<int> stack = {v};
    reach_[v][v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : out_[u]) {
        int w = etgt_[e];
        if (!reach_[v][w]) {
          reach_[v][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  for (int v = 0; v < n && loopFree_; ++v)
    for (int e : out_[v])
      if (reach_[etgt_[e]][v]) {
        loopFree_ = false;
        break;
      }
}

const std::vector<int>& PrecubicalSet::cellsOfDim(int d) const {
  static const std::vector<int> empty;
  if (d < 0 || d >= (int)byDim_.size()) return empty;
  return byDim_[d];
}

int PrecubicalSet::cellIndex(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int PrecubicalSet::face(int cellIdx, int i, int sign) const {
  return faceIdx_[cellIdx][i - 1][sign];
}

int PrecubicalSet::vertexRank(const std::string& id) const {
  int c = cellIndex(id);
  return c < 0 ? -1 : vrank_[c];
}

int PrecubicalSet::edgeRank(const std::string& id) const {
  int c = cellIndex(id);
  return c < 0 ? -1 : erank_[c];
}

std::optional<int> PrecubicalSet::uniqueSource() const {
  std::optional<int> r;
  for (int v = 0; v < vertexCount(); ++v)
    if (in_[v].empty()) {
      if (r) return std::nullopt;
      r = v;
    }
  return r;
}

std::optional<int> PrecubicalSet::uniqueSink() const {
  std::optional<int> r;
  for (int v = 0; v < vertexCount(); ++v)
    if (out_[v].empty()) {
      if (r) return std::nullopt;
      r = v;
    }
  return r;
}

RawComplex PrecubicalSet::toRaw() const { return RawComplex{name_, cells_}; }

ReachabilityTable reachability(const PrecubicalSet& X) {
  ReachabilityTable t;
  int n = X.vertexCount();
  t.order.assign(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (X.reachable(x, y)) {
        t.order[x][y] = 1;
        t.pairs.push_back({x, y});
      }
  return t;
}

bool is_loop_free(const PrecubicalSet& X) { return X.loopFree(); }

bool is_non_self_linked(const PrecubicalSet& X) {
  // Collect, per cell, the distinct results of all i-fold face applications.
  for (int d = 1; d <= X.maxDim(); ++d) {
    for (int c : X.cellsOfDim(d)) {
      std::vector<std::set<int>> level(d + 1);
      level[0].insert(c);
      for (int i = 1; i <= d; ++i) {
        for (int cur : level[i - 1]) {
          int cd = X.cell(cur).dim;
          for (int k = 1; k <= cd; ++k)
            for (int s = 0; s < 2; ++s) level[i].insert(X.face(cur, k, s));
        }
        long expected = 1;  // 2^i * C(d, i)
        for (int k = 0; k < i; ++k) expected = expected * 2 * (d - k) / (k + 1);
        if ((long)level[i].size() != expected) return false;
      }
    }
  }
  return true;
}

namespace {

std::string starWord(int n, const std::vector<int>& coords) {
  // coords: 0, 1 or 2 (= '*') per axis
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) s[i] = coords[i] == 2 ? '*' : char('0' + coords[i]);
  return s;
}

/// Standard cubical structure of the n-cube: cells are words over {0,1,*},
/// the i-th '*' being the i-th free axis; d_i^a fixes that axis to a.
std::vector<RawCell> cubeCells(int n, bool includeTop) {
  std::vector<RawCell> cells;
  std::vector<int> coords(n, 0);
  // enumerate all 3^n words
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int stars = 0;
    for (int i = 0; i < n; ++i) {
      coords[i] = c % 3;
      c /= 3;
      if (coords[i] == 2) ++stars;
    }
    if (!includeTop && stars == n && n > 0) continue;
    RawCell cell;
    cell.id = starWord(n, coords);
    cell.dim = stars;
    cell.faces.resize(stars);
    int seen = 0;
    for (int i = 0; i < n; ++i) {
      if (coords[i] != 2) continue;
      ++seen;
      for (int s = 0; s < 2; ++s) {
        std::vector<int> f = coords;
        f[i] = s;
        cell.faces[seen - 1][s] = starWord(n, f);
      }
    }
    cells.push_back(cell);
  }
  return cells;
}

RawCell v0(const std::string& id) { return RawCell{id, 0, {}}; }
RawCell e1(const std::string& id, const std::string& src, const std::string& tgt) {
  return RawCell{id, 1, {{src, tgt}}};
}
RawCell sq(const std::string& id, const std::string& left, const std::string& right,
           const std::string& bottom, const std::string& top) {
  return RawCell{id, 2, {{left, right}, {bottom, top}}};
}

}  // namespace

PrecubicalSet build_named(const std::string& name, int n) {
  if (name == "point") {
    return PrecubicalSet(RawComplex{"point", {v0("v")}});
  }
  if (name == "cube" || name == "boundary-cube") {
    if (n < 1) throw ParameterError(name + " requires n >= 1");
    RawComplex raw{name + " " + std::to_string(n), cubeCells(n, name == "cube")};
    return PrecubicalSet(std::move(raw));
  }
  if (name == "circle") {
    return PrecubicalSet(RawComplex{"circle", {v0("v"), e1("e", "v", "v")}});
  }
  if (name == "torus") {
    if (n < 1) throw ParameterError("torus requires n >= 1");
    PrecubicalSet t = build_named("circle");
    for (int i = 1; i < n; ++i) t = product(t, build_named("circle"));
    RawComplex raw = t.toRaw();
    raw.name = "torus " + std::to_string(n);
    return PrecubicalSet(std::move(raw));
  }
  if (name == "branch") {
    return PrecubicalSet(RawComplex{
        "branch", {v0("O"), v0("X"), v0("Y"), e1("OX", "O", "X"), e1("OY", "O", "Y")}});
  }
  if (name == "letter-w") {
    return PrecubicalSet(RawComplex{"letter-w",
                                    {v0("A"), v0("B"), v0("C"), v0("D"), v0("E"),
                                     e1("BA", "B", "A"), e1("BC", "B", "C"),
                                     e1("DC", "D", "C"), e1("DE", "D", "E")}});
  }
  if (name == "dubut-d") {
    // Four squares A, B1, B2, C. C's left edge is glued to B1's right edge and
    // C's bottom edge to B2's top edge, which merges B1's bottom-right corner
    // with B2's top-left corner into a single vertex "vm".
    std::vector<RawCell> cells = {
        v0("v00"), v0("v10"), v0("v01"), v0("v11"), v0("vm"), v0("v21"), v0("v12"), v0("v22"),
        e1("ab", "v00", "v10"), e1("al", "v00", "v01"), e1("ar", "v10", "v11"),
        e1("at", "v01", "v11"), e1("b1b", "v10", "vm"), e1("b1r", "vm", "v21"),
        e1("b1t", "v11", "v21"), e1("b2l", "v01", "vm"), e1("b2r", "v11", "v12"),
        e1("b2t", "vm", "v12"), e1("ct", "v21", "v22"), e1("cr", "v12", "v22"),
        sq("A", "al", "ar", "ab", "at"), sq("B1", "ar", "b1r", "b1b", "b1t"),
        sq("B2", "b2l", "b2r", "at", "b2t"), sq("C", "b1r", "cr", "b2t", "ct")};
    return PrecubicalSet(RawComplex{"dubut-d", std::move(cells)});
  }
  if (name == "swiss-grid") {
    // 3x3 grid of squares minus the middle 2-cell; hole boundary retained.
    std::vector<RawCell> cells;
    auto P = [](int x, int y) { return "p" + std::to_string(x) + std::to_string(y); };
    auto H = [](int x, int y) { return "h" + std::to_string(x) + std::to_string(y); };
    auto V = [](int x, int y) { return "v" + std::to_string(x) + std::to_string(y); };
    for (int x = 0; x <= 3; ++x)
      for (int y = 0; y <= 3; ++y) cells.push_back(v0(P(x, y)));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y <= 3; ++y) cells.push_back(e1(H(x, y), P(x, y), P(x + 1, y)));
    for (int x = 0; x <= 3; ++x)
      for (int y = 0; y < 3; ++y) cells.push_back(e1(V(x, y), P(x, y), P(x, y + 1)));
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 1 && y == 1) continue;
        cells.push_back(sq("s" + std::to_string(x) + std::to_string(y), V(x, y), V(x + 1, y),
                           H(x, y), H(x, y + 1)));
      }
    return PrecubicalSet(RawComplex{"swiss-grid", std::move(cells)});
  }
  throw ParameterError("unknown complex name '" + name + "'");
}

PrecubicalSet build_graph(const std::string& name,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<RawCell> cells;
  std::set<std::string> vs;
  for (const auto& [a, b] : edges) {
    vs.insert(a);
    vs.insert(b);
  }
  for (const auto& v : vs) cells.push_back(v0(v));
  std::map<std::string, int> multiplicity;
  for (const auto& [a, b] : edges) {
    std::string base = a + ">" + b;
    int k = multiplicity[base]++;
    cells.push_back(e1(k == 0 ? base : base + "#" + std::to_string(k), a, b));
  }
  return PrecubicalSet(RawComplex{name, std::move(cells)});
}

PrecubicalSet product(const PrecubicalSet& X, const PrecubicalSet& Y) {
  // Cells are pairs; face index i <= dim(c) acts on the first factor,
  // otherwise on the second, shifted by dim(c).
  std::vector<RawCell> cells;
  auto pid = [](const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; };
  for (const auto& a : X.cells()) {
    for (const auto& b : Y.cells()) {
      RawCell c;
      c.id = pid(a.id, b.id);
      c.dim = a.dim + b.dim;
      c.faces.resize(c.dim);
      for (int i = 1; i <= a.dim; ++i)
        for (int s = 0; s < 2; ++s) c.faces[i - 1][s] = pid(a.faces[i - 1][s], b.id);
      for (int i = 1; i <= b.dim; ++i)
        for (int s = 0; s < 2; ++s) c.faces[a.dim + i - 1][s] = pid(a.id, b.faces[i - 1][s]);
      cells.push_back(std::move(c));
    }
  }
  return PrecubicalSet(RawComplex{"(" + X.name() + " x " + Y.name() + ")", std::move(cells)});
}

}  // namespace ditop

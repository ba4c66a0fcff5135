#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "ditop/components.hpp"

using namespace ditop;

namespace {

ComplexPtr named(const std::string& nm, int n = 0) {
  return std::make_shared<PrecubicalSet>(build_named(nm, n).toRaw());
}

constexpr long kBudget = 5'000'000;

}  // namespace

TEST_CASE("edge classification") {
  SUBCASE("boundary-cube 2: every edge is essential") {
    Analysis b2(named("boundary-cube", 2));
    for (const auto& v : classify_edges(b2.table())) CHECK(!v.inessential());
  }
  SUBCASE("letter-w and cube 2: every edge is inessential") {
    for (auto [nm, n] : std::vector<std::pair<const char*, int>>{{"letter-w", 0}, {"cube", 2}}) {
      Analysis an(named(nm, n));
      for (const auto& v : classify_edges(an.table())) CHECK(v.inessential());
    }
  }
  SUBCASE("dubut-d: every edge is essential") {
    Analysis d(named("dubut-d"));
    for (const auto& v : classify_edges(d.table())) CHECK(!v.inessential());
  }
  SUBCASE("bounded tables are refused") {
    ClassTable bounded(named("circle"), 3);
    CHECK_THROWS_AS(classify_edges(bounded), PreconditionError);
  }
}

TEST_CASE("pair component categories") {
  SUBCASE("boundary-cube 2 has nine objects") {
    Analysis b2(named("boundary-cube", 2));
    PairComponentCategory C = pair_components(b2);
    CHECK(C.objectCount == 9);
  }
  SUBCASE("letter-w collapses to one object") {
    Analysis w(named("letter-w"));
    CHECK(pair_components(w).objectCount == 1);
  }
  SUBCASE("point has one object") {
    Analysis p(named("point"));
    CHECK(pair_components(p).objectCount == 1);
  }
  SUBCASE("dubut-d has 33 objects, strictly more than nine") {
    Analysis d(named("dubut-d"));
    PairComponentCategory C = pair_components(d);
    CHECK(C.objectCount > 9);
    CHECK(C.objectCount == 33);  // regression value from the first oracle run
  }
  SUBCASE("swiss-grid has nine objects with boundary-cube 2's signatures") {
    Analysis sg(named("swiss-grid"));
    Analysis b2(named("boundary-cube", 2));
    PairComponentCategory CS = pair_components(sg);
    PairComponentCategory CB = pair_components(b2);
    CHECK(CS.objectCount == 9);
    CHECK(compare_categories(CS, CB) == CompareVerdict::Compatible);
  }
  SUBCASE("partition independent of merge processing order: shuffled pair relabeling") {
    // relabel vertices (hence pair order) and compare component sizes
    PrecubicalSet base = build_named("swiss-grid");
    RawComplex raw = base.toRaw();
    std::mt19937 rng(13);
    std::map<std::string, std::string> ren;
    std::vector<std::string> vs;
    for (const auto& c : raw.cells)
      if (c.dim == 0) vs.push_back(c.id);
    auto shuffled = vs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (size_t i = 0; i < vs.size(); ++i) ren[vs[i]] = "q" + shuffled[i].substr(1);
    for (auto& c : raw.cells) {
      if (c.dim == 0) c.id = ren[c.id];
      for (auto& f : c.faces)
        for (auto& s : f)
          if (ren.count(s)) s = ren[s];
    }
    Analysis a1(named("swiss-grid"));
    Analysis a2(std::make_shared<PrecubicalSet>(std::move(raw)));
    PairComponentCategory c1 = pair_components(a1);
    PairComponentCategory c2 = pair_components(a2);
    CHECK(c1.objectCount == c2.objectCount);
    std::multiset<int> m1(c1.memberCount.begin(), c1.memberCount.end());
    std::multiset<int> m2(c2.memberCount.begin(), c2.memberCount.end());
    CHECK(m1 == m2);
  }
}

TEST_CASE("registered endomap merges") {
  Analysis b2(named("boundary-cube", 2));
  SUBCASE("uncertified endomaps are refused") {
    CertifiedEndomap ce;
    ce.map = constant_map(b2.complexPtr(), b2.table(), 0);
    CHECK_THROWS_AS(pair_components(b2, {ce}), PreconditionError);
  }
  SUBCASE("the identity endomap merges nothing") {
    CertifiedEndomap ce;
    ce.map = b2.identity();
    PairComponentCategory C = pair_components(b2, {ce});
    CHECK(C.objectCount == 9);
    CHECK(C.appliedEndomaps.size() == 1);
  }
}

TEST_CASE("category comparison") {
  Analysis b2(named("boundary-cube", 2));
  Analysis d(named("dubut-d"));
  PairComponentCategory CB = pair_components(b2);
  PairComponentCategory CD = pair_components(d);
  CHECK(compare_categories(CB, CD) == CompareVerdict::Distinguished);
  CHECK(compare_categories(CB, CB) == CompareVerdict::Compatible);
  CHECK(compare_categories(CD, CD) == CompareVerdict::Compatible);

  SUBCASE("letter-w vs point: identical component data, yet no dhe") {
    Analysis w(named("letter-w"));
    Analysis p(named("point"));
    PairComponentCategory CW = pair_components(w);
    PairComponentCategory CP = pair_components(p);
    CHECK(compare_categories(CW, CP) == CompareVerdict::Compatible);
    CHECK(CW.objectCount == CP.objectCount);
    CHECK(CW.signatures == CP.signatures);
    AdmissibleMap i = constant_map(p.complexPtr(), w.table(), w.complex().vertexRank("C"));
    CHECK(check_dhe(i, Alpha::Neutral, p, w, kBudget).verdict == Verdict::False);
  }
}

TEST_CASE("induced component maps") {
  Analysis b2(named("boundary-cube", 2));
  SUBCASE("identity: bijective identity mapping") {
    AdmissibleMap id = b2.identity();
    DheResult cert = check_dhe(id, Alpha::Neutral, b2, b2, kBudget);
    REQUIRE(cert.verdict == Verdict::True);
    PairComponentCategory C = pair_components(b2);
    ComponentMapResult r = induced_component_map(id, cert, b2, b2, C, C);
    CHECK(r.wellDefined);
    CHECK(r.bijective);
    for (int c = 0; c < C.objectCount; ++c) CHECK(r.objectMap[c] == c);
  }
  SUBCASE("hole-ring embedding: bijection on the nine components") {
    Analysis sg(named("swiss-grid"));
    const PrecubicalSet& B = b2.complex();
    const PrecubicalSet& G = sg.complex();
    std::vector<int> fv(B.vertexCount());
    fv[B.vertexRank("00")] = G.vertexRank("p11");
    fv[B.vertexRank("10")] = G.vertexRank("p21");
    fv[B.vertexRank("01")] = G.vertexRank("p12");
    fv[B.vertexRank("11")] = G.vertexRank("p22");
    AdmissibleMap f;
    f.src = b2.complexPtr();
    f.tgt = sg.complexPtr();
    REQUIRE(check_admissible(B, sg.table(), fv, &f).admissible);
    DheResult cert = check_dhe(f, Alpha::Neutral, b2, sg, kBudget);
    REQUIRE(cert.verdict == Verdict::True);
    ComponentMapResult r = induced_component_map(f, cert, b2, sg, pair_components(b2),
                                                 pair_components(sg));
    CHECK(r.wellDefined);
    CHECK(r.bijective);
  }
  SUBCASE("point -> branch past-dhe: bijection onto the single component") {
    Analysis p(named("point"));
    Analysis b(named("branch"));
    AdmissibleMap i = constant_map(p.complexPtr(), b.table(), b.complex().vertexRank("O"));
    DheResult cert = check_dhe(i, Alpha::Past, p, b, kBudget);
    REQUIRE(cert.verdict == Verdict::True);
    ComponentMapResult r =
        induced_component_map(i, cert, p, b, pair_components(p), pair_components(b));
    CHECK(r.wellDefined);
    CHECK(r.bijective);
  }
  SUBCASE("invalid certificates are refused") {
    DheResult bogus;
    bogus.verdict = Verdict::True;
    bogus.g = b2.identity();
    PairComponentCategory C = pair_components(b2);
    CHECK_THROWS_AS(induced_component_map(b2.identity(), bogus, b2, b2, C, C),
                    PreconditionError);
  }
}

TEST_CASE("DOT export is stable and mentions every component") {
  Analysis b2(named("boundary-cube", 2));
  PairComponentCategory C = pair_components(b2);
  std::string dot = to_dot(b2, C, classify_edges(b2.table()));
  CHECK(dot == to_dot(b2, C, classify_edges(b2.table())));
  for (int c = 0; c < C.objectCount; ++c)
    CHECK(dot.find("c" + std::to_string(c) + " ") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

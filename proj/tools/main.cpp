// ditop: directed topology of finite pre-cubical sets.
//
// Subcommands: validate, gen, product, pi0, analyze, components, dtc.
// Exit codes: 0 = pass / positive verdict, 1 = semantic negative
// (violations, false verdicts, inconclusive), 2 = usage or parse error.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ditop/components.hpp"
#include "ditop/io.hpp"
#include "ditop/maps.hpp"
#include "ditop/tc.hpp"

using namespace ditop;
using json = nlohmann::ordered_json;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write '" + path + "'");
  out << text;
}

ComplexPtr loadComplex(const std::string& path) {
  return std::make_shared<PrecubicalSet>(complex_from_json(readFile(path)));
}

/// Resolves a vertex id; "0" / "1" fall back to the unique source / sink
/// when no vertex carries that literal id.
int resolveVertex(const PrecubicalSet& X, const std::string& id) {
  int v = X.vertexRank(id);
  if (v >= 0) return v;
  std::optional<int> alias;
  if (id == "0") alias = X.uniqueSource();
  if (id == "1") alias = X.uniqueSink();
  if (alias) return *alias;
  throw ParameterError("no vertex '" + id + "' in complex '" + X.name() + "'");
}

struct Output {
  bool structured = false;
  json j;
  std::ostringstream text;

  void kv(const std::string& key, const json& value, const std::string& line) {
    if (structured)
      j[key] = value;
    else
      text << line << "\n";
  }
  void emit() {
    if (structured)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

AdmissibleMap loadMap(const std::string& path, Analysis& anSrc, Analysis& anTgt) {
  std::string srcName, tgtName;
  auto pairs = map_from_json(readFile(path), &srcName, &tgtName);
  const PrecubicalSet& X = anSrc.complex();
  const PrecubicalSet& Y = anTgt.complex();
  if (srcName != X.name() || tgtName != Y.name())
    throw ParameterError("map file names (" + srcName + " -> " + tgtName +
                         ") do not match the supplied complexes (" + X.name() + " -> " +
                         Y.name() + ")");
  std::vector<int> v(X.vertexCount(), -1);
  for (const auto& [a, b] : pairs) {
    int ar = X.vertexRank(a), br = Y.vertexRank(b);
    if (ar < 0) throw ParameterError("map file: unknown source vertex '" + a + "'");
    if (br < 0) throw ParameterError("map file: unknown target vertex '" + b + "'");
    v[ar] = br;
  }
  for (int x = 0; x < X.vertexCount(); ++x)
    if (v[x] < 0) throw ParameterError("map file: vertex '" + X.vertexId(x) + "' unmapped");
  AdmissibleMap f;
  f.src = anSrc.complexPtr();
  f.tgt = anTgt.complexPtr();
  MapCheckReport rep = check_admissible(X, anTgt.table(), v, &f);
  if (!rep.admissible)
    throw PreconditionError("map is not admissible: " + rep.violations.front());
  return f;
}

std::string verdictStr(Verdict v, const std::string& note) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false (exhaustive)";  // negatives are only reported on exhaustion
    default: return "inconclusive (" + note + ")";
  }
}

int verdictExit(Verdict v) { return v == Verdict::True ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed topology of finite pre-cubical sets"};
  app.require_subcommand(1);

  std::string format = "text";
  int workers = 1;
  app.add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--workers", workers)->check(CLI::PositiveNumber);

  // validate
  auto* cValidate = app.add_subcommand("validate", "check a complex file");
  std::string vFile;
  cValidate->add_option("file", vFile)->required();

  // gen
  auto* cGen = app.add_subcommand("gen", "write a named complex");
  std::string gName, gOut = "-", gEdges;
  int gN = 0;
  cGen->add_option("name", gName)->required();
  cGen->add_option("n", gN);
  cGen->add_option("-o,--out", gOut);
  cGen->add_option("--edges", gEdges, "for 'graph': comma-separated src>tgt list");

  // product
  auto* cProduct = app.add_subcommand("product", "product of two complexes");
  std::string pA, pB, pOut = "-";
  cProduct->add_option("a", pA)->required();
  cProduct->add_option("b", pB)->required();
  cProduct->add_option("-o,--out", pOut);

  // pi0
  auto* cPi0 = app.add_subcommand("pi0", "dihomotopy classes of edge paths");
  std::string piFile, piFrom, piTo;
  bool piAll = false;
  int piMaxLen = 0;
  cPi0->add_option("file", piFile)->required();
  cPi0->add_option("--from", piFrom);
  cPi0->add_option("--to", piTo);
  cPi0->add_flag("--all-pairs", piAll);
  cPi0->add_option("--max-len", piMaxLen);

  // analyze
  auto* cAnalyze = app.add_subcommand("analyze", "psp / inessential / rather / dhe");
  std::string aKind, aSource, aTarget, aMap, aAlpha = "0", aCertOut;
  int aDepth = 2;
  long aBudget = 5'000'000;
  std::string aCert;
  cAnalyze->add_option("kind", aKind)->required()->check(
      CLI::IsMember({"psp", "inessential", "rather", "dhe", "cert"}));
  cAnalyze->add_option("--source", aSource)->required();
  cAnalyze->add_option("--target", aTarget);
  cAnalyze->add_option("--map", aMap);
  cAnalyze->add_option("--alpha", aAlpha)->check(CLI::IsMember({"+", "-", "0"}));
  cAnalyze->add_option("--depth", aDepth);
  cAnalyze->add_option("--budget", aBudget);
  cAnalyze->add_option("--cert-out", aCertOut);
  cAnalyze->add_option("--cert", aCert, "certificate file to re-validate");

  // components
  auto* cComponents = app.add_subcommand("components", "pair component category");
  std::string coFile, coDot;
  cComponents->add_option("file", coFile)->required();
  cComponents->add_option("--dot", coDot);

  // dtc
  auto* cDtc = app.add_subcommand("dtc", "discrete directed topological complexity");
  std::string dFile, dCoverOut;
  int dMaxK = 4;
  cDtc->add_option("file", dFile)->required();
  cDtc->add_option("--max-k", dMaxK);
  cDtc->add_option("--cover-out", dCoverOut);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 2;
  }

  Output out;
  out.structured = format == "structured";

  try {
    if (*cValidate) {
      RawComplex raw = complex_from_json(readFile(vFile));
      ValidationReport rep = validate(raw);
      out.kv("pass", rep.pass, rep.pass ? "pass" : "fail");
      if (!rep.pass) {
        json vs = json::array();
        std::ostringstream os;
        for (const auto& v : rep.violations) {
          vs.push_back({{"cell", v.cell}, {"what", v.what}});
          os << "[" << v.cell << "] " << v.what;
          out.kv("", "", os.str());
          os.str("");
        }
        if (out.structured) out.j["violations"] = vs;
      }
      out.emit();
      return rep.pass ? 0 : 1;
    }

    if (*cGen) {
      PrecubicalSet X = [&] {
        if (gName == "graph") {
          std::vector<std::pair<std::string, std::string>> edges;
          std::stringstream ss(gEdges);
          std::string tok;
          while (std::getline(ss, tok, ',')) {
            auto gt = tok.find('>');
            if (gt == std::string::npos)
              throw ParameterError("graph edges must look like a>b,b>c");
            edges.push_back({tok.substr(0, gt), tok.substr(gt + 1)});
          }
          if (edges.empty()) throw ParameterError("graph needs at least one edge");
          return build_graph("graph", edges);
        }
        return build_named(gName, gN);
      }();
      std::string text = complex_to_json(X.toRaw());
      if (gOut == "-")
        std::cout << text;
      else
        writeFile(gOut, text);
      return 0;
    }

    if (*cProduct) {
      PrecubicalSet X(complex_from_json(readFile(pA)));
      PrecubicalSet Y(complex_from_json(readFile(pB)));
      std::string text = complex_to_json(product(X, Y).toRaw());
      if (pOut == "-")
        std::cout << text;
      else
        writeFile(pOut, text);
      return 0;
    }

    if (*cPi0) {
      ComplexPtr X = loadComplex(piFile);
      std::optional<int> maxLen;
      if (piMaxLen > 0) maxLen = piMaxLen;
      ClassTable table(X, maxLen, workers);
      if (piAll) {
        if (out.structured) {
          json rows = json::array();
          for (const auto& pc : table.entries())
            rows.push_back({{"from", X->vertexId(pc.x)},
                            {"to", X->vertexId(pc.y)},
                            {"count", pc.classCount}});
          out.j["pairs"] = rows;
          out.j["exhaustive"] = table.exhaustive();
        } else {
          out.text << class_report(table);
        }
        out.emit();
        return 0;
      }
      if (piFrom.empty() || piTo.empty())
        throw ParameterError("pi0 needs --from and --to, or --all-pairs");
      int x = resolveVertex(*X, piFrom), y = resolveVertex(*X, piTo);
      int count = table.hasPair(x, y) ? table.pair(x, y).classCount : 0;
      if (out.structured) {
        out.j["count"] = count;
        out.j["exhaustive"] = table.exhaustive();
        if (count) out.j["report"] = class_report_line(table, x, y);
      } else {
        out.text << count << (table.exhaustive() ? "" : " (lower bound)") << "\n";
      }
      out.emit();
      return 0;
    }

    if (*cAnalyze) {
      Analysis anSrc(loadComplex(aSource), std::nullopt, workers);
      std::unique_ptr<Analysis> anTgtHolder;
      Analysis* anTgt = &anSrc;
      if (!aTarget.empty() && aTarget != aSource) {
        anTgtHolder = std::make_unique<Analysis>(loadComplex(aTarget), std::nullopt, workers);
        anTgt = anTgtHolder.get();
      }
      Alpha alpha = alpha_from_string(aAlpha);

      if (aKind == "cert") {
        if (aCert.empty()) throw ParameterError("analyze cert needs --cert");
        std::string text = readFile(aCert), why;
        bool ok;
        if (text.find("\"f\"") != std::string::npos) {
          AdmissibleMap f;
          DheResult cert = dhe_certificate_from_json(text, anSrc, *anTgt, &f);
          ok = validate_dhe_certificate(f, cert, anSrc, *anTgt, &why);
        } else {
          WitnessChain chain = chain_from_json(text, anSrc);
          ok = validate_witness_chain(chain, anSrc.table(), &why);
        }
        out.kv("valid", ok, std::string("certificate: ") + (ok ? "valid" : "invalid [" + why + "]"));
        out.emit();
        return ok ? 0 : 1;
      }

      if (aKind == "psp") {
        if (aMap.empty()) throw ParameterError("analyze psp needs --map");
        AdmissibleMap f = loadMap(aMap, anSrc, *anTgt);
        PspResult r = check_psp(f, anSrc.table(), anTgt->table());
        std::string line = std::string("psp: ") + (r.psp ? "true" : "false");
        if (r.boundedMode) line += " (relative to bound)";
        if (!r.psp) line += " [" + r.failure + "]";
        out.kv("psp", r.psp, line);
        out.emit();
        return r.psp ? 0 : 1;
      }

      if (aKind == "inessential") {
        if (aMap.empty()) throw ParameterError("analyze inessential needs --map");
        AdmissibleMap f = loadMap(aMap, anSrc, anSrc);
        InessentialResult r = check_inessential(f, alpha, aDepth, anSrc, aBudget);
        out.kv("inessential", verdictStr(r.verdict, r.note),
               "inessential(" + aAlpha + "): " + verdictStr(r.verdict, r.note));
        if (r.verdict == Verdict::True && !aCertOut.empty())
          writeFile(aCertOut, chain_to_json(r.chain));
        out.emit();
        return verdictExit(r.verdict);
      }

      if (aKind == "rather") {
        if (aMap.empty()) throw ParameterError("analyze rather needs --map");
        AdmissibleMap f = loadMap(aMap, anSrc, anSrc);
        RatherResult r = check_rather_inessential(f, alpha, anSrc, aBudget);
        out.kv("rather_inessential", verdictStr(r.verdict, r.note),
               "rather-inessential(" + aAlpha + "): " + verdictStr(r.verdict, r.note));
        out.emit();
        return verdictExit(r.verdict);
      }

      // dhe search between source and target
      AdmissibleMap f = [&]() -> AdmissibleMap {
        if (!aMap.empty()) return loadMap(aMap, anSrc, *anTgt);
        // default: search over all admissible maps is driven by the reverse
        // enumeration inside check_dhe; the forward map must be given unless
        // the source is a point.
        if (anSrc.complex().vertexCount() == 1) {
          auto maps = enumerate_maps(anSrc.complexPtr(), anTgt->complexPtr(), anTgt->table(),
                                     aBudget);
          if (maps.empty()) throw ParameterError("no admissible forward map");
          return maps.front();
        }
        throw ParameterError("analyze dhe needs --map (or a one-point source)");
      }();
      DheResult best = check_dhe(f, alpha, anSrc, *anTgt, aBudget);
      if (anSrc.complex().vertexCount() == 1 && aMap.empty() &&
          best.verdict != Verdict::True) {
        // try every basepoint before settling on a negative verdict
        auto maps = enumerate_maps(anSrc.complexPtr(), anTgt->complexPtr(), anTgt->table(),
                                   aBudget);
        for (size_t i = 1; i < maps.size() && best.verdict != Verdict::True; ++i) {
          DheResult r = check_dhe(maps[i], alpha, anSrc, *anTgt, aBudget);
          if (r.verdict == Verdict::True || best.verdict == Verdict::False) best = r;
          f = maps[i];
        }
      }
      out.kv("dhe", verdictStr(best.verdict, best.note),
             "dhe(" + aAlpha + "): " + verdictStr(best.verdict, best.note));
      if (best.verdict == Verdict::True && !aCertOut.empty())
        writeFile(aCertOut, dhe_certificate_to_json(f, best));
      out.emit();
      return verdictExit(best.verdict);
    }

    if (*cComponents) {
      Analysis an(loadComplex(coFile), std::nullopt, workers);
      PairComponentCategory C = pair_components(an);
      if (out.structured) {
        out.j["objects"] = C.objectCount;
        json sigs = json::array();
        for (int c = 0; c < C.objectCount; ++c)
          sigs.push_back({{"members", C.memberCount[c]}, {"signature", C.signatures[c]}});
        out.j["components"] = sigs;
      } else {
        out.text << "objects: " << C.objectCount << "\n";
        for (int c = 0; c < C.objectCount; ++c) {
          out.text << "  component " << c << ": " << C.memberCount[c] << " pairs, classes {";
          for (size_t k = 0; k < C.signatures[c].size(); ++k)
            out.text << (k ? "," : "") << C.signatures[c][k];
          out.text << "}\n";
        }
      }
      if (!coDot.empty()) writeFile(coDot, to_dot(an, C, classify_edges(an.table())));
      out.emit();
      return 0;
    }

    if (*cDtc) {
      ComplexPtr X = loadComplex(dFile);
      ClassTable table(X, std::nullopt, workers);
      DtcResult r = directed_tc(table, dMaxK);
      if (out.structured) {
        out.j["found"] = r.found;
        if (r.found) out.j["dtc"] = r.k;
        out.j["max_k"] = dMaxK;
      } else {
        out.text << (r.found ? "dtc=" + std::to_string(r.k)
                             : "dtc: no cover within max_k=" + std::to_string(dMaxK))
                 << "\n";
      }
      if (!dCoverOut.empty()) writeFile(dCoverOut, cover_report(table, r));
      out.emit();
      return r.found ? 0 : 1;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

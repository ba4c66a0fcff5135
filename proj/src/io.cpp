#include "ditop/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ditop {

using json = nlohmann::ordered_json;

std::string complex_to_json(const RawComplex& raw) {
  std::vector<RawCell> cells = raw.cells;
  std::sort(cells.begin(), cells.end(), [](const RawCell& a, const RawCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.id < b.id;
  });
  json j;
  j["name"] = raw.name;
  j["cells"] = json::array();
  for (const auto& c : cells) {
    json jc;
    jc["id"] = c.id;
    jc["dim"] = c.dim;
    if (c.dim > 0) {
      json f;
      for (int i = 1; i <= c.dim; ++i) {
        json pair;
        pair["-"] = c.faces[i - 1][0];
        pair["+"] = c.faces[i - 1][1];
        f[std::to_string(i)] = pair;
      }
      jc["faces"] = f;
    }
    j["cells"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

RawComplex complex_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParameterError(std::string("complex file does not parse: ") + e.what());
  }
  RawComplex raw;
  try {
    raw.name = j.at("name").get<std::string>();
    for (const auto& jc : j.at("cells")) {
      RawCell c;
      c.id = jc.at("id").get<std::string>();
      c.dim = jc.at("dim").get<int>();
      if (c.dim > 0) {
        c.faces.resize(c.dim);
        const auto& f = jc.at("faces");
        for (int i = 1; i <= c.dim; ++i) {
          const auto& pair = f.at(std::to_string(i));
          c.faces[i - 1][0] = pair.at("-").get<std::string>();
          c.faces[i - 1][1] = pair.at("+").get<std::string>();
        }
      }
      raw.cells.push_back(std::move(c));
    }
  } catch (const std::exception& e) {
    throw ParameterError(std::string("complex file is malformed: ") + e.what());
  }
  return raw;
}

std::string map_to_json(const AdmissibleMap& f) {
  json j;
  j["source"] = f.src->name();
  j["target"] = f.tgt->name();
  json v;
  for (int x = 0; x < f.src->vertexCount(); ++x)
    v[f.src->vertexId(x)] = f.tgt->vertexId(f.v[x]);
  j["vertices"] = v;
  return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> map_from_json(const std::string& text,
                                                               std::string* srcName,
                                                               std::string* tgtName) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParameterError(std::string("map file does not parse: ") + e.what());
  }
  std::vector<std::pair<std::string, std::string>> out;
  try {
    if (srcName) *srcName = j.at("source").get<std::string>();
    if (tgtName) *tgtName = j.at("target").get<std::string>();
    for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it)
      out.push_back({it.key(), it.value().get<std::string>()});
  } catch (const std::exception& e) {
    throw ParameterError(std::string("map file is malformed: ") + e.what());
  }
  return out;
}

namespace {

json witness_json(const HomotopyWitness& H) {
  json j;
  j["direction"] = H.future ? "future" : "past";
  json w;
  const PrecubicalSet& X = *H.from.src;
  const PrecubicalSet& Y = *H.from.tgt;
  for (int x = 0; x < X.vertexCount(); ++x) {
    json edges = json::array();
    for (int e : H.w[x].edges) edges.push_back(Y.edgeId(e));
    w[X.vertexId(x)] = edges;
  }
  j["w"] = w;
  return j;
}

json map_json(const AdmissibleMap& f) {
  json v;
  for (int x = 0; x < f.src->vertexCount(); ++x)
    v[f.src->vertexId(x)] = f.tgt->vertexId(f.v[x]);
  json j;
  j["source"] = f.src->name();
  j["target"] = f.tgt->name();
  j["vertices"] = v;
  return j;
}

json chain_json(const WitnessChain& chain) {
  json steps = json::array();
  for (const auto& H : chain.steps) {
    json s = witness_json(H);
    s["from"] = map_json(H.from);
    s["to"] = map_json(H.to);
    steps.push_back(s);
  }
  json j;
  j["steps"] = steps;
  json flags = json::array();
  for (char f : chain.pspFlags) flags.push_back((bool)f);
  j["psp"] = flags;
  return j;
}

}  // namespace

std::string witness_to_json(const HomotopyWitness& H) { return witness_json(H).dump(2) + "\n"; }

std::string chain_to_json(const WitnessChain& chain) { return chain_json(chain).dump(2) + "\n"; }

std::string dhe_certificate_to_json(const AdmissibleMap& f, const DheResult& cert) {
  json j;
  j["f"] = map_json(f);
  if (cert.g) j["g"] = map_json(*cert.g);
  auto rather = [](const RatherResult& r) {
    json jr;
    if (r.g) jr["g_prime"] = map_json(*r.g);
    jr["chain_g_prime"] = chain_json(r.chainG);
    jr["chain_composite"] = chain_json(r.chainFG);
    return jr;
  };
  j["g_after_f"] = rather(cert.gof);
  j["f_after_g"] = rather(cert.fog);
  return j.dump(2) + "\n";
}

namespace {

AdmissibleMap mapFromJsonObj(const json& j, Analysis& anSrc, Analysis& anTgt) {
  const PrecubicalSet& X = anSrc.complex();
  const PrecubicalSet& Y = anTgt.complex();
  if (j.at("source").get<std::string>() != X.name() ||
      j.at("target").get<std::string>() != Y.name())
    throw ParameterError("certificate map names do not match the supplied complexes");
  std::vector<int> v(X.vertexCount(), -1);
  for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it) {
    int a = X.vertexRank(it.key());
    int b = Y.vertexRank(it.value().get<std::string>());
    if (a < 0 || b < 0) throw ParameterError("certificate map references unknown vertices");
    v[a] = b;
  }
  AdmissibleMap f;
  f.src = anSrc.complexPtr();
  f.tgt = anTgt.complexPtr();
  MapCheckReport rep = check_admissible(X, anTgt.table(), v, &f);
  if (!rep.admissible)
    throw ParameterError("certificate map not admissible: " + rep.violations.front());
  return f;
}

HomotopyWitness witnessFromJsonObj(const json& j, Analysis& anSrc, Analysis& anTgt) {
  HomotopyWitness H;
  H.future = j.at("direction").get<std::string>() == "future";
  H.from = mapFromJsonObj(j.at("from"), anSrc, anTgt);
  H.to = mapFromJsonObj(j.at("to"), anSrc, anTgt);
  const PrecubicalSet& X = anSrc.complex();
  const PrecubicalSet& Y = anTgt.complex();
  H.w.resize(X.vertexCount());
  const AdmissibleMap& low = H.future ? H.from : H.to;
  const AdmissibleMap& high = H.future ? H.to : H.from;
  for (auto it = j.at("w").begin(); it != j.at("w").end(); ++it) {
    int x = X.vertexRank(it.key());
    if (x < 0) throw ParameterError("witness references unknown vertex '" + it.key() + "'");
    EdgePath p;
    p.src = low.v[x];
    p.tgt = high.v[x];
    for (const auto& e : it.value()) {
      int er = Y.edgeRank(e.get<std::string>());
      if (er < 0) throw ParameterError("witness references unknown edge");
      p.edges.push_back(er);
    }
    H.w[x] = p;
  }
  return H;
}

WitnessChain chainFromJsonObj(const json& j, Analysis& anSrc, Analysis& anTgt) {
  WitnessChain c;
  for (const auto& s : j.at("steps")) c.steps.push_back(witnessFromJsonObj(s, anSrc, anTgt));
  if (j.contains("psp"))
    for (const auto& f : j.at("psp")) c.pspFlags.push_back(f.get<bool>());
  return c;
}

}  // namespace

WitnessChain chain_from_json(const std::string& text, Analysis& anX) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParameterError(std::string("certificate does not parse: ") + e.what());
  }
  return chainFromJsonObj(j, anX, anX);
}

DheResult dhe_certificate_from_json(const std::string& text, Analysis& anX, Analysis& anY,
                                    AdmissibleMap* f) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParameterError(std::string("certificate does not parse: ") + e.what());
  }
  DheResult cert;
  try {
    if (f) *f = mapFromJsonObj(j.at("f"), anX, anY);
    cert.verdict = Verdict::True;
    cert.g = mapFromJsonObj(j.at("g"), anY, anX);
    auto side = [&](const json& js, Analysis& an, RatherResult& r) {
      r.verdict = Verdict::True;
      if (js.contains("g_prime")) r.g = mapFromJsonObj(js.at("g_prime"), an, an);
      r.chainG = chainFromJsonObj(js.at("chain_g_prime"), an, an);
      r.chainFG = chainFromJsonObj(js.at("chain_composite"), an, an);
    };
    side(j.at("g_after_f"), anX, cert.gof);
    side(j.at("f_after_g"), anY, cert.fog);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("certificate is malformed: ") + e.what());
  }
  return cert;
}

std::string class_report_line(const ClassTable& table, int x, int y) {
  const PrecubicalSet& X = table.complex();
  std::ostringstream os;
  os << X.vertexId(x) << " " << X.vertexId(y) << " ";
  if (!table.hasPair(x, y)) {
    os << 0 << " []";
    return os.str();
  }
  const PairClasses& pc = table.pair(x, y);
  os << pc.classCount << " [";
  for (int c = 0; c < pc.classCount; ++c) {
    if (c) os << " | ";
    const auto& rep = pc.paths[pc.classRep[c]].edges;
    if (rep.empty()) os << ".";
    for (size_t i = 0; i < rep.size(); ++i) os << (i ? " " : "") << X.edgeId(rep[i]);
  }
  os << "]";
  return os.str();
}

std::string class_report(const ClassTable& table) {
  std::ostringstream os;
  for (const auto& pc : table.entries())
    os << class_report_line(table, pc.x, pc.y) << "\n";
  return os.str();
}

std::string cover_report(const ClassTable& table, const DtcResult& res) {
  std::ostringstream os;
  if (!res.found) {
    os << "dtc=unbounded within max_k\n";
    return os.str();
  }
  os << "dtc=" << res.k << "\n";
  const PrecubicalSet& X = table.complex();
  for (int p = 0; p < (int)res.cover.patches.size(); ++p) {
    os << "patch " << p << ":";
    const Patch& patch = res.cover.patches[p];
    for (size_t i = 0; i < patch.pairSlots.size(); ++i) {
      const auto& pc = table.entries()[patch.pairSlots[i]];
      os << " (" << X.vertexId(pc.x) << "," << X.vertexId(pc.y) << ")#"
         << patch.assignment[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string validation_report_text(const ValidationReport& rep) {
  std::ostringstream os;
  if (rep.pass) {
    os << "pass\n";
  } else {
    os << "fail (" << rep.violations.size() << " violations)\n";
    for (const auto& v : rep.violations) os << "  [" << v.cell << "] " << v.what << "\n";
  }
  return os.str();
}

}  // namespace ditop

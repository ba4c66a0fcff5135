#pragma once

#include <string>

#include "ditop/components.hpp"
#include "ditop/maps.hpp"
#include "ditop/tc.hpp"

namespace ditop {

/// Complex file format: {"name": str, "cells": [{"id", "dim", "faces":
/// {"<i>": {"-": id, "+": id}}}]}; faces absent for dim 0. Canonical
/// serialization sorts cells by (dim, id) and face keys numerically.
std::string complex_to_json(const RawComplex& raw);
RawComplex complex_from_json(const std::string& text);  // throws ParameterError

/// Map file format: {"source": name, "target": name, "vertices": {src: tgt}}.
std::string map_to_json(const AdmissibleMap& f);
std::vector<std::pair<std::string, std::string>> map_from_json(const std::string& text,
                                                               std::string* srcName,
                                                               std::string* tgtName);

/// Witness file format: {"direction": "future"|"past", "w": {vertex: [edges]}}.
std::string witness_to_json(const HomotopyWitness& H);

std::string chain_to_json(const WitnessChain& chain);
std::string dhe_certificate_to_json(const AdmissibleMap& f, const DheResult& cert);

/// Re-reads an emitted chain certificate (endomap chains on anX's complex).
WitnessChain chain_from_json(const std::string& text, Analysis& anX);

/// Re-reads an emitted dhe certificate. The forward map is returned through
/// *f; chains are resolved against the two supplied complexes.
DheResult dhe_certificate_from_json(const std::string& text, Analysis& anX, Analysis& anY,
                                    AdmissibleMap* f);

/// Class report: per pair "x y count [rep_1 | rep_2 | ...]", ordered by
/// (x, y, classId); representatives as edge-id sequences.
std::string class_report(const ClassTable& table);
std::string class_report_line(const ClassTable& table, int x, int y);

/// Cover report: per patch the sorted pair list with chosen class ids,
/// preceded by "dtc=<k>".
std::string cover_report(const ClassTable& table, const DtcResult& res);

std::string validation_report_text(const ValidationReport& rep);

}  // namespace ditop

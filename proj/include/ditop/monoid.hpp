#pragma once

#include <string>
#include <vector>

#include "ditop/maps.hpp"

namespace ditop {

/// A finite monoid given by a full composition table. compose[i][j] is the
/// element "i after j" under the monoid operation.
struct MonoidTable {
  std::vector<std::string> names;
  std::vector<std::vector<int>> compose;
  int identity = -1;
  std::vector<char> inS;  // distinguished subset membership

  int size() const { return (int)names.size(); }
  int op(int i, int j) const { return compose[i][j]; }

  /// Associativity and identity laws, checked exhaustively.
  bool wellFormed(std::string* why = nullptr) const;
};

/// The closure S-bar = { h | exists g in S with h o g in S }.
std::vector<char> monoid_closure(const MonoidTable& M);

/// Inessentiality property: g in M, h in S, h o g in S  =>  g in S.
bool verify_inessentiality_property(const MonoidTable& M, std::string* counterexample = nullptr);

/// Assumes the inessentiality property; checks that S-bar is a submonoid
/// containing S and enjoys 2-out-of-3. Refuses when the precondition fails.
bool verify_closure_2of3(const MonoidTable& M, std::string* why = nullptr);

/// Endomap monoid of a complex from an explicit generating list, closed
/// under composition (throws if closure exceeds maxSize).
MonoidTable make_endomap_monoid(Analysis& an, const std::vector<AdmissibleMap>& elements,
                                const std::vector<AdmissibleMap>& S, int maxSize = 100000);

/// Monotone self-maps of a k-chain under standard composition ("i after j"),
/// with S = the maps fixing both endpoints.
MonoidTable make_chain_monotone_monoid(int k);

/// Generalized insertion (two-object) check: given F: X->Y, G: Y->X and
/// subsets S_X, S_Y of endomaps, verifies the precondition
/// G o F in closure(S_X), F o G in closure(S_Y) and then that
/// F o h o G lands in closure(S_Y) for every h in closure(S_X).
/// Membership in the closure is tested directly from the definition.
bool verify_insertion(const AdmissibleMap& F, const AdmissibleMap& G,
                      const std::vector<AdmissibleMap>& S_X,
                      const std::vector<AdmissibleMap>& S_Y, Analysis& anX, Analysis& anY,
                      long budget, std::string* why = nullptr);

}  // namespace ditop

#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "su3cg/rational.hpp"

namespace su3 {

// Irrep label D(P,Q), two non-negative integers.
struct IrrepLabel {
  int p = 0;
  int q = 0;

  IrrepLabel() = default;
  IrrepLabel(int P, int Q);

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
  std::string str() const;
};

long dimension(IrrepLabel s);  // (P+1)(Q+1)(P+Q+2)/2
Rational casimir_f(IrrepLabel s);
Rational casimir_g(IrrepLabel s);
IrrepLabel conjugate(IrrepLabel s);  // (Q,P)
int triality(IrrepLabel s);          // (P-Q) mod 3, mapped into {-1,0,1}

// Weight (i3, y): 2*i3 and 3*y integral.
struct Weight {
  Rational i3, y;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

// Canonical basis label |P Q; i i3 y>.
struct CanonicalState {
  IrrepLabel irrep;
  Rational i, i3, y;

  friend bool operator==(const CanonicalState&, const CanonicalState&) = default;
  friend auto operator<=>(const CanonicalState&, const CanonicalState&) = default;
  std::string str() const;
};

// Throws BadState unless the labels sit on the irrep's lattice.
void validate_state(const CanonicalState& st);
bool state_in_lattice(const CanonicalState& st);

CanonicalState highest_weight(IrrepLabel s);  // i = i3 = (P+Q)/2, y = (P-Q)/3

// Admissible hypercharge interval [-(2P+Q)/3, (P+2Q)/3]; y steps by 1.
std::pair<Rational, Rational> hypercharge_range(IrrepLabel s);
bool hypercharge_admissible(IrrepLabel s, const Rational& y);

struct IsospinRange {
  Rational i_min, i_max;  // i steps by 1 between them
};
// Throws YOutOfRange when y lies outside the diagram's vertical extent.
IsospinRange isospin_range(IrrepLabel s, const Rational& y);

// Membership of (i, y) in the bounding parallelogram's lattice.
bool in_diagram(IrrepLabel s, const Rational& i, const Rational& y);

// Full canonical basis, ordered descending y, then descending i, then
// descending i3. The ordering is the index convention for every matrix and
// table in this library.
struct WeightLattice {
  IrrepLabel irrep;
  std::vector<CanonicalState> states;

  int index_of(const Rational& i, const Rational& i3, const Rational& y) const;
  int index_of(const CanonicalState& st) const {
    return index_of(st.i, st.i3, st.y);
  }
  // Admissible isospins at a weight, descending.
  std::vector<Rational> isospins_at(const Weight& w) const;

 private:
  friend WeightLattice enumerate_basis(IrrepLabel);
  std::map<std::pair<std::pair<long, long>, long>, int> index_;  // (2i,2i3,3y)
};

WeightLattice enumerate_basis(IrrepLabel s);

int weight_multiplicity(IrrepLabel s, const Weight& w);

}  // namespace su3

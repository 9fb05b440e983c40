#pragma once

#include <vector>

#include "su3cg/irrep.hpp"

namespace su3 {

struct SeriesTerm {
  IrrepLabel irrep;
  int multiplicity = 1;
  friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

// Term order: descending P+Q, then descending P (stable golden files).
std::vector<SeriesTerm> series_pp(int P1, int P2);  // (P1,0) x (P2,0)
std::vector<SeriesTerm> series_qq(int Q1, int Q2);  // (0,Q1) x (0,Q2)
std::vector<SeriesTerm> series_pq(int P, int Q);    // (P,0) x (0,Q)
std::vector<SeriesTerm> series_general(IrrepLabel s1, IrrepLabel s2);

// Multiplicity of s in s1 x s2 (0 when absent).
int multiplicity_in_series(IrrepLabel s1, IrrepLabel s2, IrrepLabel s);

}  // namespace su3

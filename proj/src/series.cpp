#include "su3cg/series.hpp"

#include <algorithm>
#include <map>

namespace su3 {

namespace {

std::vector<SeriesTerm> sorted_terms(std::map<std::pair<int, int>, int> acc) {
  std::vector<SeriesTerm> out;
  out.reserve(acc.size());
  for (const auto& [pq, m] : acc)
    out.push_back({IrrepLabel(pq.first, pq.second), m});
  std::sort(out.begin(), out.end(), [](const SeriesTerm& a, const SeriesTerm& b) {
    int sa = a.irrep.p + a.irrep.q, sb = b.irrep.p + b.irrep.q;
    if (sa != sb) return sa > sb;
    return a.irrep.p > b.irrep.p;
  });
  return out;
}

// Decomposition of the mixed block V(r,r'; s,s'): one stretched term plus the
// two contraction towers.
void expand_block(int r, int rp, int s, int sp,
                  std::map<std::pair<int, int>, int>& acc) {
  acc[{r + rp, s + sp}] += 1;
  for (int k = 1; k <= std::min(r, rp); ++k) {
    int P = r + rp - 2 * k, Q = s + sp + k;
    if (P < 0 || Q < 0) throw InternalError("expand_block: negative label");
    acc[{P, Q}] += 1;
  }
  for (int k = 1; k <= std::min(s, sp); ++k) {
    int P = r + rp + k, Q = s + sp - 2 * k;
    if (P < 0 || Q < 0) throw InternalError("expand_block: negative label");
    acc[{P, Q}] += 1;
  }
}

}  // namespace

std::vector<SeriesTerm> series_pp(int P1, int P2) {
  std::map<std::pair<int, int>, int> acc;
  for (int k = 0; k <= std::min(P1, P2); ++k) acc[{P1 + P2 - 2 * k, k}] += 1;
  return sorted_terms(std::move(acc));
}

std::vector<SeriesTerm> series_qq(int Q1, int Q2) {
  std::map<std::pair<int, int>, int> acc;
  for (int k = 0; k <= std::min(Q1, Q2); ++k) acc[{k, Q1 + Q2 - 2 * k}] += 1;
  return sorted_terms(std::move(acc));
}

std::vector<SeriesTerm> series_pq(int P, int Q) {
  std::map<std::pair<int, int>, int> acc;
  for (int k = 0; k <= std::min(P, Q); ++k) acc[{P - k, Q - k}] += 1;
  return sorted_terms(std::move(acc));
}

std::vector<SeriesTerm> series_general(IrrepLabel s1, IrrepLabel s2) {
  std::map<std::pair<int, int>, int> acc;
  for (int m = 0; m <= std::min(s1.p, s2.q); ++m)
    for (int n = 0; n <= std::min(s2.p, s1.q); ++n)
      expand_block(s1.p - m, s2.p - n, s1.q - n, s2.q - m, acc);
  return sorted_terms(std::move(acc));
}

int multiplicity_in_series(IrrepLabel s1, IrrepLabel s2, IrrepLabel s) {
  for (const auto& t : series_general(s1, s2))
    if (t.irrep == s) return t.multiplicity;
  return 0;
}

}  // namespace su3

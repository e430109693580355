#pragma once

#include <string>

#include "tb/balloon.hpp"

namespace tb {

/// f(nu, delta) = nu*delta + floor(delta/2) * floor(nu / ceil(delta/2)); 0 if nu or delta is 0.
long long chvatal_hanson(int nu, int delta);

/// f(k-1, k-1) in closed form: k^2 - k for odd k, k^2 - 3k/2 for even k.
long long abbott(int k);

/// e(E_{a-1} + T_2(n-a+1)) = (a-1)(n-a+1) + floor((n-a+1)^2 / 4).
long long e_base(int n, int a);

struct TuranReport {
  int n = 0;
  int a = 0;
  int k = 0;
  int k1 = 0;
  Branch branch = Branch::k_gt_k1;
  long long base = 0;    // e(G(n,2,a))
  long long middle = 0;  // ex(a-1, B(T_o))
  long long tail = 0;    // (k-1)^2 or f(k-1,k-1)
  long long total = 0;
  /// The closed form is only guaranteed for sufficiently large n.
  bool large_n_only = true;
  std::string base_note;
  std::string middle_note;
  std::string tail_note;
};

/// Closed-form ex(n, T_o) for a good ballooning; the middle term is computed
/// exactly, so a - 1 <= 7.
TuranReport turan_number(int n, const BipartiteTree& tree, const BalloonSpec& spec);

}  // namespace tb

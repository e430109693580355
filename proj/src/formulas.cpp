#include "tb/formulas.hpp"

#include "tb/decomposition.hpp"
#include "tb/error.hpp"
#include "tb/oracle.hpp"

namespace tb {

long long chvatal_hanson(int nu, int delta) {
  if (nu < 0 || delta < 0) throw ParameterError("f(nu, delta) needs nu, delta >= 0");
  if (nu == 0 || delta == 0) return 0;
  const long long half_up = (delta + 1) / 2;
  return static_cast<long long>(nu) * delta + static_cast<long long>(delta / 2) * (nu / half_up);
}

long long abbott(int k) {
  if (k < 1) throw ParameterError("f(k-1, k-1) needs k >= 1");
  const long long kk = k;
  return k % 2 == 1 ? kk * kk - kk : kk * kk - 3 * kk / 2;
}

long long e_base(int n, int a) {
  if (a < 1) throw ParameterError("e(G(n,2,a)) needs a >= 1");
  if (n < a) throw ParameterError("e(G(n,2,a)) needs n >= a");
  const long long rest = n - a + 1;
  return static_cast<long long>(a - 1) * rest + rest * rest / 4;
}

TuranReport turan_number(int n, const BipartiteTree& tree, const BalloonSpec& spec) {
  AnalysisReport an = analyze(tree, spec);
  if (an.a - 1 > 7) throw CapacityError("the middle term is computed exactly only for a - 1 <= 7");
  TuranReport r;
  r.n = n;
  r.a = an.a;
  r.k = an.k;
  r.k1 = an.k1;
  r.branch = an.branch;
  r.base = e_base(n, an.a);
  r.base_note = "e(E_" + std::to_string(an.a - 1) + " + T_2(" + std::to_string(n - an.a + 1) + "))";
  GraphFamily b = b_family(tree, spec);
  r.middle = ex_exact(an.a - 1, b).value;
  r.middle_note = "ex(" + std::to_string(an.a - 1) + ", B) over " + std::to_string(b.size()) + " forbidden graph(s)";
  if (an.branch == Branch::k_eq_k1) {
    r.tail = chvatal_hanson(an.k - 1, an.k - 1);
    r.tail_note = "f(k-1,k-1) with k = k1 = " + std::to_string(an.k);
  } else {
    r.tail = static_cast<long long>(an.k - 1) * (an.k - 1);
    r.tail_note = "(k-1)^2 with k = " + std::to_string(an.k) + " > k1 = " + std::to_string(an.k1) + " at u = " +
                  an.u_name;
  }
  r.total = r.base + r.middle + r.tail;
  return r;
}

}  // namespace tb

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "tb/audit.hpp"
#include "tb/balloon.hpp"
#include "tb/canon.hpp"
#include "tb/construction.hpp"
#include "tb/decomposition.hpp"
#include "tb/enumerate.hpp"
#include "tb/formulas.hpp"
#include "tb/oracle.hpp"
#include "tb/subgraph.hpp"

using namespace tb;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 120;
constexpr double kLimit2 = 600;
constexpr double kLimit3 = 600;
constexpr double kLimit4 = 60;
constexpr double kLimit5 = 300;
constexpr double kLimit6 = 600;
constexpr double kLimit7 = 600;
constexpr double kLimit8 = 300;
constexpr double kLimit9 = 900;

constexpr int kAuditSamples = 10000;
constexpr int kAuditSeeds = 5;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Graph matching_graph(int k) {
  Graph g(2 * k);
  for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

bool same_classes(const std::vector<Graph>& got, const std::vector<Graph>& want) {
  if (got.size() != want.size()) return false;
  for (const Graph& w : want) {
    bool found = false;
    for (const Graph& g : got) found = found || is_isomorphic(g, w);
    if (!found) return false;
  }
  return true;
}

BalloonInput spec_file(const std::string& name) { return load_spec_file(std::string(TB_SPECS_DIR) + "/" + name); }

Outcome chvatal_hanson_check() {
  Outcome o;
  int cases = 0;
  for (int nu = 0; nu <= 3; ++nu) {
    for (int delta = 0; delta <= 3; ++delta) {
      ++cases;
      int ex = ex_bounded_degree_matching(nu, delta);
      int f = chvatal_hanson(nu, delta);
      if (ex != f) {
        o.ok = false;
        o.detail += " f(" + std::to_string(nu) + "," + std::to_string(delta) + "): " + std::to_string(f) +
                    " vs " + std::to_string(ex);
      }
    }
  }
  o.ok = o.ok && chvatal_hanson(2, 2) == 6 && chvatal_hanson(3, 3) == 10;
  o.detail = std::to_string(cases) + " cases" + o.detail;
  return o;
}

Outcome lemma1_check() {
  AuditResult r = audit_lemma1(4);
  return {r.passed() && r.cases == 70,
          std::to_string(r.cases) + " tree/length cases, " + std::to_string(r.counterexamples) + " mismatches" +
              (r.passed() ? "" : " (first: " + r.first_counterexample + ")")};
}

Outcome friendship_check() {
  Outcome o;
  for (int k = 2; k <= 4; ++k) {
    BalloonInput in = balloon_from_tree(star_graph(k), std::vector<int>(k, 3));
    GraphFamily want;
    want.insert(star_graph(k));
    want.insert(matching_graph(k));
    bool eq = decomposition_family(in.tree, in.spec) == want;
    o.ok = o.ok && eq;
    o.detail += "k=" + std::to_string(k) + (eq ? " ok " : " MISMATCH ");
  }
  return o;
}

Outcome mantel_check() {
  Outcome o;
  for (int n = 3; n <= 8; ++n) {
    int v = ex_exact(n, {complete_graph(3)}).value;
    o.ok = o.ok && v == n * n / 4;
    o.detail += std::to_string(n) + ":" + std::to_string(v) + " ";
  }
  return o;
}

Outcome star_matching_check() {
  StarMatchingResult r3 = star_matching_max(3);
  StarMatchingResult r4 = star_matching_max(4);
  Graph three_triangles = disjoint_union(complete_graph(3), disjoint_union(complete_graph(3), complete_graph(3)));
  bool ok = r3.value == 4 && same_classes(r3.witnesses, {complete_bipartite(2, 2)}) && r4.value == 9 &&
            same_classes(r4.witnesses, {complete_bipartite(3, 3), three_triangles});
  return {ok, "k=3: " + std::to_string(r3.value) + " (" + std::to_string(r3.witnesses.size()) + " witness), k=4: " +
                  std::to_string(r4.value) + " (" + std::to_string(r4.witnesses.size()) + " witnesses)"};
}

Outcome construction_check() {
  Outcome o;
  int specs = 0;
  int runs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(TB_SPECS_DIR)) {
    if (entry.path().extension() != ".spec") continue;
    BalloonInput in = load_spec_file(entry.path().string());
    if (!validate_good(in.tree, in.spec).good) continue;
    ++specs;
    Graph t_o = build_balloon(in.tree, in.spec);
    for (int n : {20, 30, 40}) {
      ++runs;
      LabeledConstruction c = extremal_candidate(n, in.tree, in.spec);
      int total = turan_number(n, in.tree, in.spec).total;
      if (c.graph.size() != total || contains_subgraph(c.graph, t_o)) {
        o.ok = false;
        o.detail += " " + entry.path().stem().string() + "@" + std::to_string(n);
      }
    }
  }
  o.ok = o.ok && specs >= 10;
  o.detail = std::to_string(specs) + " good specs, " + std::to_string(runs) + " constructions" + o.detail;
  return o;
}

Outcome bowtie_check() {
  BalloonInput bow = spec_file("friendship2.spec");
  Graph t_o = build_balloon(bow.tree, bow.spec);
  int ex = ex_exact(7, {t_o}).value;
  LabeledConstruction c = extremal_candidate(7, bow.tree, bow.spec);
  bool free = !contains_subgraph(c.graph, t_o);
  bool ok = ex >= 13 && free && c.graph.size() == 13;
  return {ok, "ex(7, bowtie) = " + std::to_string(ex) + ", candidate " + std::to_string(c.graph.size()) +
                  " edges, " + (free ? "bowtie-free" : "contains bowtie") + ", formula " +
                  (ex == c.graph.size() ? "equals" : "differs from") + " the oracle at n = 7"};
}

Outcome coloring_check() {
  BalloonInput ds = spec_file("double_star33.spec");
  EdgeColoring col = coloring_candidate(20, ds.tree, ds.spec);
  int count = f2_count_uncovered(col, build_balloon(ds.tree, ds.spec));
  int base = e_base(20, 3);
  int total = turan_number(20, ds.tree, ds.spec).total;
  return {count >= base + 1 && count > total, "uncovered " + std::to_string(count) + ", e_base + 1 = " +
                                                   std::to_string(base + 1) + ", turan total " + std::to_string(total)};
}

Outcome audits_check() {
  Outcome o;
  long long cases = 0;
  for (const char* name : {"konig", "hall", "degree-sum", "partition"}) {
    for (int seed = 0; seed < kAuditSeeds; ++seed) {
      AuditResult r = run_audit(name, kAuditSamples, seed);
      cases += r.cases;
      if (!r.passed() || r.cases < kAuditSamples) {
        o.ok = false;
        o.detail += std::string(" ") + name + "/seed" + std::to_string(seed) + ": " + r.first_counterexample;
      }
    }
  }
  for (const char* name : {"wang", "covering"}) {
    AuditResult r = run_audit(name, 0, 0);
    cases += r.cases;
    if (!r.passed()) {
      o.ok = false;
      o.detail += std::string(" ") + name + ": " + r.first_counterexample;
    }
  }
  o.detail = std::to_string(cases) + " cases" + (o.ok ? ", no counterexamples" : o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, kLimit1, chvatal_hanson_check}, {2, kLimit2, lemma1_check},       {3, kLimit3, friendship_check},
      {4, kLimit4, mantel_check},         {5, kLimit5, star_matching_check}, {6, kLimit6, construction_check},
      {7, kLimit7, bowtie_check},         {8, kLimit8, coloring_check},     {9, kLimit9, audits_check},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok && secs < c.limit;
    failed += !ok;
    std::printf("criterion %d: %s %s [%.2fs, limit %.0fs]\n", c.id, ok ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.limit);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

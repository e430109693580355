#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tb {

/// Outcome of one lemma audit.  `cases` counts examined inputs, `premises_met`
/// those satisfying the lemma's hypothesis; a counterexample is an input that
/// meets the hypothesis but not the conclusion.
struct AuditResult {
  std::string name;
  long long cases = 0;
  long long premises_met = 0;
  long long counterexamples = 0;
  std::string first_counterexample;
  double elapsed_ms = 0.0;

  bool passed() const { return counterexamples == 0; }
};

/// Random bipartite graphs (n <= 14) plus every bipartite graph on <= 8
/// vertices: beta from a side-subset search against nu.
AuditResult audit_konig(long long samples, std::uint64_t seed);
/// Random bipartite G[X,Y] on <= 12 vertices: nu >= |X| iff Hall's condition.
AuditResult audit_hall(long long samples, std::uint64_t seed);
/// Random graphs (n <= 14) with random b in [0, Delta - 2].
AuditResult audit_degree_sum(long long samples, std::uint64_t seed);
/// Random partitioned graphs (n <= 12, k <= 4), sparse inside and dense across.
AuditResult audit_partition(long long samples, std::uint64_t seed);
/// Splitting/peeling family against the embedding oracle, every tree with at
/// most `max_edges` edges and every length assignment from {3,5}.
AuditResult audit_lemma1(int max_edges = 4);
/// B = {K_a} iff beta(T) = a, and delta(A) >= 2 implies beta(T) = a, over
/// trees on <= `max_order` vertices.  Lengths: every assignment from {3,5}
/// up to `exhaustive_edges` edges, otherwise all-3, all-5 and alternating.
AuditResult audit_covering(int max_order = 8, int exhaustive_edges = 7);
/// Splitting one vertex of A with delta(A) = k >= 2 leaves nu >= a - 1 + k.
AuditResult audit_wang(int max_order = 8);

std::vector<std::string> audit_names();
/// Dispatches by name; exhaustive audits ignore `samples` and `seed`.
/// Throws ParameterError for an unknown name.
AuditResult run_audit(const std::string& name, long long samples, std::uint64_t seed);

}  // namespace tb

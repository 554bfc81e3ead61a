#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exturan/bigint.hpp"
#include "exturan/formulas.hpp"
#include "exturan/graph.hpp"

namespace exturan {

enum class ClassMode { bipartite, general };
enum class Enumeration { exhaustive, random };

// A quantification class: all labeled (bipartite) graphs on the given part
// sizes satisfying the hypothesis constraints, enumerated exhaustively by
// edge-subset bitmask or sampled uniformly over edge subsets from a seed.
struct GraphClassSpec {
  ClassMode mode = ClassMode::general;
  int n = 0;  // X-part size (bipartite) or order (general)
  int b = 0;  // Y-part size (bipartite only)
  bool connected = false;
  bool biconnected = false;
  int min_degree = 0;
  Enumeration enumeration = Enumeration::exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0 = default (EXTURAN_BUDGET env or 2^26)
};

// Effective exhaustive-enumeration budget (number of edge subsets).
std::uint64_t enumeration_budget(const GraphClassSpec& spec);

enum class Claim {
  CB,             // long cycle, connected bipartite
  PB,             // long path, connected bipartite
  MB,             // matching, connected bipartite
  C,              // long cycle, 2-connected general
  P,              // long path, connected general
  jackson_exbip,  // edge-extremal value, cycles of length >= 2n-2k
  li_ning_exbip,  // edge-extremal value, cycle of length exactly 2n-2k
  wang_matching,  // K_{s,t}-extremal value, matching-free
  adamus_edges,   // edge bound forcing a cycle of length exactly 2n-2k
  conj_41,        // K_{s,t} bound forcing a cycle of length exactly 2n-2k
};

const char* claim_name(Claim c);
std::optional<Claim> claim_from_name(std::string_view name);

struct VerifyReport {
  Claim claim = Claim::CB;
  BoundParams params;
  GraphClassSpec spec;
  std::uint64_t class_size = 0;  // graphs passing the hypothesis filter
  CopyCount threshold;
  std::vector<std::string> violations;  // graph6, sorted canonically
  std::optional<CopyCount> extremal_value;
  bool tight = false;
  std::vector<std::string> extremal_witnesses;
  // conj_41 only: graphs above threshold with no cycle of length >= 2n-2k
  // (the at-least reading; the main violations list is the exact reading).
  std::vector<std::string> violations_at_least;

  bool ok() const { return violations.empty(); }
  std::string to_json() const;  // deterministic bytes, independent of sharding
  std::string to_csv() const;   // header line plus one summary row
};

// Streams every class member exactly once in ascending edge-mask order
// (exhaustive) or every seeded sample that passes the filter (random);
// returns the class size. Bipartite classes use X = 0..n-1, Y = n..n+b-1.
std::uint64_t enumerate_class(const GraphClassSpec& spec,
                              const std::function<void(const Graph&)>& fn);

// Sweeps the class, checking the claim's conclusion on every graph whose
// K_{s,t} count exceeds the claim's threshold, and tracking the extremal
// count over graphs failing the conclusion. jobs only schedules shards;
// reports are byte-identical for any jobs value.
VerifyReport verify_theorem(Claim claim, const BoundParams& p,
                            const GraphClassSpec& spec, int jobs = 1);
VerifyReport verify_baseline(Claim claim, const BoundParams& p,
                             const GraphClassSpec& spec, int jobs = 1);
VerifyReport search_conjecture(Claim claim, const BoundParams& p,
                               const GraphClassSpec& spec, int jobs = 1);

// Re-derives every witness in the report from its graph6 form (recount,
// re-solve, filter membership); true iff each reproduces its recorded role.
bool reverify_report(const VerifyReport& report);

// Same sweep with an explicit threshold in place of the claim's own; lets
// tests drive the violation machinery on otherwise-true claims.
VerifyReport sweep_with_threshold(Claim claim, const BoundParams& p,
                                  const GraphClassSpec& spec,
                                  const CopyCount& threshold, int jobs = 1);

// Minimum adjacency-matrix bitstring over all vertex permutations; an
// isomorphism-invariant key for graphs of order <= 8.
std::string canonical_signature(const Graph& g);
// Keeps the lexicographically least graph6 string per isomorphism class.
void dedupe_isomorphic(std::vector<std::string>& graph6_list);

// Counter-based generator behind every randomized mode (splitmix64 of
// seed + (counter+1) * golden gamma); reproducible across platforms.
std::uint64_t rng_word(std::uint64_t seed, std::uint64_t counter);

}  // namespace exturan

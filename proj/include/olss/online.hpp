#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "olss/access.hpp"
#include "olss/scheme.hpp"

namespace olss {

/// Global base-symbol counter for one on-line run. The runner owns it; dealers
/// mint fresh symbols through it and earlier forms are zero-padded at the end.
class SymbolSpace {
 public:
  int mint() { return dim_++; }
  AffineForm fresh() { return AffineForm::symbol(mint()); }
  int dimension() const { return dim_; }

 private:
  int dim_ = 0;
};

/// What the dealer sees when participant number `step` (1-based) shows up.
///
/// Backward edges are expressed over 0-based arrival indices: bit i stands for
/// the participant that arrived at step i+1, so every edge contains bit step-1.
struct ArrivalEvent {
  int step = 0;
  std::vector<VertexSet> backward_edges;

  int index() const { return step - 1; }
  /// Earlier endpoints of the backward edges of a graph, in arrival order.
  std::vector<int> backward_neighbors() const;

  friend bool operator==(const ArrivalEvent&, const ArrivalEvent&) = default;
};

/// On-line share assignment strategy. A dealer instance serves one run; it
/// sees only the events, never the true vertex labels, and may not revise
/// forms it has handed out.
class Dealer {
 public:
  virtual ~Dealer() = default;

  virtual PrimeField field() const = 0;
  /// Called once before the first arrival; returns the secret forms.
  virtual std::vector<AffineForm> start(SymbolSpace& space) = 0;
  /// Forms handed to the arriving participant. Throws DealerFailure when no
  /// consistent assignment exists.
  virtual std::vector<AffineForm> on_arrival(const ArrivalEvent& event, SymbolSpace& space) = 0;
  /// Guaranteed worst-case complexity, when the construction declares one.
  virtual std::optional<Rational> declared_bound() const { return std::nullopt; }
  /// Free-form remark about the latest arrival (recorded in transcripts).
  virtual std::string note() const { return {}; }
};

using DealerFactory = std::function<std::unique_ptr<Dealer>()>;

/// One full on-line run.
struct Transcript {
  /// permutation[t] is the true vertex arriving at step t+1.
  std::vector<int> permutation;
  std::vector<ArrivalEvent> events;
  /// Forms handed out at each step, as returned by the dealer.
  std::vector<std::vector<AffineForm>> assigned;
  std::vector<std::string> notes;
  /// Shares keyed by true vertex.
  LinearScheme scheme;
};

/// Events induced by an arrival order: event t holds the edges whose latest
/// member arrives at step t+1.
std::vector<ArrivalEvent> arrival_events(const AccessStructure& gamma, std::span<const int> permutation);

/// The hypergraph over arrival indices revealed by a transcript.
AccessStructure emerging_structure(const Transcript& transcript);

/// Throws SingletonEdge, BadParam (not a permutation), DealerFailure.
Transcript run(Dealer& dealer, const AccessStructure& gamma, std::span<const int> permutation);

struct SweepMode {
  enum class Kind { All, Sample };
  Kind kind = Kind::All;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static SweepMode all() { return {}; }
  static SweepMode sample(std::size_t k, std::uint64_t seed) { return {Kind::Sample, k, seed}; }
};

/// Largest n for which exhaustive sweeps are allowed.
inline constexpr int kExhaustiveCap = 8;

struct SweepOptions {
  unsigned workers = 1;
  bool keep_transcripts = false;
};

struct OrderingResult {
  std::vector<int> permutation;
  /// Empty when the dealer failed on this ordering.
  std::optional<SecurityReport> report;
  std::optional<std::string> failure;
  std::optional<Transcript> transcript;
};

struct SweepResult {
  /// Sorted lexicographically by permutation.
  std::vector<OrderingResult> runs;
  bool all_perfect = true;
  std::size_t dealer_failures = 0;
  std::size_t violations = 0;
  /// Worst complexity over the orderings the dealer completed.
  Rational worst_complexity;
  std::optional<std::uint64_t> seed;
};

/// Deterministic sample of k permutations of 0..n-1 (Fisher–Yates driven by
/// mt19937_64 with rejection sampling, so results are platform independent).
std::vector<std::vector<int>> sample_permutations(int n, std::size_t k, std::uint64_t seed);

/// Runs a fresh dealer for every ordering (or a seeded sample), checking each
/// resulting scheme with is_perfect. Dealer failures are recorded per
/// ordering; other errors propagate. Exhaustive mode requires n <= 8.
SweepResult sweep(const DealerFactory& make_dealer, const AccessStructure& gamma, const SweepMode& mode,
                  const SweepOptions& options = {});

/// Replays every ordering and checks that identical event prefixes always
/// produce identical assignments. Requires n <= 8.
bool check_view_determinism(const DealerFactory& make_dealer, const AccessStructure& gamma);

}  // namespace olss

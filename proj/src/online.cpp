#include "olss/online.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "olss/error.hpp"

namespace olss {

std::vector<int> ArrivalEvent::backward_neighbors() const {
  std::vector<int> out;
  for (VertexSet e : backward_edges) {
    for (int v : members(e & ~bit(index()))) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_permutation(std::span<const int> permutation, int n) {
  if (static_cast<int>(permutation.size()) != n) throw Error(ErrorCode::BadParam, "permutation has wrong length");
  VertexSet seen = 0;
  for (int v : permutation) {
    if (v < 0 || v >= n || contains(seen, v)) throw Error(ErrorCode::BadParam, "not a permutation of the vertices");
    seen |= bit(v);
  }
}

}  // namespace

std::vector<ArrivalEvent> arrival_events(const AccessStructure& gamma, std::span<const int> permutation) {
  const int n = gamma.size();
  check_permutation(permutation, n);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) position[static_cast<std::size_t>(permutation[static_cast<std::size_t>(t)])] = t;

  std::vector<ArrivalEvent> events(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) events[static_cast<std::size_t>(t)].step = t + 1;
  for (VertexSet e : gamma.edges()) {
    VertexSet relabeled = 0;
    int last = -1;
    for (int v : members(e)) {
      const int pos = position[static_cast<std::size_t>(v)];
      relabeled |= bit(pos);
      last = std::max(last, pos);
    }
    events[static_cast<std::size_t>(last)].backward_edges.push_back(relabeled);
  }
  for (auto& ev : events) std::sort(ev.backward_edges.begin(), ev.backward_edges.end(), lex_less);
  return events;
}

AccessStructure emerging_structure(const Transcript& transcript) {
  std::vector<VertexSet> edges;
  for (const auto& ev : transcript.events) {
    edges.insert(edges.end(), ev.backward_edges.begin(), ev.backward_edges.end());
  }
  return AccessStructure(static_cast<int>(transcript.events.size()), std::move(edges));
}

Transcript run(Dealer& dealer, const AccessStructure& gamma, std::span<const int> permutation) {
  if (gamma.has_singleton_edge()) {
    throw Error(ErrorCode::SingletonEdge, "on-line runs require an access structure without singleton edges");
  }
  const int n = gamma.size();
  auto events = arrival_events(gamma, permutation);

  SymbolSpace space;
  std::vector<AffineForm> secret = dealer.start(space);
  std::vector<std::vector<AffineForm>> assigned;
  std::vector<std::string> notes;
  for (const auto& ev : events) {
    assigned.push_back(dealer.on_arrival(ev, space));
    notes.push_back(dealer.note());
  }

  std::vector<std::vector<AffineForm>> shares(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    shares[static_cast<std::size_t>(permutation[static_cast<std::size_t>(t)])] = assigned[static_cast<std::size_t>(t)];
  }
  LinearScheme scheme(dealer.field(), space.dimension(), std::move(secret), std::move(shares));
  return Transcript{std::vector<int>(permutation.begin(), permutation.end()), std::move(events), std::move(assigned),
                    std::move(notes), std::move(scheme)};
}

std::vector<std::vector<int>> sample_permutations(int n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) {
    // Unbiased draw from [0, bound) by rejection.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  std::vector<std::vector<int>> out;
  out.reserve(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      const auto j = below(static_cast<std::uint64_t>(i) + 1);
      std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    out.push_back(std::move(perm));
  }
  return out;
}

SweepResult sweep(const DealerFactory& make_dealer, const AccessStructure& gamma, const SweepMode& mode,
                  const SweepOptions& options) {
  const int n = gamma.size();
  if (gamma.has_singleton_edge()) {
    throw Error(ErrorCode::SingletonEdge, "on-line runs require an access structure without singleton edges");
  }
  std::vector<std::vector<int>> orders;
  SweepResult result;
  if (mode.kind == SweepMode::Kind::All) {
    if (n > kExhaustiveCap) {
      throw Error(ErrorCode::CapExceeded, "exhaustive sweep limited to n <= " + std::to_string(kExhaustiveCap));
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    orders = sample_permutations(n, mode.samples, mode.seed);
    result.seed = mode.seed;
  }

  result.runs.resize(orders.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= orders.size()) return;
      OrderingResult& out = result.runs[i];
      out.permutation = orders[i];
      try {
        auto dealer = make_dealer();
        try {
          Transcript tr = run(*dealer, gamma, orders[i]);
          out.report = is_perfect(tr.scheme, gamma);
          if (options.keep_transcripts) out.transcript = std::move(tr);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::DealerFailure) throw;
          out.failure = e.what();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(orders.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::stable_sort(result.runs.begin(), result.runs.end(),
                   [](const OrderingResult& a, const OrderingResult& b) { return a.permutation < b.permutation; });
  result.worst_complexity = 0;
  for (const auto& r : result.runs) {
    if (r.failure) {
      ++result.dealer_failures;
      result.all_perfect = false;
      continue;
    }
    if (!r.report->perfect) {
      ++result.violations;
      result.all_perfect = false;
    }
    result.worst_complexity = std::max(result.worst_complexity, r.report->complexity);
  }
  return result;
}

namespace {

std::string serialize(const ArrivalEvent& ev) {
  std::ostringstream os;
  os << ev.step << ':';
  for (VertexSet e : ev.backward_edges) os << e << ',';
  return os.str();
}

std::string serialize(const std::vector<AffineForm>& forms) {
  std::ostringstream os;
  for (const auto& f : forms) {
    os << '[';
    for (int j = 0; j < f.support_length(); ++j) os << f.coeffs(j) << ' ';
    os << '+' << f.constant << ']';
  }
  return os.str();
}

}  // namespace

bool check_view_determinism(const DealerFactory& make_dealer, const AccessStructure& gamma) {
  const int n = gamma.size();
  if (n > kExhaustiveCap) {
    throw Error(ErrorCode::CapExceeded, "determinism replay limited to n <= " + std::to_string(kExhaustiveCap));
  }
  if (gamma.has_singleton_edge()) {
    throw Error(ErrorCode::SingletonEdge, "on-line runs require an access structure without singleton edges");
  }
  std::map<std::string, std::string> seen;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    auto events = arrival_events(gamma, perm);
    auto dealer = make_dealer();
    SymbolSpace space;
    std::string prefix = "secret=" + serialize(dealer->start(space)) + '|';
    for (const auto& ev : events) {
      prefix += serialize(ev) + '|';
      std::string response;
      bool failed = false;
      try {
        response = serialize(dealer->on_arrival(ev, space));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DealerFailure) throw;
        response = "failure";
        failed = true;
      }
      auto [it, inserted] = seen.emplace(prefix, response);
      if (!inserted && it->second != response) return false;
      if (failed) break;
      prefix += response + '|';
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace olss

#pragma once

#include <string>
#include <vector>

#include "graphcheb/cheb.hpp"
#include "graphcheb/graph.hpp"
#include "graphcheb/types.hpp"

namespace gcheb {

struct TraceEntry {
  int round = 0;
  int sender = 0;
  int receiver = 0;
  int payload_len = 0;
};

// Audited log of inter-node traffic. Entries are kept only when auditing is
// enabled; counts are exact integers and always maintained.
struct RoundTrace {
  bool audited = false;
  std::vector<TraceEntry> entries;
  long long message_count = 0;
  long long scalar_volume = 0;  // payload scalars across all messages
};

struct MessageSummary {
  long long edge_messages = 0;
  long long scalar_volume = 0;
};

MessageSummary message_summary(const RoundTrace& trace);
void save_trace_csv(const RoundTrace& trace, const std::string& path);

// Everything one node is allowed to know: its own signal entries, its
// Laplacian row restricted to itself and direct neighbors, the shared
// Chebyshev coefficients, and the spectral upper bound. No global arrays.
struct NodeState {
  int id = 0;
  std::vector<int> row_ids;        // ascending; includes id itself
  std::vector<double> row_values;  // matching L_{n,m}
  int self_slot = 0;               // position of id within row_ids
  double signal = 0.0;             // f(n)
};

struct SimRun {
  Vector output;
  RoundTrace trace;
};

// Deterministic synchronous message-passing simulator. Rounds are strict
// deliver-then-compute phases computed from the previous round's messages,
// so results and traces do not depend on any within-round interleaving.
// Neighbor contributions are summed in ascending node-id order, making the
// outputs bit-identical to the centralized recurrence.
class SimNetwork {
 public:
  // Communication topology and recurrence rows taken from the graph
  // Laplacian.
  SimNetwork(const WeightedGraph& g, const Vector& f, ChebyshevApprox approx);

  // Generalized variant: any square matrix whose off-diagonal pattern is
  // symmetric and connected defines both the rows and the message graph.
  SimNetwork(const SparseMatrix& p, const Vector& f, ChebyshevApprox approx);

  Index node_count() const { return static_cast<Index>(nodes_.size()); }
  Index edge_count() const { return edge_count_; }
  const NodeState& node(Index i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const ChebyshevApprox& approx() const { return approx_; }

  // Rounds executed by the most recent run.
  int rounds_completed() const { return rounds_completed_; }

  // Forward operator: each node ends with its eta stacked outputs.
  // K rounds, 2K|E| scalar messages.
  SimRun run_forward(bool audit = false);

  // Same, with each node seeded from `f` instead of the stored signal.
  SimRun run_forward_on(const Vector& f, bool audit = false);

  // Adjoint: input a is j-major with a_j(n) held by node n. K rounds,
  // 2K|E| messages of payload length eta.
  SimRun run_adjoint(const Vector& a, bool audit = false);

  // Gram operator on the stored signal: order-2K recurrence, 4K|E| scalar
  // messages.
  SimRun run_gram(bool audit = false);

 private:
  template <class Round1, class RoundK, class Emit>
  void execute(Index width, int rounds, RoundTrace& trace, Round1&& round1,
               RoundK&& round_k, Emit&& emit);

  std::vector<NodeState> nodes_;
  // Delivery fan-out: for each sender, (receiver, slot in receiver inbox).
  std::vector<std::vector<std::pair<int, int>>> out_links_;
  ChebyshevApprox approx_;
  Index edge_count_ = 0;
  int rounds_completed_ = 0;
};

}  // namespace gcheb

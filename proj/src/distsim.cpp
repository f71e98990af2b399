#include "graphcheb/distsim.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gcheb {

MessageSummary message_summary(const RoundTrace& trace) {
  return {trace.message_count, trace.scalar_volume};
}

void save_trace_csv(const RoundTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "round,sender,receiver,payload_len\n";
  for (const TraceEntry& e : trace.entries) {
    out << e.round << ',' << e.sender << ',' << e.receiver << ',' << e.payload_len
        << '\n';
  }
}

SimNetwork::SimNetwork(const WeightedGraph& g, const Vector& f, ChebyshevApprox approx)
    : SimNetwork(laplacian(g), f, std::move(approx)) {}

namespace {

// BFS over the off-diagonal pattern; the pattern is the message graph.
bool pattern_connected(const SparseMatrix& p) {
  const Index n = p.size();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Index> stack = {0};
  seen[0] = 1;
  Index visited = 1;
  while (!stack.empty()) {
    const Index u = stack.back();
    stack.pop_back();
    for (int c : p.row_cols(u)) {
      if (c != u && !seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        ++visited;
        stack.push_back(c);
      }
    }
  }
  return visited == n;
}

}  // namespace

SimNetwork::SimNetwork(const SparseMatrix& l, const Vector& f, ChebyshevApprox approx)
    : approx_(std::move(approx)) {
  if (!pattern_connected(l)) throw std::invalid_argument("graph must be connected");
  if (f.size() != l.size()) throw std::invalid_argument("signal size mismatch");
  if (approx_.order() < 1) throw std::invalid_argument("approximation order must be >= 1");

  const Index n = l.size();
  // Off-diagonal structure must be mirrored or messages cannot flow both ways.
  long long off_entries = 0;
  for (Index r = 0; r < n; ++r) {
    for (int c : l.row_cols(r)) {
      if (c == r) continue;
      ++off_entries;
      const auto mirror = l.row_cols(c);
      if (!std::binary_search(mirror.begin(), mirror.end(), static_cast<int>(r))) {
        throw std::invalid_argument("matrix pattern must be symmetric");
      }
    }
  }
  edge_count_ = static_cast<Index>(off_entries / 2);
  nodes_.resize(static_cast<std::size_t>(n));
  out_links_.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    NodeState& node = nodes_[static_cast<std::size_t>(i)];
    node.id = static_cast<int>(i);
    const auto cols = l.row_cols(i);
    const auto vals = l.row_values(i);
    node.row_ids.assign(cols.begin(), cols.end());
    node.row_values.assign(vals.begin(), vals.end());
    node.signal = f[i];
    const auto self = std::lower_bound(node.row_ids.begin(), node.row_ids.end(), node.id);
    node.self_slot = static_cast<int>(self - node.row_ids.begin());
  }
  // Fan-out map: where each node's broadcast lands in its neighbors' inboxes.
  for (Index s = 0; s < n; ++s) {
    const NodeState& sender = nodes_[static_cast<std::size_t>(s)];
    for (std::size_t k = 0; k < sender.row_ids.size(); ++k) {
      const int r = sender.row_ids[k];
      if (r == sender.id) continue;
      const NodeState& receiver = nodes_[static_cast<std::size_t>(r)];
      const auto slot = std::lower_bound(receiver.row_ids.begin(),
                                         receiver.row_ids.end(), sender.id);
      out_links_[static_cast<std::size_t>(s)].push_back(
          {r, static_cast<int>(slot - receiver.row_ids.begin())});
    }
  }
}

// Synchronous engine shared by the three runs. `width` is the per-message
// payload length; `init` supplies each node's Tbar_0 values; `emit` is called
// after every round with the freshly computed Tbar_k components.
namespace {

struct EngineState {
  // component-major within a slot: inbox[node][slot * width + c]
  std::vector<std::vector<double>> inbox;
  std::vector<std::vector<double>> cur;   // Tbar_{k-1}(.)_n
  std::vector<std::vector<double>> prev;  // Tbar_{k-2}(.)_n
  std::vector<std::vector<double>> init;  // Tbar_0(.)_n
};

}  // namespace

template <class Init, class Emit>
static void run_engine(const std::vector<NodeState>& nodes,
                       const std::vector<std::vector<std::pair<int, int>>>& out_links,
                       double alpha, Index width, int rounds, RoundTrace& trace,
                       Init&& init_fn, Emit&& emit) {
  const std::size_t n = nodes.size();
  EngineState st;
  st.inbox.resize(n);
  st.cur.resize(n);
  st.prev.resize(n);
  st.init.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    st.inbox[i].assign(nodes[i].row_ids.size() * static_cast<std::size_t>(width), 0.0);
    st.cur[i].resize(static_cast<std::size_t>(width));
    st.prev[i].assign(static_cast<std::size_t>(width), 0.0);
    st.init[i].resize(static_cast<std::size_t>(width));
    for (Index c = 0; c < width; ++c) {
      const double v = init_fn(static_cast<Index>(i), c);
      st.init[i][static_cast<std::size_t>(c)] = v;
      st.cur[i][static_cast<std::size_t>(c)] = v;
    }
  }

  const double inv_alpha = 1.0 / alpha;
  const double two_inv_alpha = 2.0 / alpha;
  std::vector<double> fresh(static_cast<std::size_t>(width));

  for (int round = 1; round <= rounds; ++round) {
    // Deliver phase: every node transmits its current value to each neighbor.
    for (std::size_t s = 0; s < n; ++s) {
      for (const auto& [receiver, slot] : out_links[s]) {
        auto& box = st.inbox[static_cast<std::size_t>(receiver)];
        for (Index c = 0; c < width; ++c) {
          box[static_cast<std::size_t>(slot) * width + c] =
              st.cur[s][static_cast<std::size_t>(c)];
        }
        trace.message_count += 1;
        trace.scalar_volume += width;
        if (trace.audited) {
          trace.entries.push_back({round, static_cast<int>(s), receiver,
                                   static_cast<int>(width)});
        }
      }
    }
    // Compute phase: previous-round messages only; no read-after-write.
    for (std::size_t i = 0; i < n; ++i) {
      const NodeState& node = nodes[i];
      auto& box = st.inbox[i];
      const std::size_t self = static_cast<std::size_t>(node.self_slot);
      for (Index c = 0; c < width; ++c) {
        box[self * width + c] = st.cur[i][static_cast<std::size_t>(c)];
      }
      for (Index c = 0; c < width; ++c) {
        double acc = 0.0;
        for (std::size_t k = 0; k < node.row_values.size(); ++k) {
          acc += node.row_values[k] * box[k * width + c];
        }
        const std::size_t cc = static_cast<std::size_t>(c);
        fresh[cc] = (round == 1)
                        ? inv_alpha * acc - st.init[i][cc]
                        : two_inv_alpha * acc - 2.0 * st.cur[i][cc] - st.prev[i][cc];
      }
      st.prev[i].swap(st.cur[i]);
      st.cur[i] = fresh;
      emit(round, static_cast<Index>(i), st.cur[i]);
    }
  }
}

SimRun SimNetwork::run_forward(bool audit) {
  Vector f(node_count());
  for (Index i = 0; i < node_count(); ++i) f[i] = nodes_[static_cast<std::size_t>(i)].signal;
  return run_forward_on(f, audit);
}

SimRun SimNetwork::run_forward_on(const Vector& f, bool audit) {
  const Index n = node_count();
  const Index eta = approx_.eta();
  const int order = static_cast<int>(approx_.order());
  if (f.size() != n) throw std::invalid_argument("signal size mismatch");
  SimRun run;
  run.trace.audited = audit;

  // Node-held accumulators for the eta stacked outputs.
  Matrix acc(eta, n);
  for (Index i = 0; i < n; ++i) {
    const double f_i = f[i];
    for (Index j = 0; j < eta; ++j) {
      acc(j, i) = 0.5 * approx_.coefficients(j, 0) * f_i;
    }
  }
  run_engine(
      nodes_, out_links_, approx_.alpha(), 1, order, run.trace,
      [&](Index i, Index) { return f[i]; },
      [&](int round, Index i, const std::vector<double>& t) {
        for (Index j = 0; j < eta; ++j) {
          acc(j, i) += approx_.coefficients(j, round) * t[0];
        }
      });
  rounds_completed_ = order;

  run.output.resize(eta * n);
  for (Index j = 0; j < eta; ++j) {
    for (Index i = 0; i < n; ++i) run.output[j * n + i] = acc(j, i);
  }
  return run;
}

SimRun SimNetwork::run_adjoint(const Vector& a, bool audit) {
  const Index n = node_count();
  const Index eta = approx_.eta();
  const int order = static_cast<int>(approx_.order());
  if (a.size() != eta * n) throw std::invalid_argument("adjoint input size mismatch");
  SimRun run;
  run.trace.audited = audit;

  Matrix acc(eta, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < eta; ++j) {
      acc(j, i) = 0.5 * approx_.coefficients(j, 0) * a[j * n + i];
    }
  }
  run_engine(
      nodes_, out_links_, approx_.alpha(), eta, order, run.trace,
      [&](Index i, Index j) { return a[j * n + i]; },
      [&](int round, Index i, const std::vector<double>& t) {
        for (Index j = 0; j < eta; ++j) {
          acc(j, i) += approx_.coefficients(j, round) * t[static_cast<std::size_t>(j)];
        }
      });
  rounds_completed_ = order;

  run.output.resize(n);
  for (Index i = 0; i < n; ++i) {
    double total = 0.0;
    for (Index j = 0; j < eta; ++j) total += acc(j, i);
    run.output[i] = total;
  }
  return run;
}

SimRun SimNetwork::run_gram(bool audit) {
  const Index n = node_count();
  const int order = static_cast<int>(approx_.order());
  const GramCoefficients gram = gram_coefficients(approx_);
  SimRun run;
  run.trace.audited = audit;

  Vector acc(n);
  for (Index i = 0; i < n; ++i) {
    acc[i] = 0.5 * gram.d[0] * nodes_[static_cast<std::size_t>(i)].signal;
  }
  run_engine(
      nodes_, out_links_, approx_.alpha(), 1, 2 * order, run.trace,
      [&](Index i, Index) { return nodes_[static_cast<std::size_t>(i)].signal; },
      [&](int round, Index i, const std::vector<double>& t) {
        acc[i] += gram.d[round] * t[0];
      });
  rounds_completed_ = 2 * order;

  run.output = acc;
  return run;
}

}  // namespace gcheb

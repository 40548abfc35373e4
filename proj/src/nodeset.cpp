#include "ncra/nodeset.hpp"

#include <algorithm>

namespace ncra {

std::string NodeSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (NodeId i : nodes()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

void NetworkSpec::validate(int max_nodes) const {
  if (node_count < 1) throw std::invalid_argument("node_count must be >= 1");
  if (node_count > max_nodes)
    throw std::invalid_argument("node_count " + std::to_string(node_count) +
                                " exceeds cap " + std::to_string(max_nodes));
  if (source < 1 || source > node_count)
    throw std::invalid_argument("source out of range");
  if (destinations.empty())
    throw std::invalid_argument("destination set must be nonempty");
  if (!destinations.subset_of(NodeSet::full(node_count)))
    throw std::invalid_argument("destination id out of range");
  if (message_count < 1) throw std::invalid_argument("message_count must be >= 1");
  if (field_size < 2) throw std::invalid_argument("field_size must be >= 2");
  if (tx_rate.size() != static_cast<std::size_t>(node_count))
    throw std::invalid_argument("tx_rate must have one entry per node");
  for (double l : tx_rate)
    if (!(l >= 0)) throw std::invalid_argument("tx_rate entries must be >= 0");
}

RankState init_rank_state(const NetworkSpec& net) {
  RankState st;
  st.t = 0;
  st.v.assign(std::size_t{1} << net.node_count, 0.0);
  const mask_t src_bit = NodeSet::single(net.source).bits;
  for (mask_t k = 1; k < st.v.size(); ++k)
    if (k & src_bit) st.v[k] = net.message_count;
  return st;
}

double monotonicity_violation(const NetworkSpec& net, const RankState& state) {
  double worst = 0;
  const mask_t all = net.full_mask();
  for (mask_t k = 1; k <= all; ++k) {
    for (int b = 0; b < net.node_count; ++b) {
      const mask_t bit = mask_t{1} << b;
      if (k & bit) continue;
      worst = std::max(worst, state.v[k] - state.v[k | bit]);
    }
  }
  return worst;
}

}  // namespace ncra

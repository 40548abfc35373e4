#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncra {

using NodeId = int;        // 1-based node ids
using mask_t = std::uint32_t;

// Hard cap on network size for the 2^N-1 joint-rank state. Scenarios at desk
// scale use N <= 8; the cap keeps accidental huge states out.
constexpr int kMaxNodes = 12;
// Independent-set enumeration tolerates sparser growth than 2^N.
constexpr int kMaxCsmaNodes = 20;
// Cut enumeration is 2^(N-2) sets.
constexpr int kMaxCutNodes = 16;

// A subset of {1..N} as an N-bit mask (bit i-1 <-> node i).  The mask value
// itself is the subset index: nonempty subsets map bijectively onto
// 1..2^N-1 in binary counting order ({1}, {2}, {1,2}, {3}, ...), which is
// the layout shared by every rank/rate vector in the library.
struct NodeSet {
  mask_t bits = 0;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(mask_t m) : bits(m) {}

  static constexpr NodeSet single(NodeId i) { return NodeSet(mask_t{1} << (i - 1)); }
  static NodeSet of(std::initializer_list<NodeId> ids) {
    NodeSet s;
    for (NodeId i : ids) s = s.with(i);
    return s;
  }
  static constexpr NodeSet full(int n) {
    return NodeSet(n >= 32 ? ~mask_t{0} : (mask_t{1} << n) - 1);
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(NodeId i) const { return bits >> (i - 1) & 1; }
  constexpr NodeSet with(NodeId i) const { return NodeSet(bits | (mask_t{1} << (i - 1))); }
  constexpr NodeSet without(NodeId i) const { return NodeSet(bits & ~(mask_t{1} << (i - 1))); }
  constexpr NodeSet unite(NodeSet o) const { return NodeSet(bits | o.bits); }
  constexpr NodeSet intersect(NodeSet o) const { return NodeSet(bits & o.bits); }
  constexpr bool subset_of(NodeSet o) const { return (bits & ~o.bits) == 0; }
  int count() const { return __builtin_popcount(bits); }

  bool operator==(const NodeSet&) const = default;

  std::vector<NodeId> nodes() const {
    std::vector<NodeId> out;
    for (mask_t m = bits; m; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
    return out;
  }
  std::string to_string() const;
};

// Index of a nonempty subset in the canonical 1..2^N-1 layout.
inline int subset_index(NodeSet k) {
  if (k.empty()) throw std::invalid_argument("empty subset has no rank index");
  return static_cast<int>(k.bits);
}

inline NodeSet subset_from_index(int idx) {
  if (idx <= 0) throw std::invalid_argument("subset index must be positive");
  return NodeSet(static_cast<mask_t>(idx));
}

// Multicast session description: source s streams m generation packets,
// coded over a field of size q, to every node of `destinations`; node i
// transmits at lambda_i pkt/ms while the MAC abstraction is rate-based.
struct NetworkSpec {
  int node_count = 0;
  NodeId source = 1;
  NodeSet destinations;
  double message_count = 0;  // m, packets (fluid ranks are real-valued)
  double field_size = 256;   // q
  std::vector<double> tx_rate;  // lambda_i, pkt/ms; used by the PHY rate model

  void validate(int max_nodes = kMaxNodes) const;
  mask_t full_mask() const { return NodeSet::full(node_count).bits; }
};

// Joint-rank state: v[mask] = V_K for the subset with that index; v[0] is
// unused and kept at 0.  Invariants: 0 <= V_K <= m, V_K <= V_{K u {i}}, and
// V_K = m whenever the source is in K.
struct RankState {
  std::vector<double> v;  // size 1 << N
  double t = 0;
};

RankState init_rank_state(const NetworkSpec& net);

// Largest violation of V_K <= V_{K u {i}} over all K, i (0 if monotone).
double monotonicity_violation(const NetworkSpec& net, const RankState& state);

}  // namespace ncra

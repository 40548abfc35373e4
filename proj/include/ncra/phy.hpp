#pragma once

#include <array>
#include <vector>

#include "ncra/nodeset.hpp"

namespace ncra {

// Indoor-propagation PHY with Gaussian interference: ITU path loss, per-link
// SINR with per-receiver processing gain, BPSK bit errors, and packet-level
// success probabilities.
struct PhyParams {
  double freq_mhz = 2400;
  double path_loss_exp = 3;
  double floor_penetration_db = 11;
  double noise_w = 1e-13;                 // sigma^2, linear watts
  std::vector<double> processing_gain;    // g_i >= 1, linear, one per node
  int packet_bits = 1000;                 // l
  std::vector<double> power_max_dbm;      // per-node budget, powers live in [0, max]

  void validate(int node_count) const;
  static std::vector<double> filled(int n, double v) { return std::vector<double>(n, v); }
};

// ITU indoor path loss in dB; f in MHz, d in meters.
double path_loss_db(double d_meters, const PhyParams& p);

// Path loss applied as attenuation: h = 10^(-PL/10), in (0, 1] for PL >= 0.
double link_gain(double path_loss_db);

inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

// Point-to-point link gains h[receiver][transmitter], linear.
class Geometry {
 public:
  static Geometry from_coordinates(const std::vector<std::array<double, 2>>& xy,
                                   const PhyParams& p);
  static Geometry from_gain_matrix(int n, std::vector<double> h_linear);

  int node_count() const { return n_; }
  // h_{ji}: receiver j, transmitter i
  double gain(NodeId j, NodeId i) const { return h_[(j - 1) * n_ + (i - 1)]; }

 private:
  int n_ = 0;
  std::vector<double> h_;
};

// Transmit powers in dBm (the control variable for the PHY resource).
struct PowerVector {
  std::vector<double> dbm;
};

double sinr(NodeId i, NodeId j, const PowerVector& p, const Geometry& geo,
            const PhyParams& phy);

// Q(sqrt(sinr)) for BPSK under Gaussian interference.
double bit_error_rate(double sinr_linear);

// (1 - p_bit)^l
double packet_success(double p_bit, int packet_bits);

// 1 - prod_{j in K} (1 - P_ij); i must not be in K.
double reception_prob_set(NodeId i, NodeSet k, const std::vector<double>& p_row);

// Per-link packet success matrix P[i][j] (row-major, (i-1)*N + (j-1); the
// diagonal is 0).
std::vector<double> link_success_matrix(const PowerVector& p, const Geometry& geo,
                                        const PhyParams& phy);

}  // namespace ncra

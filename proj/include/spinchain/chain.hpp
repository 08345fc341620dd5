#pragma once

#include <vector>

namespace spinchain {

// Linear chain of n spins with nearest-neighbour Ising couplings in Hz.
// Coupling c (1-based) joins spins c and c + 1.
class ChainSpec {
 public:
  ChainSpec(int n, std::vector<double> couplings_hz);

  static ChainSpec uniform(int n, double j_hz);

  int n() const { return n_; }
  const std::vector<double>& couplings() const { return couplings_; }
  double coupling(int c) const;
  bool is_uniform() const;

 private:
  int n_;
  std::vector<double> couplings_;
};

}  // namespace spinchain

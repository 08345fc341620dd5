#include "spinchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinchain/error.hpp"

namespace spinchain {

ChainSpec::ChainSpec(int n, std::vector<double> couplings_hz)
    : n_(n), couplings_(std::move(couplings_hz)) {
  if (n_ < 2) throw ArgumentError("chain needs at least two spins");
  if (static_cast<int>(couplings_.size()) != n_ - 1) {
    throw ArgumentError("chain of " + std::to_string(n_) + " spins needs " +
                        std::to_string(n_ - 1) + " couplings, got " +
                        std::to_string(couplings_.size()));
  }
  for (double j : couplings_) {
    if (!(j > 0.0) || !std::isfinite(j)) {
      throw ArgumentError("couplings must be finite and strictly positive");
    }
  }
}

ChainSpec ChainSpec::uniform(int n, double j_hz) {
  if (n < 2) throw ArgumentError("chain needs at least two spins");
  return ChainSpec(n, std::vector<double>(static_cast<std::size_t>(n - 1), j_hz));
}

double ChainSpec::coupling(int c) const {
  if (c < 1 || c > n_ - 1) {
    throw IndexError("coupling index " + std::to_string(c) + " outside 1.." +
                     std::to_string(n_ - 1));
  }
  return couplings_[static_cast<std::size_t>(c - 1)];
}

bool ChainSpec::is_uniform() const {
  return std::all_of(couplings_.begin(), couplings_.end(),
                     [&](double j) { return j == couplings_.front(); });
}

}  // namespace spinchain

#pragma once

// Reproduction runs of the worked examples, each a table of checked values.

#include <string>
#include <vector>

#include "normgate/counterex.hpp"

namespace normgate {

struct ReproSection {
  std::string name;  // ex24, ex311, ex312, ex313
  std::vector<CheckRow> rows;

  bool all_pass() const;
};

ReproSection reproduce_ex24();
/// Multiplication operator on L^2[0, 1] with a monotone configuration.
ReproSection reproduce_ex311();
/// Bergman-space Toeplitz operator with (a, b, c) = (-2, 2, 1), phi = t^5.
ReproSection reproduce_ex312(std::size_t n_max = 100000);
/// Spectrum [0, t1] u {1} with the same configuration.
ReproSection reproduce_ex313(double t1 = 0.96, double t2 = 0.98);

/// Index n <= n_max maximizing the closed-form curve at sqrt((n + 1) / (n + 2)).
std::size_t bergman_argmax_index(std::size_t n_max);

/// "ex24", "ex311", "ex312", "ex313" or "all". Throws InvalidInput otherwise.
std::vector<ReproSection> reproduce(const std::string& which);

}  // namespace normgate

#pragma once

#include <stdexcept>
#include <string>

namespace boott {

// Weight vector cannot support the requested statistic (m_n = 0, V_n^2 = 0, ...).
class degenerate_weights_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sample cannot support the requested statistic (constant sample, S_n = 0).
class degenerate_sample_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The bootstrap sub-sample collapsed to a point (S*^2 = 0).
class degenerate_bootstrap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration (bad field, inconsistent regime, infeasible quantile).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Monte Carlo run could not produce a usable result (all replicates degenerate,
// redraw cap exceeded, unsupported paradigm for the scheme).
class experiment_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace boott

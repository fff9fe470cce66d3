#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smcland/guidance.hpp"

namespace smcland {

struct TuningReport {
    double t_reach1 = 0.0;  // [s]
    double t_reach2 = 0.0;
    double t_reach3 = 0.0;
    double rxy_rate_bound = 0.0;  // [m/s]
    double t_R1_lower = 0.0;      // [s]
    double k1_min = 0.0;
    double suggested_k2 = 0.0;
    double suggested_k3 = 0.0;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

struct invalid_gain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct undefined_ratio_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite reach time (m/(m-n)) |S0|^{(m-n)/m} / k for dS/dt = -k S^{n/m}.
double reach_time(double S0, double k, int m, int n);

// Upper bound |dR_xy0| + k_a R_xy0 on |dR_xy(t)|.
double rxy_rate_bound(double dR_xy0, double R_xy0, double k_a);

// Lower bound on the time for R_xy to reach zero.
double t_R1_lower_bound(double R_xy0, double dR_xy0, double k_a);

// Sufficient k1 making S1 converge before R_xy can reach zero.
double k1_sufficient(double S10, double R_xy0, double dR_xy0, double k_a, int m, int n);

// k2, k3 making all sliding variables converge at the same time.
std::pair<double, double> ratio_gains(double k1, double S10, double S20, double S30,
                                      int m, int n);

// Empty iff m, n odd coprime with 0 < n < m, k_b > k_a, k_c > k_a and all
// clamp limits positive.
std::vector<std::string> validate(const GuidanceParams& params);

TuningReport tuning_report(const GuidanceParams& params, const EngagementState& state0,
                           const RateVector& rates0, const SlidingVector& S0);

}  // namespace smcland

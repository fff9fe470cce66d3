#include "smcland/tuning.hpp"

#include <cmath>
#include <numeric>

namespace smcland {

namespace {
double frac_exp(int m, int n) {
    return static_cast<double>(m - n) / m;
}
}  // namespace

double reach_time(double S0, double k, int m, int n) {
    if (k <= 0.0) {
        throw invalid_gain_error("reach_time: k must be positive");
    }
    if (S0 == 0.0) {
        return 0.0;
    }
    const double e = frac_exp(m, n);
    return (static_cast<double>(m) / (m - n)) * std::pow(std::abs(S0), e) / k;
}

double rxy_rate_bound(double dR_xy0, double R_xy0, double k_a) {
    return std::abs(dR_xy0) + k_a * R_xy0;
}

double t_R1_lower_bound(double R_xy0, double dR_xy0, double k_a) {
    return R_xy0 / (std::abs(dR_xy0) + k_a * R_xy0);
}

double k1_sufficient(double S10, double R_xy0, double dR_xy0, double k_a, int m, int n) {
    if (S10 == 0.0) {
        return 0.0;
    }
    const double e = frac_exp(m, n);
    return (static_cast<double>(m) / (m - n)) * std::pow(std::abs(S10), e) *
           rxy_rate_bound(dR_xy0, R_xy0, k_a) / R_xy0;
}

std::pair<double, double> ratio_gains(double k1, double S10, double S20, double S30,
                                      int m, int n) {
    if (S10 == 0.0) {
        throw undefined_ratio_error("ratio_gains: S10 = 0");
    }
    const double e = frac_exp(m, n);
    const double k2 = k1 * std::pow(std::abs(S20) / std::abs(S10), e);
    const double k3 = k1 * std::pow(std::abs(S30) / std::abs(S10), e);
    return {k2, k3};
}

std::vector<std::string> validate(const GuidanceParams& p) {
    std::vector<std::string> v;
    if (p.m % 2 == 0) v.push_back("m not odd");
    if (p.n % 2 == 0) v.push_back("n not odd");
    if (!(0 < p.n && p.n < p.m)) v.push_back("need 0 < n < m");
    if (p.m > 99 || p.n > 99) v.push_back("m, n limited to <= 99");
    if (p.m > 0 && p.n > 0 && std::gcd(p.m, p.n) != 1) v.push_back("m, n not coprime");
    if (!(p.k_b > p.k_a)) v.push_back("k_b must exceed k_a");
    if (!(p.k_c > p.k_a)) v.push_back("k_c must exceed k_a");
    if (!(p.M1 > 0.0)) v.push_back("M1 must be positive");
    if (!(p.M2 > 0.0)) v.push_back("M2 must be positive");
    if (!(p.N1 > 0.0)) v.push_back("N1 must be positive");
    if (!(p.N2 > 0.0)) v.push_back("N2 must be positive");
    if (!(p.N3 > 0.0)) v.push_back("N3 must be positive");
    if (!(std::abs(p.theta_des) < M_PI / 2.0)) v.push_back("|theta_des| must be < pi/2");
    return v;
}

TuningReport tuning_report(const GuidanceParams& p, const EngagementState& s0,
                           const RateVector& r0, const SlidingVector& S0) {
    TuningReport rep;
    rep.violations = validate(p);
    rep.t_reach1 = (p.k1 > 0.0) ? reach_time(S0.S1, p.k1, p.m, p.n) : 0.0;
    rep.t_reach2 = (p.k2 > 0.0) ? reach_time(S0.S2, p.k2, p.m, p.n) : 0.0;
    rep.t_reach3 = (p.k3 > 0.0) ? reach_time(S0.S3, p.k3, p.m, p.n) : 0.0;
    rep.rxy_rate_bound = rxy_rate_bound(r0.dR_xy, s0.R_xy, p.k_a);
    rep.t_R1_lower = t_R1_lower_bound(s0.R_xy, r0.dR_xy, p.k_a);
    rep.k1_min = k1_sufficient(S0.S1, s0.R_xy, r0.dR_xy, p.k_a, p.m, p.n);
    if (S0.S1 != 0.0) {
        auto [k2, k3] = ratio_gains(p.k1, S0.S1, S0.S2, S0.S3, p.m, p.n);
        rep.suggested_k2 = k2;
        rep.suggested_k3 = k3;
    }
    // Sufficiency is not necessity; an undersized k1 is informational only.
    if (p.k1 > 0.0 && p.k1 < rep.k1_min) {
        rep.notes.push_back("k1 below sufficiency bound; S1 may converge after R_xy -> 0");
    }
    return rep;
}

}  // namespace smcland

#pragma once
#include <functional>

#include "pv/norms.hpp"
#include "pv/strategies.hpp"

namespace pv {

// Map from the hypercube {-1,+1}^m into a tagged normed space; m must be a
// perfect square (directions are indexed like the sign entries of the game).
struct HypercubeFunction {
    int m = 0;
    NormTag space;
    std::function<CMat(const SignVector&)> eval;
    NormEvalOptions norm_opts;
};

struct SigmaReport {
    double sigma = 0.0;
    std::string mode;            // "exact" | "monte-carlo"
    double log_prefactor = 0.0;  // log(m)
    std::uint64_t samples = 0;
};

HypercubeFunction linear_hypercube_map(int m, const std::vector<CMat>& xs, NormTag tag);

CMat derivative(const HypercubeFunction& F, const SignVector& eps, int direction);

SigmaReport sigma(const HypercubeFunction& F, bool exact, std::uint64_t samples, SeededRng rng);

struct PisierCheck {
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
};
PisierCheck pisier_check(const HypercubeFunction& F, bool exact, std::uint64_t samples,
                         SeededRng rng);

enum class PhiVariant { i, ii, iii };
HypercubeFunction phi(const PureStrategy& S, PhiVariant variant);

struct GapReport {
    double omega = 0.0;
    double mean_norm_phi_i = 0.0;      // exact
    double mean_norm_phi_ii_lb = 0.0;  // certified lower estimate
    double slack = 0.0;                // mean_norm_phi_i - omega
};
GapReport value_domination_gap(const PureStrategy& S);

double norm_of_mean(const HypercubeFunction& F);

// constant-free upper bound on sigma of Phi^i / Phi^ii obtained from the
// block-difference estimates (the residual term is 2/n)
double appendix_sigma_bound(const PureStrategy& S, PhiVariant variant);

} // namespace pv

#pragma once
#include <optional>

#include "pv/strategies.hpp"

namespace pv {

struct EpsMode {
    bool exact = true;
    std::uint64_t samples = 256;  // used when exact == false
};

struct SeesawConfig {
    int n = 2, k = 1, kt = 1, r = 1;
    int msg = 1;
    int restarts = 4;
    int max_iters = 100;
    double tol = 1e-8;
    std::uint64_t seed = 20260826;
    EpsMode eps_mode;
    std::vector<std::string> block_schedule{"phi", "V", "W", "Vt", "Wt"};
    std::optional<PureStrategy> warm_start;  // used by the first restart
};

struct SeesawTrace {
    std::vector<std::vector<double>> values;  // per restart, per sweep
    PureStrategy best;
    double best_value = 0.0;
};

// One block-coordinate step; never decreases the empirical objective over
// eps_set.  block is one of phi | V | W | Vt | Wt.
PureStrategy update_block(const PureStrategy& S, const std::string& block,
                          const std::vector<SignVector>& eps_set);

SeesawTrace optimize(const SeesawConfig& cfg);

std::string trace_csv(const SeesawTrace& trace);

} // namespace pv

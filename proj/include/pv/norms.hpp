#pragma once
#include <string>
#include <vector>

#include "pv/linalg.hpp"

namespace pv {

enum class Cert { exact, lower_bound, upper_bound, monte_carlo };

std::string cert_name(Cert c);

// Tag naming the normed space an element lives in.  d1/d2/d3 meaning:
//   Euclidean      d1 = dim (element: any shape, Frobenius/l2)
//   L1             d1 = dim (element: vector, entrywise l1)
//   Operator       d1 x d2 matrices, largest singular value
//   TraceClass     d1 x d2 matrices, sum of singular values
//   InjectiveL1L1  d1 x d1 real matrices in l1 (x)_eps l1
//   WSchatten2cb   S1^{d1,d2} (x) S1^{d1,d2}, element stored as
//                  (d2*d1)x(d2*d1) with row (i*d1+l), col (j*d1+l')
//   WSchatten2     same storage, weak (non-cb) Schatten-2
//   WSchatten2cbState  as WSchatten2cb with an extra state slot of dim d3;
//                  element stored as (d2*d1*d2*d1) x d3
//   ProjectiveUpper    d1 x d2 bipartite element of S1 (x)_pi S1 families,
//                  Schmidt-decomposition upper bound
struct NormTag {
    enum class Kind {
        Euclidean, L1, Operator, TraceClass, InjectiveL1L1,
        WSchatten2cb, WSchatten2, WSchatten2cbState, ProjectiveUpper
    };
    Kind kind = Kind::Euclidean;
    int d1 = 0, d2 = 0, d3 = 0;

    std::string name() const;
};

struct NormResult {
    double value = 0.0;
    Cert cert = Cert::exact;
};

struct NormEvalOptions {
    int r_max = 2;
    int budget = 40;       // ascent iterations per restart
    int restarts = 3;
    std::uint64_t seed = 20260826;
    // optional witness seeds for the wcb optimizer: pairs (h, g) in M_{n r, kt}
    std::vector<std::pair<CMat, CMat>> witness_seeds;
};

NormResult norm_eval(const NormTag& tag, const CMat& x, const NormEvalOptions& opt = {});

// max over sign vectors s, t of |sum_ij A_ij s_i t_j|; A real, n <= 16
double l1_injective_norm(const CMat& A);

struct WcbWitness {
    CMat h, g;       // contractions in M_{n r, kt}
    double value = 0.0;
};

// certified lower bound on the weak-cb Schatten-2 norm of f (stored per
// WSchatten2cb above), by alternating ascent over contraction pairs
WcbWitness wcb_schatten2_lower(const CMat& f, int kt, int n, int r_max, int budget,
                               SeededRng rng,
                               const std::vector<std::pair<CMat, CMat>>& seeds = {});

// certified lower bound on the weak (non-cb) Schatten-2 norm; seeds may
// include wcb witnesses, which embed as plain contractions
double w_schatten2_lower(const CMat& f, int kt, int n, int budget, SeededRng rng,
                         const std::vector<WcbWitness>& wcb_seeds = {});

// pi_2 via the enough-symmetries identity sqrt(d) / ||Id: l2^d -> X||
double pi2_enough_symmetries(int d, double id_into_norm);
// companion: maximize the tagged norm over the unit Frobenius sphere
double id_into_norm_estimate(const NormTag& tag, int budget, SeededRng rng);

struct TypeEstimate {
    NormTag space;
    int m = 0;
    double lower = 0.0;
    std::vector<CMat> witness;
    std::string mode;       // "exact-expectation" | "monte-carlo"
    int budget = 0;
};

TypeEstimate type2_lower(const NormTag& space, int m, int budget, SeededRng rng);

// E_eps || sum_ij eps_ij |i><j| || in the tagged norm; exact enumeration
// when 2^{n^2} fits the cap, else Monte Carlo with `samples`
double rademacher_mean_norm(const NormTag& tag, int n, bool exact, std::uint64_t samples,
                            SeededRng rng);

std::pair<double, double> gaussian_mean_norm(const NormTag& tag, std::uint64_t samples,
                                             SeededRng rng);

} // namespace pv

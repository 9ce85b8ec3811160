#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pv/game.hpp"
#include "pv/linalg.hpp"

namespace pv {

// A family of matrices indexed by sign vectors.  Exact mode keeps a full
// lookup table; past the enumeration cap a deterministic generator (child
// RNG stream keyed by the sign string) stands in.
struct EpsBlock {
    std::map<std::string, CMat> table;
    std::function<CMat(const SignVector&)> gen;

    bool tabulated() const { return !table.empty() || !gen; }
    const CMat& at(const SignVector& eps) const;
    CMat operator()(const SignVector& eps) const;
};

// s2w attack in pure (contraction) form.
//
// Round 1: Alice applies V to the question registers plus her share of phi,
// Bob applies W(eps) to his share.  Each round-1 output of dimension kt
// factors as (kept part) x (message part); msg is the message dimension and
// the two messages cross sides before round 2.  Round 2: Vt(eps) acts on
// Alice's kept part together with Bob's message (and symmetrically Wt(eps)),
// producing an n-dimensional answer register and an r-dimensional ancilla.
// msg = 1 means no communication.
struct PureStrategy {
    int n = 0, k = 1, kt = 1, r = 1;
    int msg = 1;             // divides kt
    CMat V;                  // kt x n^2 k, eps-independent
    EpsBlock W;              // kt x k
    EpsBlock Vt;             // n r x kt
    EpsBlock Wt;             // n r x kt
    CVec phi;                // dim k^2, unit
    std::string kind = "custom";
};

// Kraus form of a general attack; same register layout as PureStrategy.
struct ChannelStrategy {
    int n = 0, k = 1, kt = 1;
    int msg = 1;
    std::vector<CMat> kraus_A;                                    // kt x n^2 k
    std::map<std::string, std::vector<CMat>> kraus_B;             // kt x k
    std::map<std::string, std::vector<CMat>> kraus_At;            // n x kt
    std::map<std::string, std::vector<CMat>> kraus_Bt;            // n x kt
    CMat phi;                                                     // k^2 x k^2 density
};

struct ValueReport {
    double value = 0.0;
    std::string mode;        // "exact" | "monte-carlo"
    std::uint64_t samples = 0;
    double stderr_ = 0.0;
    std::uint64_t seed = 0;
};

void validate(const PureStrategy& S, double tol = 1e-9);
void validate(const ChannelStrategy& S, double tol = 1e-9);

// a(eps) in l2^{r^2}; flat index (alice ancilla)*r + (bob ancilla)
CVec amplitude(const PureStrategy& S, const SignVector& eps);

// the matrix T with amplitude = T * phi, columns over the k^2 basis
CMat amplitude_operator_phi(const PureStrategy& S, const SignVector& eps);

ValueReport value_exact(const PureStrategy& S, int threads = 1);
ValueReport value_mc(const PureStrategy& S, std::uint64_t samples, SeededRng rng);
ValueReport value_channel(const ChannelStrategy& S);

PureStrategy purify(const ChannelStrategy& S);

// cap on useful extra classical communication: n^4 k^2
std::uint64_t classical_budget(std::uint64_t n, std::uint64_t k);

PureStrategy zoo(const std::string& name, int n, int k, int kt, int r, SeededRng rng);

// JSON (de)serialization; round-trips bit-exactly for tabulated strategies.
std::string save_strategy(const PureStrategy& S);
PureStrategy load_strategy(const std::string& json_text);

} // namespace pv

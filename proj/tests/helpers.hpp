#pragma once
#include "pv/strategies.hpp"

namespace pv::testutil {

// slice a tall random isometry into `count` Kraus operators of shape
// rows x cols; satisfies completeness exactly
inline std::vector<CMat> random_kraus(int count, int rows, int cols, SeededRng rng) {
    CMat iso = random_contraction(count * rows, cols, rng);
    std::vector<CMat> out;
    for (int c = 0; c < count; ++c) out.push_back(iso.middleRows(Eigen::Index(c) * rows, rows));
    return out;
}

inline CMat random_density(int dim, SeededRng rng) {
    CMat G(dim, dim);
    for (Eigen::Index c = 0; c < G.size(); ++c) G(c) = rng.next_cgaussian();
    CMat rho = G * G.adjoint();
    return rho / rho.trace();
}

// random channel strategy at n = 2 with small Kraus families; kap2 * n must
// cover kt so the round-2 families can be complete
inline ChannelStrategy random_channel(int n, int k, int kt, int kapA, int kapB, int kap2,
                                      SeededRng rng) {
    ChannelStrategy C;
    C.n = n;
    C.k = k;
    C.kt = kt;
    C.msg = 1;
    C.kraus_A = random_kraus(kapA, kt, n * n * k, rng.child(0));
    C.phi = random_density(k * k, rng.child(1));
    std::uint64_t idx = 0;
    for (const auto& eps : enumerate_signs(n)) {
        const std::string key = eps.to_string();
        SeededRng sub = rng.child(100 + idx++);
        C.kraus_B[key] = random_kraus(kapB, kt, k, sub.child(0));
        C.kraus_At[key] = random_kraus(kap2, n, kt, sub.child(1));
        C.kraus_Bt[key] = random_kraus(kap2, n, kt, sub.child(2));
    }
    return C;
}

// wrap a pure strategy with isometry blocks as a channel (one round-1 Kraus
// per side; round-2 blocks split along the ancilla register)
inline ChannelStrategy as_channel(const PureStrategy& S) {
    ChannelStrategy C;
    C.n = S.n;
    C.k = S.k;
    C.kt = S.kt;
    C.msg = S.msg;
    C.kraus_A = {S.V};
    C.phi = S.phi * S.phi.adjoint();
    auto split_round2 = [&](const CMat& blk) {
        std::vector<CMat> ks;
        for (int a = 0; a < S.r; ++a) {
            CMat K(S.n, S.kt);
            for (int i = 0; i < S.n; ++i) K.row(i) = blk.row(Eigen::Index(i) * S.r + a);
            ks.push_back(K);
        }
        return ks;
    };
    for (const auto& eps : enumerate_signs(S.n)) {
        const std::string key = eps.to_string();
        C.kraus_B[key] = {S.W(eps)};
        C.kraus_At[key] = split_round2(S.Vt(eps));
        C.kraus_Bt[key] = split_round2(S.Wt(eps));
    }
    return C;
}

// random pure strategy whose blocks are exact isometries (so the channel
// wrapper above is trace preserving); needs kt >= n^2 k and n r >= kt
inline PureStrategy random_isometric_pure(int n, int k, int kt, int r, SeededRng rng) {
    PureStrategy S;
    S.n = n;
    S.k = k;
    S.kt = kt;
    S.r = r;
    S.kind = "random-isometric";
    S.V = random_contraction(kt, n * n * k, rng.child(0));
    SeededRng pr = rng.child(1);
    S.phi = random_unit_vector(k * k, pr);
    std::uint64_t idx = 0;
    for (const auto& eps : enumerate_signs(n)) {
        const std::string key = eps.to_string();
        SeededRng sub = rng.child(10 + idx++);
        S.W.table[key] = random_contraction(kt, k, sub.child(0));
        S.Vt.table[key] = random_contraction(n * r, kt, sub.child(1));
        S.Wt.table[key] = random_contraction(n * r, kt, sub.child(2));
    }
    return S;
}

} // namespace pv::testutil

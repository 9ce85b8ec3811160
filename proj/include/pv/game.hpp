#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "pv/linalg.hpp"

namespace pv {

// Hard cap on exact enumeration of sign vectors: 2^20 points.
inline constexpr int kEnumerationCapBits = 20;

struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point of {-1,+1}^{n^2}; entry (i,j) sits at flat index i*n + j.
struct SignVector {
    int n = 0;
    std::vector<int> entries;  // each +1 or -1, length n^2

    int at(int i, int j) const { return entries[std::size_t(i) * n + j]; }

    SignVector flipped(int direction) const {
        SignVector out = *this;
        out.entries[direction] = -out.entries[direction];
        return out;
    }

    std::string to_string() const;         // '+'/'-' string, length n^2
    std::uint32_t mask() const;            // bit b set <=> entry b == -1
    static SignVector from_string(const std::string& s, int n);
    static SignVector from_index(std::uint64_t index, int n);  // lexicographic
    static SignVector all_plus(int n);
    static SignVector random(int n, SeededRng& rng);
};

struct GameInstance {
    int n;
};

// Tr_C |psi_eps><psi| : diagonal n^2 x n^2 matrix with entries eps_ij / n^2.
struct GameTensor {
    int n;
    CMat matrix;
};

CVec psi(const GameInstance& g);
CVec psi_eps(const GameInstance& g, const SignVector& eps);
GameTensor game_tensor(const GameInstance& g, const SignVector& eps);
double honest_value(const GameInstance& g);

// All 2^{n^2} sign vectors in lexicographic order; throws past the cap.
std::vector<SignVector> enumerate_signs(int n);
std::uint64_t sign_count(int n);  // 2^{n^2}, after cap check

} // namespace pv

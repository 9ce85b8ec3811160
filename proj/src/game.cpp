#include "pv/game.hpp"

namespace pv {

std::string SignVector::to_string() const {
    std::string s;
    s.reserve(entries.size());
    for (int e : entries) s.push_back(e > 0 ? '+' : '-');
    return s;
}

std::uint32_t SignVector::mask() const {
    std::uint32_t m = 0;
    for (std::size_t b = 0; b < entries.size(); ++b)
        if (entries[b] < 0) m |= (1u << b);
    return m;
}

SignVector SignVector::from_string(const std::string& s, int n) {
    if (int(s.size()) != n * n)
        throw ShapeError("sign string length does not match n^2");
    SignVector v;
    v.n = n;
    v.entries.reserve(s.size());
    for (char c : s) {
        if (c == '+') v.entries.push_back(1);
        else if (c == '-') v.entries.push_back(-1);
        else throw ShapeError("sign string must contain only '+'/'-'");
    }
    return v;
}

SignVector SignVector::from_index(std::uint64_t index, int n) {
    const int m = n * n;
    SignVector v;
    v.n = n;
    v.entries.assign(m, 1);
    for (int b = 0; b < m; ++b)
        if (index & (1ull << (m - 1 - b))) v.entries[b] = -1;
    return v;
}

SignVector SignVector::all_plus(int n) {
    SignVector v;
    v.n = n;
    v.entries.assign(std::size_t(n) * n, 1);
    return v;
}

SignVector SignVector::random(int n, SeededRng& rng) {
    SignVector v;
    v.n = n;
    v.entries.resize(std::size_t(n) * n);
    for (auto& e : v.entries) e = rng.next_sign();
    return v;
}

// |psi> = (1/n) sum_{ij} |ij>_AB |ij>_C, flat index ab * n^2 + c
CVec psi(const GameInstance& g) {
    const int n2 = g.n * g.n;
    CVec v = CVec::Zero(std::size_t(n2) * n2);
    for (int ab = 0; ab < n2; ++ab) v(std::size_t(ab) * n2 + ab) = 1.0 / g.n;
    return v;
}

CVec psi_eps(const GameInstance& g, const SignVector& eps) {
    const int n2 = g.n * g.n;
    CVec v = CVec::Zero(std::size_t(n2) * n2);
    for (int ab = 0; ab < n2; ++ab)
        v(std::size_t(ab) * n2 + ab) = double(eps.entries[ab]) / g.n;
    return v;
}

GameTensor game_tensor(const GameInstance& g, const SignVector& eps) {
    const int n2 = g.n * g.n;
    CMat M = CMat::Zero(n2, n2);
    for (int ab = 0; ab < n2; ++ab)
        M(ab, ab) = double(eps.entries[ab]) / n2;
    return {g.n, std::move(M)};
}

std::uint64_t sign_count(int n) {
    const int m = n * n;
    if (m > kEnumerationCapBits)
        throw EnumerationTooLarge(
            "2^" + std::to_string(m) + " sign vectors exceed the enumeration cap 2^" +
            std::to_string(kEnumerationCapBits) + "; use Monte Carlo mode");
    return 1ull << m;
}

std::vector<SignVector> enumerate_signs(int n) {
    const std::uint64_t total = sign_count(n);
    std::vector<SignVector> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx)
        out.push_back(SignVector::from_index(idx, n));
    return out;
}

double honest_value(const GameInstance& g) {
    // E_eps || G_eps ||_{S1}^2.  The tensor is diagonal, so the trace norm
    // is the sum of the moduli of its diagonal.
    const std::uint64_t total = sign_count(g.n);
    const int n2 = g.n * g.n;
    double acc = 0.0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        SignVector eps = SignVector::from_index(idx, g.n);
        double tn = 0.0;
        for (int ab = 0; ab < n2; ++ab) tn += std::abs(double(eps.entries[ab])) / n2;
        acc += tn * tn;
    }
    return acc / double(total);
}

} // namespace pv

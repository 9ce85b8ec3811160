#include <doctest.h>

#include "pv/game.hpp"

using namespace pv;

TEST_CASE("question state is the normalized maximally correlated vector") {
    GameInstance g{2};
    CVec p = psi(g);
    CHECK(p.size() == 16);
    CHECK(p.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // entry at (ab, ab') nonzero only when ab == ab', value 1/n
    CHECK(std::abs(p(0) - cplx(0.5, 0)) < 1e-12);   // (00,00)
    CHECK(std::abs(p(1)) < 1e-12);                  // (00,01)
    CHECK(std::abs(p(5) - cplx(0.5, 0)) < 1e-12);   // (01,01)
}

TEST_CASE("signed target state stays normalized and flips entries") {
    GameInstance g{2};
    SignVector eps = SignVector::from_string("+-+-", 2);
    CVec pe = psi_eps(g, eps);
    CHECK(pe.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(pe(5) - cplx(-0.5, 0)) < 1e-12);  // ij = 01 carries sign -1
}

TEST_CASE("game tensor is diagonal with entries eps/n^2 and trace norm 1") {
    GameInstance g{3};
    SignVector eps = SignVector::from_index(137, 3);
    GameTensor t = game_tensor(g, eps);
    CHECK(t.matrix.rows() == 9);
    double off = 0.0;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            if (a != b) off += std::abs(t.matrix(a, b));
    CHECK(off < 1e-14);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(t.matrix(i * 3 + j, i * 3 + j) - cplx(eps.at(i, j) / 9.0, 0)) < 1e-14);
    CHECK(trace_norm(t.matrix) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("honest value is 1 for n = 2, 3, 4") {
    for (int n : {2, 3, 4})
        CHECK(honest_value(GameInstance{n}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sign vector enumeration and serialization") {
    auto all = enumerate_signs(2);
    CHECK(all.size() == 16);
    CHECK(all[0].to_string() == "++++");          // lexicographic start
    CHECK(all[15].to_string() == "----");
    for (std::uint64_t i = 0; i < 16; ++i) {
        CHECK(SignVector::from_string(all[i].to_string(), 2).mask() == all[i].mask());
        CHECK(SignVector::from_index(i, 2).to_string() == all[std::size_t(i)].to_string());
    }
    SignVector f = all[3].flipped(0);
    CHECK(f.entries[0] == -all[3].entries[0]);
    CHECK(sign_count(4) == (1ull << 16));
    CHECK_THROWS_AS(sign_count(5), EnumerationTooLarge);  // 25 bits past the cap
}

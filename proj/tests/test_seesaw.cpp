#include <doctest.h>

#include "helpers.hpp"
#include "pv/seesaw.hpp"

using namespace pv;

TEST_CASE("phi update reaches the top eigenvalue of the quadratic form") {
    SeededRng rng(1);
    PureStrategy S = testutil::random_isometric_pure(2, 2, 8, 4, rng);
    auto eps_set = enumerate_signs(2);
    double before = 0.0;
    CMat M = CMat::Zero(4, 4);
    for (const auto& eps : eps_set) {
        CMat T = amplitude_operator_phi(S, eps);
        M += T.adjoint() * T / double(eps_set.size());
    }
    before = (S.phi.adjoint() * M * S.phi)(0, 0).real();
    PureStrategy up = update_block(S, "phi", eps_set);
    double after = value_exact(up).value;
    auto [top, vec] = top_hermitian_eigenpair(M);
    (void)vec;
    CHECK(after == doctest::Approx(top).epsilon(1e-9));
    CHECK(after >= before - 1e-12);
}

TEST_CASE("single block updates never decrease the value") {
    SeededRng rng(2);
    PureStrategy S = testutil::random_isometric_pure(2, 1, 4, 2, rng);
    auto eps_set = enumerate_signs(2);
    double v = value_exact(S).value;
    for (const std::string block : {"Wt", "Vt", "W", "V", "phi"}) {
        PureStrategy up = update_block(S, block, eps_set);
        double vu = value_exact(up).value;
        CHECK(vu >= v - 1e-10);
        S = up;
        v = vu;
    }
    validate(S);
}

TEST_CASE("do-nothing is stationary under the phi update") {
    SeededRng rng(3);
    PureStrategy S = zoo("do_nothing", 2, 0, 0, 0, rng);
    PureStrategy up = update_block(S, "phi", enumerate_signs(2));
    CHECK(value_exact(up).value == doctest::Approx(0.25).epsilon(1e-12));  // dim-1 state
}

TEST_CASE("short optimization run: monotone, valid, reproducible") {
    SeesawConfig cfg;
    cfg.n = 2;
    cfg.k = 1;
    cfg.kt = 2;
    cfg.r = 1;
    cfg.restarts = 2;
    cfg.max_iters = 8;
    cfg.seed = 99;
    SeesawTrace tr = optimize(cfg);
    for (const auto& restart : tr.values)
        for (std::size_t i = 1; i < restart.size(); ++i)
            CHECK(restart[i] >= restart[i - 1] - 1e-10);
    validate(tr.best);
    CHECK(tr.best_value <= 1.0 + 1e-9);
    CHECK(value_exact(tr.best).value == doctest::Approx(tr.best_value).epsilon(1e-9));
    SeesawTrace tr2 = optimize(cfg);
    REQUIRE(tr2.values.size() == tr.values.size());
    for (std::size_t t = 0; t < tr.values.size(); ++t) {
        REQUIRE(tr2.values[t].size() == tr.values[t].size());
        for (std::size_t i = 0; i < tr.values[t].size(); ++i)
            CHECK(tr.values[t][i] == tr2.values[t][i]);
    }
}

TEST_CASE("warm start from column majority never falls below its value") {
    SeededRng rng(4);
    SeesawConfig cfg;
    cfg.n = 2;
    cfg.k = 1;
    cfg.kt = 4;
    cfg.r = 2;
    cfg.msg = 2;
    cfg.restarts = 1;
    cfg.max_iters = 10;
    cfg.warm_start = zoo("column_majority", 2, 0, 0, 0, rng);
    SeesawTrace tr = optimize(cfg);
    CHECK(tr.best_value >= 0.375 - 1e-10);
}

TEST_CASE("trace csv has the expected layout") {
    SeesawConfig cfg;
    cfg.n = 2;
    cfg.k = 1;
    cfg.kt = 1;
    cfg.r = 1;
    cfg.restarts = 1;
    cfg.max_iters = 2;
    SeesawTrace tr = optimize(cfg);
    std::string csv = trace_csv(tr);
    CHECK(csv.rfind("restart,iter,value\n", 0) == 0);
    CHECK(csv.find("0,0,") != std::string::npos);
}

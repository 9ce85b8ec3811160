// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Every numeric target and tolerance here is pinned.
#include <cmath>
#include <cstdio>
#include <string>

#include "helpers.hpp"
#include "pv/cli.hpp"
#include "pv/hypercube.hpp"
#include "pv/norms.hpp"
#include "pv/seesaw.hpp"

using namespace pv;

static int failures = 0;

static void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

// 1. honest value is 1 at n = 2, 3, 4
static void criterion_1() {
    bool ok = true;
    for (int n : {2, 3, 4}) ok = ok && std::abs(honest_value(GameInstance{n}) - 1.0) <= 1e-9;
    report(1, ok, "honest value 1 at n=2,3,4");
}

// 2. do-nothing value is 1/n^2 at n = 2, 3
static void criterion_2() {
    SeededRng rng(1);
    double v2 = value_exact(zoo("do_nothing", 2, 0, 0, 0, rng)).value;
    double v3 = value_exact(zoo("do_nothing", 3, 0, 0, 0, rng)).value;
    bool ok = std::abs(v2 - 0.25) <= 1e-12 && std::abs(v3 - 1.0 / 9.0) <= 1e-12;
    report(2, ok, "do-nothing value 1/4 and 1/9");
}

// 3. column-majority value is 0.375 at n = 2
static void criterion_3() {
    SeededRng rng(1);
    double v = value_exact(zoo("column_majority", 2, 0, 0, 0, rng)).value;
    report(3, std::abs(v - 0.375) <= 1e-12, "column-majority value 0.375");
}

// 4. omega <= E||Phi^i||_inf for 100 random strategies at n=2 and 20 at n=3
static void criterion_4() {
    bool ok = true;
    double worst = -1.0;
    auto probe = [&](int n, int count, std::uint64_t seed0) {
        const std::uint64_t total = sign_count(n);
        for (int t = 0; t < count && ok; ++t) {
            int k = 1 + t % 2, kt = 1 + t % 4, r = 1 + (t / 2) % 2;
            PureStrategy S = zoo("random", n, k, kt, r, SeededRng(seed0 + std::uint64_t(t)));
            double omega = value_exact(S).value;
            HypercubeFunction Fi = phi(S, PhiVariant::i);
            double mean = 0.0;
            for (std::uint64_t idx = 0; idx < total; ++idx)
                mean += op_norm(Fi.eval(SignVector::from_index(idx, n)));
            mean /= double(total);
            worst = std::max(worst, omega - mean);
            ok = ok && omega <= mean + 1e-9;
        }
    };
    probe(2, 100, 1000);
    probe(3, 20, 5000);
    report(4, ok, "omega <= mean op norm of first variant, worst slack " + std::to_string(-worst));
}

// 5. sigma of the linear unit-vector map and of a constant map
static void criterion_5() {
    bool ok = true;
    for (int m : {4, 9, 16}) {
        std::vector<CMat> xs;
        for (int j = 0; j < m; ++j) {
            CMat e = CMat::Zero(m, 1);
            e(j, 0) = 1.0;
            xs.push_back(e);
        }
        HypercubeFunction F =
            linear_hypercube_map(m, xs, NormTag{NormTag::Kind::Euclidean, m, 0, 0});
        double s = sigma(F, true, 0, SeededRng(1)).sigma;
        ok = ok && std::abs(s - std::log(double(m)) / std::sqrt(double(m))) <= 1e-9;
    }
    HypercubeFunction C;
    C.m = 4;
    C.space = NormTag{NormTag::Kind::Euclidean, 2, 0, 0};
    C.eval = [](const SignVector&) { return CMat::Ones(2, 1); };
    ok = ok && sigma(C, true, 0, SeededRng(1)).sigma <= 1e-12;
    report(5, ok, "sigma log(m)/sqrt(m) for unit vectors, 0 for constants");
}

// 6. linear-map Pisier identity at m = 4, 9
static void criterion_6() {
    bool ok = true;
    for (int m : {4, 9}) {
        SeededRng rng{std::uint64_t(m)};
        std::vector<CMat> xs;
        for (int j = 0; j < m; ++j) {
            CMat x(2, 2);
            for (Eigen::Index c = 0; c < x.size(); ++c) x(c) = rng.next_cgaussian();
            xs.push_back(x);
        }
        HypercubeFunction F =
            linear_hypercube_map(m, xs, NormTag{NormTag::Kind::Euclidean, 4, 0, 0});
        PisierCheck chk = pisier_check(F, true, 0, SeededRng(2));
        ok = ok && std::abs(chk.ratio * std::log(double(m)) - 1.0) <= 1e-9;
    }
    report(6, ok, "lhs/rhs * log(m) = 1 for seeded linear maps");
}

// 7. regularity and mean of the state-slot variant at n = 2, 3
static void criterion_7() {
    bool ok = true;
    for (int n : {2, 3}) {
        PureStrategy S = testutil::random_isometric_pure(n, 1, 2, 1, SeededRng(20 + std::uint64_t(n)));
        HypercubeFunction F3 = phi(S, PhiVariant::iii);
        F3.norm_opts.budget = 12;
        F3.norm_opts.restarts = 1;
        F3.norm_opts.r_max = 1;
        SigmaReport rep = n == 2 ? sigma(F3, true, 0, SeededRng(3))
                                 : sigma(F3, false, 4, SeededRng(3));
        ok = ok && rep.sigma <= std::log(double(n * n)) / double(n) * (1.0 + 1e-6);
        ok = ok && norm_of_mean(F3) <= 1e-12;
    }
    report(7, ok, "sigma cap log(n^2)/n and vanishing mean for the sign-linear variant");
}

// 8. type-2 lower-bound suite
static void criterion_8() {
    bool ok = true;
    for (int t = 0; t < 50 && ok; ++t) {
        TypeEstimate e =
            type2_lower(NormTag{NormTag::Kind::Euclidean, 4, 0, 0}, 4, 25, SeededRng(100 + std::uint64_t(t)));
        ok = ok && e.lower <= 1.0 + 1e-6;
    }
    for (int m : {2, 4, 8}) {
        TypeEstimate t = type2_lower(NormTag{NormTag::Kind::L1, m, 0, 0}, m, 60, SeededRng(7));
        ok = ok && t.lower >= 0.999 * std::sqrt(double(m));
    }
    TypeEstimate s = type2_lower(NormTag{NormTag::Kind::TraceClass, 2, 2, 0}, 4, 60, SeededRng(8));
    ok = ok && s.lower >= 0.999 * std::sqrt(2.0);
    report(8, ok, "l2 capped at 1, l1 and trace-class witnesses reach sqrt growth");
}

// 9. rademacher mean norm oracle and the grothendieck chain
static void criterion_9() {
    double m2 = rademacher_mean_norm(NormTag{NormTag::Kind::Operator, 2, 2, 0}, 2, true, 0,
                                     SeededRng(1));
    bool ok = std::abs(m2 - (2.0 + std::sqrt(2.0)) / 2.0) <= 1e-12;
    for (int n : {2, 3}) {
        double lhs = rademacher_mean_norm(NormTag{NormTag::Kind::InjectiveL1L1, n, n, 0}, n, true,
                                          0, SeededRng(1)) /
                     double(n * n);
        double rhs = rademacher_mean_norm(NormTag{NormTag::Kind::Operator, n, n, 0}, n, true, 0,
                                          SeededRng(1)) /
                     double(n);
        ok = ok && lhs <= rhs + 1e-12;
    }
    report(9, ok, "(2+sqrt2)/2 oracle and injective-l1 vs operator chain");
}

// 10. purification: value preserved, dimension cap, single-kraus equivalence
static void criterion_10() {
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
        ChannelStrategy C = testutil::random_channel(2, 1, 4, 2, 2, 2, SeededRng(300 + std::uint64_t(t)));
        double vc = value_channel(C).value;
        PureStrategy P = purify(C);
        validate(P);
        ok = ok && std::abs(value_exact(P).value - vc) <= 1e-9;
        ok = ok && std::uint64_t(P.kt) <=
                       std::uint64_t(C.n) * C.n * C.k * C.kt * C.kt * C.kt * C.kt;
    }
    PureStrategy S = testutil::random_isometric_pure(2, 1, 4, 2, SeededRng(44));
    ChannelStrategy C1 = testutil::as_channel(S);
    ok = ok && std::abs(value_channel(C1).value - value_exact(S).value) <= 1e-9;
    report(10, ok, "value preserved within 1e-9 and kt' within the stated cap");
}

// 11. see-saw behaviour on the pinned configuration
static void criterion_11() {
    SeesawConfig cfg;
    cfg.n = 2;
    cfg.k = 1;
    cfg.kt = 4;
    cfg.r = 2;
    cfg.msg = 2;
    cfg.restarts = 8;
    cfg.max_iters = 200;
    cfg.seed = 11;
    cfg.warm_start = zoo("column_majority", 2, 0, 0, 0, SeededRng(1));
    SeesawTrace tr = optimize(cfg);
    bool ok = tr.best_value >= 0.375 - 1e-10;
    for (const auto& restart : tr.values)
        for (std::size_t i = 1; i < restart.size(); ++i)
            ok = ok && restart[i] >= restart[i - 1] - 1e-10;
    SeesawTrace tr2 = optimize(cfg);
    ok = ok && tr2.values == tr.values;
    report(11, ok, "monotone traces, warm-start floor 0.375, seed-reproducible, best " +
                       std::to_string(tr.best_value));
}

// 12. monte-carlo consistency and the gaussian M_50 window
static void criterion_12() {
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
        PureStrategy S = testutil::random_isometric_pure(2, 1, 4, 2, SeededRng(500 + std::uint64_t(t)));
        double exact = value_exact(S).value;
        ValueReport mc = value_mc(S, 10000, SeededRng(600 + std::uint64_t(t)));
        ok = ok && std::abs(mc.value - exact) <= 3.0 * mc.stderr_ + 1e-12;
    }
    auto [mean, err] = gaussian_mean_norm(NormTag{NormTag::Kind::Operator, 50, 50, 0}, 500,
                                          SeededRng(9));
    double scaled = mean / std::sqrt(50.0);
    ok = ok && scaled >= 1.8 && scaled <= 2.2;
    report(12, ok, "mc within 3 stderr; gaussian mean " + std::to_string(scaled) + " in [1.8,2.2]");
}

// 13. implied-constant report generates and validates
static void criterion_13() {
    bool ok = true;
    std::string detail = "report generated and schema-valid";
    try {
        nlohmann::json rep = cli::run(nlohmann::json{{"command", "report"},
                                                     {"n_list", {2, 3}},
                                                     {"sigma_ii_samples", 4}});
        std::string why;
        ok = cli::validate_report(rep, &why);
        if (!ok) detail = "schema: " + why;
        ok = ok && rep.at("results").at("entries").size() >= 10;  // 4 zoo + seesaw per n
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(13, ok, detail);
}

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 13 criteria passed\n");
    return failures ? 1 : 0;
}

#include <doctest.h>

#include "pv/cli.hpp"

using namespace pv;
using nlohmann::json;

TEST_CASE("honest command reports the game value") {
    json cfg{{"command", "honest"}, {"n", 3}};
    json rep = cli::run(cfg);
    CHECK(rep.at("results").at("value").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.at("config_hash").get<std::string>() == cli::config_hash(cfg));
    std::string why;
    CHECK(cli::validate_report(rep, &why));
}

TEST_CASE("strict schema: unknown keys and bad commands are rejected") {
    CHECK_THROWS_AS(cli::run(json{{"command", "honest"}, {"n", 2}, {"bogus", 1}}),
                    cli::ConfigError);
    CHECK_THROWS_AS(cli::run(json{{"command", "frobnicate"}}), cli::ConfigError);
    CHECK_THROWS_AS(cli::run(json{{"command", "honest"}}), cli::ConfigError);  // missing n
    CHECK_THROWS_AS(cli::run(json{{"command", "honest"}, {"n", "two"}}), cli::ConfigError);
}

TEST_CASE("eval command matches the enumeration oracle") {
    json rep = cli::run(json{{"command", "eval"}, {"strategy", "do_nothing"}, {"n", 2}});
    CHECK(rep.at("results").at("value").get<double>() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rep.at("results").at("mode") == "exact");
}

TEST_CASE("type2 command reaches the l1 witness bound") {
    json rep = cli::run(json{{"command", "type2"}, {"space", "l1"}, {"d1", 4}, {"m", 4}});
    CHECK(rep.at("results").at("lower").get<double>() >= 1.999);
}

TEST_CASE("identical configs reproduce identical results") {
    json cfg{{"command", "eval"}, {"strategy", "random"}, {"n", 2}, {"k", 1},
             {"kt", 2},          {"r", 1},               {"mode", "mc"}, {"samples", 200},
             {"seed", 77}};
    json a = cli::run(cfg), b = cli::run(cfg);
    CHECK(a.at("results").dump() == b.at("results").dump());
}

TEST_CASE("overrides parse numbers and strings") {
    json cfg = cli::apply_overrides(json{{"command", "honest"}},
                                    {"n=3", "note=plain", "flag=true"});
    CHECK(cfg.at("n") == 3);
    CHECK(cfg.at("note") == "plain");
    CHECK(cfg.at("flag") == true);
}

TEST_CASE("csv rows carry the sweep columns") {
    json rep = cli::run(json{{"command", "honest"}, {"n", 2}, {"seed", 5}});
    std::string csv = cli::csv_rows(rep);
    CHECK(csv.rfind("command,n,k,kt,r,quantity,value,stderr,seed\n", 0) == 0);
    CHECK(csv.find("honest,2,,,,honest_value,1") != std::string::npos);
    CHECK(csv.find(",5\n") != std::string::npos);
}

TEST_CASE("norm command on a closed-form space") {
    json rep = cli::run(json{{"command", "norm"}, {"space", "operator"}, {"d1", 3}, {"d2", 3}});
    CHECK(rep.at("results").at("value").get<double>() > 0.0);
    CHECK(rep.at("results").at("cert") == "exact");
}

TEST_CASE("report validator flags missing pieces") {
    json rep = cli::run(json{{"command", "honest"}, {"n", 2}});
    json broken = rep;
    broken.erase("config_hash");
    std::string why;
    CHECK_FALSE(cli::validate_report(broken, &why));
    CHECK(why.find("config_hash") != std::string::npos);
}

#include <doctest.h>

#include "omt/experiment/csv.hpp"

using omt::experiment::format_sig6;
using omt::experiment::parse_csv;
using omt::experiment::render_csv;
using omt::sim::MetricsRow;
using omt::sim::MetricsTable;

namespace {

MetricsRow sample_row() {
    MetricsRow r;
    r.procedure = "addis-spending";
    r.batch_size = 10;
    r.pi_alt = 0.2;
    r.mu_alt = 4.0;
    r.mu_null = -2.0;
    r.rho = 0.8;
    r.n = 200;
    r.trials = 2000;
    r.seed = 20240811;
    r.power = 0.60792710185402663;
    r.power_se = 0.0049251;
    r.fwer = 0.175;
    r.fwer_se = 0.00013377201459869557;
    return r;
}

} // namespace

TEST_CASE("six significant digits, plain integers unchanged") {
    CHECK(format_sig6(0.60792710185402663) == "0.607927");
    CHECK(format_sig6(0.2) == "0.2");
    CHECK(format_sig6(-2.0) == "-2");
    CHECK(format_sig6(0.0) == "0");
    CHECK(format_sig6(0.00013377201459869557) == "0.000133772");
    CHECK(format_sig6(123456789.0) == "1.23457e+08");
}

TEST_CASE("render produces the documented header and layout") {
    MetricsTable t;
    t.rows.push_back(sample_row());
    const std::string csv = render_csv(t);
    CHECK(csv ==
          "procedure,batch_size,pi_A,mu_A,mu_N,rho,n,trials,seed,power,power_se,"
          "fwer,fwer_se\n"
          "addis-spending,10,0.2,4,-2,0.8,200,2000,20240811,0.607927,0.0049251,"
          "0.175,0.000133772\n");
}

TEST_CASE("render and parse round-trip to the same text") {
    MetricsTable t;
    t.rows.push_back(sample_row());
    MetricsRow second = sample_row();
    second.procedure = "closed-addis-spending";
    second.batch_size = 1;
    second.power = 0.0;
    t.rows.push_back(second);

    const std::string once = render_csv(t);
    const MetricsTable back = parse_csv(once);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0].procedure == "addis-spending");
    CHECK(back.rows[1].batch_size == 1);
    CHECK(render_csv(back) == once); // textual fixed point
}

TEST_CASE("parse rejects malformed input with line numbers") {
    CHECK_THROWS_AS((void)parse_csv(""), omt::config_error);
    CHECK_THROWS_AS((void)parse_csv("wrong,header\n"), omt::config_error);
    const std::string good = std::string(omt::experiment::kCsvHeader) + "\n";
    CHECK_NOTHROW((void)parse_csv(good));
    try {
        (void)parse_csv(good + "a,b,c\n");
        FAIL("expected config_error");
    } catch (const omt::config_error& e) {
        CHECK(e.line() == 2);
    }
    try {
        (void)parse_csv(good +
                        "addis-spending,1,0.2,4,0,0.8,100,50,9,xx,0,0.1,0.01\n");
        FAIL("expected config_error");
    } catch (const omt::config_error& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("xx") != std::string::npos);
    }
}

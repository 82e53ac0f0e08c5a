#include <doctest.h>

#include "omt/record.hpp"

using omt::ProcedureId;
using omt::ProcedureState;
using omt::StepRecord;

namespace {

StepRecord ok_record(omt::Index i, double p, double alpha_i) {
    StepRecord r;
    r.index = i;
    r.p_value = p;
    r.alpha_i = alpha_i;
    r.rejected = p <= alpha_i;
    r.below_tau = p <= r.tau_i;       // tau = 1 default
    r.below_lambda = p <= r.lambda_i; // lambda = 0 default
    return r;
}

} // namespace

TEST_CASE("state appends gap-free and exposes records") {
    ProcedureState s{ProcedureId::alpha_spending, 0.2};
    CHECK(s.next_index() == 1);
    s.append(ok_record(1, 0.04, 0.1));
    s.append(ok_record(2, 0.5, 0.05));
    CHECK(s.size() == 2);
    CHECK(s.record(1).rejected);
    CHECK_FALSE(s.record(2).rejected);
    CHECK(s.next_index() == 3);
    CHECK_THROWS_AS((void)s.record(3), std::out_of_range);
}

TEST_CASE("procedure id round trip") {
    for (ProcedureId id :
         {ProcedureId::alpha_spending, ProcedureId::closed_alpha_spending,
          ProcedureId::online_graph, ProcedureId::addis_spending,
          ProcedureId::closed_addis_spending}) {
        CHECK(omt::parse_procedure_id(omt::to_string(id)) == id);
    }
    CHECK_THROWS_AS(omt::parse_procedure_id("custom"), std::invalid_argument);
    CHECK_THROWS_AS(omt::parse_procedure_id("bonferroni"), std::invalid_argument);
}

TEST_CASE("append rejects malformed records") {
    ProcedureState s{ProcedureId::custom, 0.2};

    SUBCASE("index gap") {
        CHECK_THROWS_AS(s.append(ok_record(2, 0.5, 0.1)), omt::invariant_error);
    }
    SUBCASE("p-value out of range") {
        CHECK_THROWS_AS(s.append(ok_record(1, 1.5, 0.1)), omt::invariant_error);
        CHECK_THROWS_AS(s.append(ok_record(1, -0.1, 0.1)), omt::invariant_error);
    }
    SUBCASE("level out of range") {
        CHECK_THROWS_AS(s.append(ok_record(1, 0.5, 1.0)), omt::invariant_error);
        CHECK_THROWS_AS(s.append(ok_record(1, 0.5, -0.2)), omt::invariant_error);
    }
    SUBCASE("decision flag must equal p <= alpha_i") {
        StepRecord r = ok_record(1, 0.05, 0.1);
        r.rejected = false;
        CHECK_THROWS_AS(s.append(r), omt::invariant_error);
    }
    SUBCASE("boundary p == alpha_i counts as a rejection") {
        StepRecord r = ok_record(1, 0.1, 0.1);
        CHECK(r.rejected);
        CHECK_NOTHROW(s.append(r));
    }
    SUBCASE("candidate below lambda must also be below tau") {
        StepRecord r = ok_record(1, 0.5, 0.1);
        r.tau_i = 0.4;
        r.lambda_i = 0.2;
        r.below_tau = false;
        r.below_lambda = true;
        CHECK_THROWS_AS(s.append(r), omt::invariant_error);
    }
    SUBCASE("flags must match the recorded thresholds") {
        StepRecord r = ok_record(1, 0.3, 0.1);
        r.tau_i = 0.8;
        r.lambda_i = 0.25;
        r.below_tau = true;
        r.below_lambda = true; // but 0.3 > 0.25
        CHECK_THROWS_AS(s.append(r), omt::invariant_error);
    }
    SUBCASE("lag cannot reach before the stream start") {
        StepRecord r = ok_record(1, 0.5, 0.1);
        r.lag = 1;
        CHECK_THROWS_AS(s.append(r), omt::invariant_error);
    }
    SUBCASE("alpha zero with p zero rejects") {
        StepRecord r = ok_record(1, 0.0, 0.0);
        CHECK(r.rejected);
        CHECK_NOTHROW(s.append(r));
    }
}

TEST_CASE("overall alpha is validated") {
    CHECK_THROWS_AS(ProcedureState(ProcedureId::custom, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ProcedureState(ProcedureId::custom, 1.0), std::invalid_argument);
}

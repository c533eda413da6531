#include <string>
#include <vector>

#include "doctest.h"

#include "circhad/audit.hpp"
#include "circhad/circulant.hpp"
#include "circhad/errors.hpp"
#include "circhad/hadamard.hpp"
#include "circhad/json_io.hpp"

using circhad::AuditReport;
using circhad::AuditStep;
using circhad::AuditStepId;
using circhad::AuditVerdict;
using circhad::CirculantMatrix;
using circhad::CongruenceMode;
using circhad::Rational;
using circhad::SignVector;

namespace {

const std::vector<AuditStepId> kChainOrder{
    AuditStepId::AcheS,         AuditStepId::AcheStar,    AuditStepId::DefH,
    AuditStepId::SJ,            AuditStepId::SstarJ,      AuditStepId::JJ,
    AuditStepId::C1,            AuditStepId::C2,          AuditStepId::C3Integrality,
    AuditStepId::C3Congruence,  AuditStepId::C4,          AuditStepId::C5,
};

const AuditStep& find_step(const AuditReport& report, AuditStepId id) {
    for (const auto& step : report.steps)
        if (step.id == id) return step;
    REQUIRE(false);
    return report.steps.front();
}

bool step_holds(const AuditStep& step) {
    return step.verdict == AuditVerdict::HoldsExactly ||
           step.verdict == AuditVerdict::IntegralitySatisfied;
}

}  // namespace

TEST_CASE("step and verdict names are stable") {
    CHECK(std::string(circhad::to_string(AuditStepId::AcheS)) == "acheS");
    CHECK(std::string(circhad::to_string(AuditStepId::AcheStar)) == "acheStar");
    CHECK(std::string(circhad::to_string(AuditStepId::DefH)) == "defH");
    CHECK(std::string(circhad::to_string(AuditStepId::C3Integrality)) == "C3-integrality");
    CHECK(std::string(circhad::to_string(AuditStepId::C3Congruence)) == "C3-congruence");
    CHECK(std::string(circhad::to_string(AuditVerdict::HoldsExactly)) == "holds-exactly");
    CHECK(std::string(circhad::to_string(AuditVerdict::IntegralitySatisfied)) ==
          "integrality-satisfied");
    CHECK(std::string(circhad::to_string(AuditVerdict::IntegralityViolated)) ==
          "integrality-violated");
    CHECK(std::string(circhad::to_string(AuditVerdict::Fails)) == "fails");
}

TEST_CASE("every catalog instance passes the full chain") {
    for (const auto& entry : circhad::catalog()) {
        const AuditReport report = circhad::full_audit(entry.row);
        REQUIRE(report.steps.size() == kChainOrder.size());
        for (std::size_t i = 0; i < kChainOrder.size(); ++i)
            CHECK(report.steps[i].id == kChainOrder[i]);
        for (const auto& step : report.steps) {
            CHECK(step_holds(step));
            CHECK_FALSE(step.witness.has_value());
        }
        CHECK(report.h == 1);
        CHECK(report.input_row == entry.row);
        CHECK_FALSE(report.synthetic_s.has_value());
        CHECK(report.conclusion.find("hold") != std::string::npos);
    }
}

TEST_CASE("extended mode changes nothing on genuine instances") {
    for (const auto& entry : circhad::catalog()) {
        const AuditReport strict = circhad::full_audit(entry.row, CongruenceMode::Strict);
        const AuditReport extended = circhad::full_audit(entry.row, CongruenceMode::Extended);
        REQUIRE(strict.steps.size() == extended.steps.size());
        for (std::size_t i = 0; i < strict.steps.size(); ++i)
            CHECK(strict.steps[i].verdict == extended.steps[i].verdict);
    }
}

TEST_CASE("audits are deterministic") {
    const SignVector row{1, -1, -1, -1};
    const std::string a =
        circhad::audit_report_to_json(circhad::full_audit(row, CongruenceMode::Extended));
    const std::string b =
        circhad::audit_report_to_json(circhad::full_audit(row, CongruenceMode::Extended));
    CHECK(a == b);
}

TEST_CASE("non-Hadamard rows are rejected up front") {
    CHECK_THROWS_AS(circhad::full_audit({1, 1, 1, 1}), circhad::PreconditionError);
    CHECK_THROWS_AS(circhad::full_audit({1, 1, -1, -1}), circhad::PreconditionError);
    CHECK_THROWS_AS(circhad::full_audit({1, -1, -1}), circhad::PreconditionError);
}

TEST_CASE("the step helpers require a normalized row") {
    CHECK_THROWS_AS(circhad::check_c1({1, -1, -1, -1}), circhad::PreconditionError);
    CHECK(circhad::check_c1({-1, 1, 1, 1}).verdict == AuditVerdict::HoldsExactly);
    CHECK(circhad::check_c2({-1, 1, 1, 1}).verdict == AuditVerdict::HoldsExactly);
    const AuditStep rec = circhad::check_reconstruction({-1, 1, 1, 1});
    CHECK(rec.id == AuditStepId::AcheS);
    CHECK(rec.verdict == AuditVerdict::HoldsExactly);
    const auto modular = circhad::check_modular_step({-1, 1, 1, 1});
    REQUIRE(modular.size() == 4);
    CHECK(modular[0].id == AuditStepId::C3Integrality);
    CHECK(modular[0].verdict == AuditVerdict::IntegralitySatisfied);
    CHECK(modular[1].id == AuditStepId::C3Congruence);
    CHECK(modular[1].verdict == AuditVerdict::HoldsExactly);
    CHECK(modular[2].id == AuditStepId::C4);
    CHECK(modular[3].id == AuditStepId::C5);
    CHECK(step_holds(modular[2]));
    CHECK(step_holds(modular[3]));
}

TEST_CASE("order 1 audits cleanly") {
    const AuditReport report = circhad::full_audit({1});
    CHECK(report.h == 1);
    for (const auto& step : report.steps) CHECK(step_holds(step));
    const AuditReport negated = circhad::full_audit({-1});
    for (const auto& step : negated.steps) CHECK(step_holds(step));
}

TEST_CASE("synthetic audit of S' = J/5 at h = 3") {
    // 4h(2h+1)^2 S S' = (588/5) J: integral nowhere, so strict reduction is
    // undefined while extended reduction succeeds (5 is invertible mod 3 and
    // 588 * 5^{-1} = 0 mod 3).
    const Rational fifth(1, 5);
    const CirculantMatrix s = circhad::circ({fifth, fifth, fifth, fifth, fifth});

    const AuditReport strict = circhad::full_audit_synthetic(s, 3, CongruenceMode::Strict);
    CHECK(strict.h == 3);
    REQUIRE(strict.synthetic_s.has_value());
    CHECK(strict.input_row.empty());
    const AuditStep& integ = find_step(strict, AuditStepId::C3Integrality);
    CHECK(integ.verdict == AuditVerdict::IntegralityViolated);
    REQUIRE(integ.witness.has_value());
    CHECK(integ.witness->find("588/5") != std::string::npos);
    const AuditStep& strict_cong = find_step(strict, AuditStepId::C3Congruence);
    CHECK(strict_cong.verdict == AuditVerdict::Fails);
    REQUIRE(strict_cong.witness.has_value());
    CHECK(strict_cong.witness->find("not an integer") != std::string::npos);

    const AuditReport extended = circhad::full_audit_synthetic(s, 3, CongruenceMode::Extended);
    CHECK(find_step(extended, AuditStepId::C3Integrality).verdict ==
          AuditVerdict::IntegralityViolated);
    CHECK(find_step(extended, AuditStepId::C3Congruence).verdict ==
          AuditVerdict::HoldsExactly);

    // S J = J holds for any doubly stochastic S', and C4/C5 fail at h = 3
    CHECK(find_step(strict, AuditStepId::SJ).verdict == AuditVerdict::HoldsExactly);
    CHECK(find_step(strict, AuditStepId::C4).verdict == AuditVerdict::Fails);
    CHECK(find_step(strict, AuditStepId::C5).verdict == AuditVerdict::Fails);
    CHECK(strict.conclusion.find("violations at") != std::string::npos);
}

TEST_CASE("synthetic audit of S' = I at h = 3") {
    const CirculantMatrix s = circhad::constant(circhad::ConstantKind::Identity, 5);
    const AuditReport report = circhad::full_audit_synthetic(s, 3);

    // M = 588 I is integral and 588 = 0 mod 3, so both C3 halves pass while
    // the defining identity fails: H' H'* has first row (1685,-79,-79,-79,-79)
    // against the required (5,0,0,0,0).
    CHECK(find_step(report, AuditStepId::C3Integrality).verdict ==
          AuditVerdict::IntegralitySatisfied);
    CHECK(find_step(report, AuditStepId::C3Congruence).verdict ==
          AuditVerdict::HoldsExactly);
    const AuditStep& def = find_step(report, AuditStepId::DefH);
    CHECK(def.verdict == AuditVerdict::Fails);
    REQUIRE(def.witness.has_value());
    CHECK(def.witness->find("1685") != std::string::npos);
    CHECK(def.witness->find("5") != std::string::npos);
    CHECK(find_step(report, AuditStepId::C1).verdict == AuditVerdict::Fails);
    CHECK(find_step(report, AuditStepId::C2).verdict == AuditVerdict::Fails);
    CHECK(find_step(report, AuditStepId::C4).verdict == AuditVerdict::Fails);
    CHECK(find_step(report, AuditStepId::C5).verdict == AuditVerdict::Fails);
    // identity S commutes with everything, so the J bookkeeping still holds
    CHECK(find_step(report, AuditStepId::SJ).verdict == AuditVerdict::HoldsExactly);
    CHECK(find_step(report, AuditStepId::SstarJ).verdict == AuditVerdict::HoldsExactly);
    CHECK(find_step(report, AuditStepId::JJ).verdict == AuditVerdict::HoldsExactly);
}

TEST_CASE("synthetic audit with a mixed-denominator S'") {
    // first row (1/3, 1/3, 1/3, 0, 0): 4h(2h+1)^2 S S' comes out as
    // (196, 392/3, 196/3, 196/3, 392/3). Integrality fails at entry 1, and
    // the extended reduction already fails at entry 0 with residue 1 mod 3.
    const Rational third(1, 3);
    const CirculantMatrix s =
        circhad::circ({third, third, third, Rational(0), Rational(0)});

    const AuditReport extended = circhad::full_audit_synthetic(s, 3, CongruenceMode::Extended);
    const AuditStep& integ = find_step(extended, AuditStepId::C3Integrality);
    CHECK(integ.verdict == AuditVerdict::IntegralityViolated);
    REQUIRE(integ.witness.has_value());
    CHECK(integ.witness->find("392/3") != std::string::npos);
    const AuditStep& cong = find_step(extended, AuditStepId::C3Congruence);
    CHECK(cong.verdict == AuditVerdict::Fails);
    REQUIRE(cong.witness.has_value());
    CHECK(cong.witness->find("196") != std::string::npos);
    CHECK(cong.witness->find("does not yield") != std::string::npos);
}

TEST_CASE("extended reduction reports a non-invertible denominator") {
    // S' = J/3 gives 4h(2h+1)^2 S S' = (980/3) J; every entry has the
    // denominator 3, which is not a unit modulo h = 3.
    const Rational third(1, 3);
    const CirculantMatrix s = circhad::circ({third, third, third, third, third});

    const AuditReport extended = circhad::full_audit_synthetic(s, 3, CongruenceMode::Extended);
    const AuditStep& integ = find_step(extended, AuditStepId::C3Integrality);
    CHECK(integ.verdict == AuditVerdict::IntegralityViolated);
    REQUIRE(integ.witness.has_value());
    CHECK(integ.witness->find("980/3") != std::string::npos);
    const AuditStep& cong = find_step(extended, AuditStepId::C3Congruence);
    CHECK(cong.verdict == AuditVerdict::Fails);
    REQUIRE(cong.witness.has_value());
    CHECK(cong.witness->find("not invertible") != std::string::npos);
}

TEST_CASE("synthetic audit rejects h = 0") {
    const CirculantMatrix s = circhad::constant(circhad::ConstantKind::Identity, 4);
    CHECK_THROWS_AS(circhad::full_audit_synthetic(s, 0), std::invalid_argument);
}

TEST_CASE("witnesses appear exactly on failing steps") {
    const CirculantMatrix s = circhad::constant(circhad::ConstantKind::Identity, 5);
    for (const auto mode : {CongruenceMode::Strict, CongruenceMode::Extended}) {
        const AuditReport report = circhad::full_audit_synthetic(s, 3, mode);
        for (const auto& step : report.steps) {
            const bool failing = step.verdict == AuditVerdict::Fails ||
                                 step.verdict == AuditVerdict::IntegralityViolated;
            CHECK(step.witness.has_value() == failing);
        }
    }
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace qce;
using std::numbers::pi;

TEST(ProgramText, StatementsRunInOrderWritten)
{
    const auto p = parse_program("Y1; X1; X1");
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(std::get<Gate>(p.body[0]), Y(1));
    EXPECT_EQ(std::get<Gate>(p.body[2]), X(1));
}

TEST(ProgramText, FullGrammar)
{
    const auto p = parse_program(R"(program demo   # name first
-X2
Y1(pi/4); Z[1,-2](-pi/4)
I[1,3](pi)
Ixy[2,4](3pi/2)
call U2
X1(0.25)
)");
    EXPECT_EQ(p.name, "demo");
    ASSERT_EQ(p.size(), 7u);
    EXPECT_EQ(std::get<Gate>(p.body[0]), X(2, true));
    EXPECT_EQ(std::get<Gate>(p.body[1]), rot(Axis::y, 1, pi / 4));
    EXPECT_EQ(std::get<Gate>(p.body[2]), rot(Axis::z, {1, 2}, {1, -1}, -pi / 4));
    EXPECT_EQ(std::get<Gate>(p.body[3]), I_phase(1, 3, pi));
    EXPECT_EQ(std::get<Gate>(p.body[4]), I_xy(2, 4, 3 * pi / 2));
    EXPECT_EQ(std::get<Call>(p.body[5]).name, "U2");
    EXPECT_DOUBLE_EQ(std::get<Gate>(p.body[6]).angle, 0.25);
}

TEST(ProgramText, Angles)
{
    EXPECT_DOUBLE_EQ(parse_angle("pi"), pi);
    EXPECT_DOUBLE_EQ(parse_angle("-pi/2"), -pi / 2);
    EXPECT_DOUBLE_EQ(parse_angle("3*pi/4"), 3 * pi / 4);
    EXPECT_DOUBLE_EQ(parse_angle("1.5"), 1.5);
    EXPECT_EQ(format_angle(-3 * pi / 4), "-3*pi/4");
    EXPECT_EQ(format_angle(pi), "pi");
    for (double a : {0.1, -2.0, pi / 3, 5 * pi / 8, 1e-7})
        EXPECT_DOUBLE_EQ(parse_angle(format_angle(a)), a);
    EXPECT_THROW(parse_angle("pie"), std::invalid_argument);
}

TEST(ProgramText, RoundTripsEveryLibrarySequence)
{
    for (const auto& name : sequence_names()) {
        const auto p = sequence_library(name);
        const auto back = parse_program(emit_program(p));
        EXPECT_EQ(back.body, p.body) << name;
    }
}

TEST(ProgramText, ErrorsCarryPosition)
{
    try {
        parse_program("X1\nY1; Q3\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
        EXPECT_EQ(e.column(), 5);
    }
    for (const char* bad : {"X0", "I[1,2]", "I[1,1](pi)", "X1(pi", "Y", "X1 X2", "X1\nprogram late", "call"})
        EXPECT_THROW(parse_program(bad), ParseError) << bad;
}

TEST(ProgramText, PulsesHaveNoTextForm)
{
    QuantumProgram p;
    p.body.push_back(Pulse{"free", {}, 1.0, true, {}});
    EXPECT_THROW(emit_program(p), std::invalid_argument);
}

TEST(ProgramText, ShippedProgramsParse)
{
    const std::filesystem::path dir = QCE_DATA_DIR "/programs";
    const auto u = load_program(dir / "prepare_u.qp");
    EXPECT_EQ(u.body, prepare_u().body);
    const auto u2 = load_program(dir / "U2.qp");
    Executor ex(chloroform2(), std::nullopt, {}, full_library());
    const auto r = measure(ex.run(u2, StateVector(2), Mode::ideal));
    EXPECT_NEAR(r.q[0], 0.0, 1e-12);
    EXPECT_NEAR(r.q[1], 1.0, 1e-12);
    EXPECT_THROW(load_program(dir / "missing.qp"), std::runtime_error);
}

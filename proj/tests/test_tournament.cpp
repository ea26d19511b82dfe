#include <doctest.h>

#include <map>
#include <random>

#include "qdice/montecarlo.hpp"
#include "qdice/tournament.hpp"

using namespace qdice;

namespace {

Die die(long a1, long d1, long a2, long d2, long a3, long d3) {
    return Die(Rational(a1, d1), Rational(a2, d2), Rational(a3, d3));
}

Tournament from_mask3(unsigned mask) {
    // bit b orients pair b of (0,1), (0,2), (1,2)
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::pair<int, int>> wins;
    for (int b = 0; b < 3; ++b)
        wins.emplace_back(pairs[b][(mask >> b) & 1], pairs[b][1 - ((mask >> b) & 1)]);
    return Tournament(3, wins);
}

Tournament from_mask4(unsigned mask) {
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::pair<int, int>> wins;
    for (int b = 0; b < 6; ++b)
        wins.emplace_back(pairs[b][(mask >> b) & 1], pairs[b][1 - ((mask >> b) & 1)]);
    return Tournament(4, wins);
}

}  // namespace

TEST_CASE("tournament construction rules") {
    const Tournament t(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(t.beats(0, 1));
    CHECK_FALSE(t.beats(1, 0));
    CHECK(t.out_degree(0) == 1);
    CHECK_THROWS_AS(Tournament(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament(3, {{0, 1}, {1, 2}}), std::invalid_argument);             // missing arc
    CHECK_THROWS_AS(Tournament(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament(3, {{0, 0}, {0, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament(3, {{0, 1}, {0, 2}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("classify3 over all eight orientations") {
    std::map<TournamentClass3, int> counts;
    for (unsigned mask = 0; mask < 8; ++mask) ++counts[classify3(from_mask3(mask))];
    CHECK(counts[TournamentClass3::chain] == 6);
    CHECK(counts[TournamentClass3::cycle] == 2);
    CHECK(classify3(Tournament(3, {{0, 1}, {1, 2}, {2, 0}})) == TournamentClass3::cycle);
    CHECK(classify3(Tournament(3, {{0, 1}, {1, 2}, {0, 2}})) == TournamentClass3::chain);
    CHECK_THROWS_AS(classify3(from_mask4(0)), std::invalid_argument);
}

TEST_CASE("classify4 over all sixty-four orientations") {
    std::map<TournamentClass4, int> counts;
    for (unsigned mask = 0; mask < 64; ++mask) ++counts[classify4(from_mask4(mask))];
    CHECK(counts[TournamentClass4::chain] == 24);
    CHECK(counts[TournamentClass4::four_cycle] == 24);
    CHECK(counts[TournamentClass4::winner_plus_cycle] == 8);
    CHECK(counts[TournamentClass4::loser_plus_cycle] == 8);
    CHECK(classify4(Tournament(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}})) ==
          TournamentClass4::winner_plus_cycle);
    CHECK(classify4(Tournament(4, {{1, 0}, {2, 0}, {3, 0}, {1, 2}, {2, 3}, {3, 1}})) ==
          TournamentClass4::loser_plus_cycle);
    CHECK_THROWS_AS(classify4(from_mask3(0)), std::invalid_argument);
}

TEST_CASE("tournament_of_dice") {
    const Die a = die(0, 1, 3, 4, 3, 4);
    const Die b = die(1, 4, 1, 4, 1, 1);
    const Die c = die(1, 8, 5, 8, 3, 4);
    const auto t = tournament_of_dice({a, b, c});
    REQUIRE(t.has_value());
    CHECK(t->beats(1, 0));  // b beats a
    CHECK(t->beats(0, 2));  // a beats c
    CHECK(t->beats(1, 2));  // b beats c
    CHECK(classify3(*t) == TournamentClass3::chain);

    // a die ties itself
    CHECK_FALSE(tournament_of_dice({a, a, b}).has_value());
    CHECK_THROWS_AS(tournament_of_dice({a, b}), std::invalid_argument);

    // reflection reverses every arc, preserving the class partition
    std::mt19937_64 rng(909);
    int done = 0;
    while (done < 300) {
        std::vector<Die> dice, mirrored;
        for (int i = 0; i < 4; ++i) dice.push_back(sample_die(rng));
        for (const auto& d : dice) mirrored.push_back(star(d));
        const auto fwd = tournament_of_dice(dice), back = tournament_of_dice(mirrored);
        if (!fwd) continue;
        REQUIRE(back.has_value());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) CHECK(fwd->beats(i, j) == back->beats(j, i));
        ++done;
    }
}

TEST_CASE("four-dice assembly from the known marginals") {
    // inputs produced by the volume pipeline, frozen here as constants
    const Rational p_g(99930571, 1548288000);
    const Rational p_3line(973, 1280), p_triangle(307, 1280);
    const ProbabilityReport r = assemble_four_dice(p_g, p_3line, p_triangle);
    CHECK(r.p_square == Rational(99930571, 258048000));
    CHECK(r.p_4line == Rational(110413771, 258048000));
    CHECK(r.p_winner_tri == Rational(23851829, 258048000));
    CHECK(r.p_loser_tri == Rational(23851829, 258048000));
    CHECK(r.p_4line + r.p_square + r.p_winner_tri + r.p_loser_tri == Rational(1));

    // the two deletion identities the solution must satisfy
    CHECK(r.p_4line + Rational(3, 4) * (r.p_winner_tri + r.p_loser_tri) ==
          p_3line - r.p_square / Rational(2));
    CHECK(Rational(1, 4) * (r.p_winner_tri + r.p_loser_tri) == p_triangle - r.p_square / Rational(2));

    CHECK_NOTHROW(r.validate());
}

TEST_CASE("assembly rejects impossible inputs") {
    // a four-cycle probability this large forces a negative class weight
    CHECK_THROWS_AS(assemble_four_dice(Rational(1, 2), Rational(973, 1280), Rational(307, 1280)),
                    ConsistencyError);
    ProbabilityReport bad{Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 4),
                          Rational(1, 4), Rational(1, 2)};
    CHECK_THROWS_AS(bad.validate(), ConsistencyError);
}

TEST_CASE("three-dice pipeline values") {
    const ThreeDiceExact r = three_dice_exact();
    CHECK(r.vol_q3 == Rational(1, 512));
    CHECK(r.p_e123 == Rational(23, 1800));
    CHECK(r.p_e132 == Rational(3133, 115200));
    CHECK(r.p_e == Rational(307, 2560));
    CHECK(r.p_triangle == Rational(307, 1280));
    CHECK(r.p_3line == Rational(973, 1280));
    CHECK(prob_E() == Rational(307, 2560));
    const ThreeDiceReport rep = three_dice_report();
    CHECK(rep.p_triangle == Rational(307, 1280));
    CHECK(rep.p_3line == Rational(973, 1280));
}

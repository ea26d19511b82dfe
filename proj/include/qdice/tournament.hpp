#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdice/dice.hpp"

namespace qdice {

/// Complete directed graph on 3 or 4 vertices: every unordered pair
/// carries exactly one arc. Vertices are 0-based.
class Tournament {
public:
    Tournament(int size, const std::vector<std::pair<int, int>>& wins);

    int size() const { return size_; }
    bool beats(int winner, int loser) const;
    int out_degree(int v) const;

private:
    int size_;
    bool arc_[4][4] = {};
};

enum class TournamentClass3 { chain, cycle };
enum class TournamentClass4 { chain, four_cycle, winner_plus_cycle, loser_plus_cycle };

TournamentClass3 classify3(const Tournament& t);
TournamentClass4 classify4(const Tournament& t);

/// Orient every pair by dominance; nullopt when any matchup ties.
std::optional<Tournament> tournament_of_dice(const std::vector<Die>& dice);

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact probabilities of the two three-dice classes.
struct ThreeDiceReport {
    Rational p_triangle;
    Rational p_3line;
};

/// Exact probabilities of the four four-dice classes together with the
/// three-dice marginals they were assembled from. Always sums to one.
struct ProbabilityReport {
    Rational p_3line;
    Rational p_triangle;
    Rational p_4line;
    Rational p_square;
    Rational p_winner_tri;
    Rational p_loser_tri;

    /// Throws ConsistencyError unless every entry is a probability and
    /// both class families sum to one.
    void validate() const;
};

/// Everything the three-dice pipeline produces, computed in one pass.
struct ThreeDiceExact {
    Rational vol_q3;
    Rational p_e123;  // one directed mode word per conjugacy class
    Rational p_e132;
    Rational p_e;         // P(A beats B beats C beats A)
    Rational p_triangle;  // either directed cycle
    Rational p_3line;
};
ThreeDiceExact three_dice_exact();

/// P(A>B>C>A) = 3 P(E_123) + 3 P(E_132), each P(E_sigma) = 512 vol(E_sigma).
Rational prob_E();
ThreeDiceReport three_dice_report();

/// Probability of one fixed directed four-cycle: 4 * sum over the nine
/// cyclic classes of 4096 vol(G_sigma).
Rational prob_G(int threads = 1);

/// Per-class four-cycle probabilities P(G_sigma) keyed by representative.
std::vector<std::pair<SigmaWord, Rational>> four_cycle_class_probabilities(int threads = 1);

/// Solves the deletion identities for the four-dice class probabilities:
///   p_4line + 3/4 (p_w + p_l) = p_3line - p_square/2
///          1/4 (p_w + p_l)    = p_triangle - p_square/2
///   p_w = p_l,  p_square = 6 p_g.
/// Throws ConsistencyError when the solution is not a distribution.
ProbabilityReport assemble_four_dice(const Rational& p_g, const Rational& p_3line,
                                     const Rational& p_triangle);

struct FourDiceExact {
    std::vector<std::pair<SigmaWord, Rational>> class_probs;
    Rational p_g;
    ProbabilityReport report;
};
FourDiceExact four_dice_exact(int threads = 1);

}  // namespace qdice

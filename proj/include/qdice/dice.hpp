#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdice/polytope.hpp"

namespace qdice {

/// A balanced 3-sided die: face values sorted ascending, each in [0,1],
/// summing to 3/2. Construction sorts and validates.
class Die {
public:
    Die(Rational f1, Rational f2, Rational f3);

    const std::array<Rational, 3>& faces() const { return f_; }
    /// 1-based, face(1) is the smallest.
    const Rational& face(int i) const;

    bool operator==(const Die&) const = default;

private:
    std::array<Rational, 3> f_;
};

enum class DominanceOutcome { first_dominates, second_dominates, tie };

/// Sign of sum over all nine face pairs of sgn(a_i - b_j): positive means
/// the first die wins a majority of face matchups.
DominanceOutcome dominance(const Die& a, const Die& b);

/// Index in 1..3 of the single sorted-face comparison the winner loses.
class DominanceMode {
public:
    explicit DominanceMode(int index);
    int index() const { return index_; }
    bool operator==(const DominanceMode&) const = default;

private:
    int index_;
};

/// Thrown when a comparison lands on a measure-zero boundary where the
/// classification below is undefined (some a_i equals b_i).
struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The mode i such that a beats b in every sorted-face comparison except
/// the i-th, or nullopt when a does not beat b in exactly two of three.
/// Throws BoundaryError if any comparison is a tie.
std::optional<DominanceMode> dominance_mode(const Die& a, const Die& b);

/// Reflection (1-f3, 1-f2, 1-f1); an involution that reverses dominance.
Die star(const Die& a);

/// Word over {1,2,3} of length 3 or 4: the dominance mode along each edge
/// of a directed cycle of dice.
class SigmaWord {
public:
    explicit SigmaWord(std::vector<int> letters);
    /// One digit per letter, e.g. "1123".
    static SigmaWord parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    /// 0-based position; value in 1..3.
    int letter(std::size_t pos) const { return letters_[pos]; }

    SigmaWord rotated(int by) const;
    std::vector<SigmaWord> rotations() const;
    std::string str() const;

    auto operator<=>(const SigmaWord&) const = default;

private:
    std::vector<int> letters_;
};

/// The moment polytope of one die, coordinates (f1, f2): f1 >= 0, f1 <= f2,
/// 1 <= 2 f1 + 2 f2, 2 f1 + 4 f2 <= 3 (f3 is eliminated via the fixed sum).
HPolytope build_Q();

/// k-fold product for k independent dice, 1 <= k <= 4, in 2k coordinates.
HPolytope build_Qk(int k);

/// The three halfspaces in 2k coordinates expressing that die m beats die
/// (m mod k)+1 with mode i. The third face value is eliminated, so row 3
/// folds the substitution f3 = 3/2 - f1 - f2 into rows over (f1, f2).
std::vector<HalfSpace> relation_inequalities(int m, int i, int k);

/// Event polytope for a 3-cycle of dice beating each other with the given
/// mode word: Q^3 rows first, then the three relation blocks in edge order.
HPolytope build_E(const SigmaWord& sigma);

/// Event polytope for a 4-cycle, analogously over Q^4.
HPolytope build_G(const SigmaWord& sigma);

/// True when a length-4 mode word uses at most two distinct letters; such
/// events are contained in a hyperplane and carry no volume.
bool is_degenerate_sigma(const SigmaWord& sigma);

/// Lexicographically least representative of each cyclic class of
/// non-degenerate length-4 words; 9 of them, sorted.
std::vector<SigmaWord> cyclic_representatives();

}  // namespace qdice

#include "qdice/tournament.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace qdice {

namespace {

// Runs fn(0..count-1) across up to `threads` std::threads; the first
// exception wins and is rethrown on the caller thread.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t nt = std::min<std::size_t>(std::max(threads, 1), count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

Tournament::Tournament(int size, const std::vector<std::pair<int, int>>& wins) : size_(size) {
    if (size != 3 && size != 4) throw std::invalid_argument("Tournament: size must be 3 or 4");
    bool oriented[4][4] = {};
    for (auto [w, l] : wins) {
        if (w < 0 || w >= size || l < 0 || l >= size || w == l)
            throw std::invalid_argument("Tournament: bad arc");
        if (oriented[w][l]) throw std::invalid_argument("Tournament: duplicate arc");
        oriented[w][l] = oriented[l][w] = true;
        arc_[w][l] = true;
    }
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (!oriented[i][j]) throw std::invalid_argument("Tournament: unoriented pair");
}

bool Tournament::beats(int winner, int loser) const {
    if (winner < 0 || winner >= size_ || loser < 0 || loser >= size_ || winner == loser)
        throw std::out_of_range("Tournament::beats: bad vertex");
    return arc_[winner][loser];
}

int Tournament::out_degree(int v) const {
    if (v < 0 || v >= size_) throw std::out_of_range("Tournament::out_degree: bad vertex");
    int d = 0;
    for (int j = 0; j < size_; ++j) d += arc_[v][j];
    return d;
}

TournamentClass3 classify3(const Tournament& t) {
    if (t.size() != 3) throw std::invalid_argument("classify3: need 3 vertices");
    for (int v = 0; v < 3; ++v)
        if (t.out_degree(v) != 1) return TournamentClass3::chain;
    return TournamentClass3::cycle;
}

TournamentClass4 classify4(const Tournament& t) {
    if (t.size() != 4) throw std::invalid_argument("classify4: need 4 vertices");
    std::array<int, 4> deg;
    for (int v = 0; v < 4; ++v) deg[static_cast<std::size_t>(v)] = t.out_degree(v);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    if (deg == std::array<int, 4>{3, 2, 1, 0}) return TournamentClass4::chain;
    if (deg == std::array<int, 4>{2, 2, 1, 1}) return TournamentClass4::four_cycle;
    if (deg == std::array<int, 4>{3, 1, 1, 1}) return TournamentClass4::winner_plus_cycle;
    if (deg == std::array<int, 4>{2, 2, 2, 0}) return TournamentClass4::loser_plus_cycle;
    throw std::logic_error("classify4: impossible score sequence");
}

std::optional<Tournament> tournament_of_dice(const std::vector<Die>& dice) {
    const int k = static_cast<int>(dice.size());
    if (k != 3 && k != 4) throw std::invalid_argument("tournament_of_dice: need 3 or 4 dice");
    std::vector<std::pair<int, int>> wins;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            switch (dominance(dice[static_cast<std::size_t>(i)], dice[static_cast<std::size_t>(j)])) {
                case DominanceOutcome::first_dominates: wins.emplace_back(i, j); break;
                case DominanceOutcome::second_dominates: wins.emplace_back(j, i); break;
                case DominanceOutcome::tie: return std::nullopt;
            }
        }
    return Tournament(k, wins);
}

ThreeDiceExact three_dice_exact() {
    ThreeDiceExact r;
    r.vol_q3 = volume(build_Qk(3));
    r.p_e123 = Rational(512) * volume(build_E(SigmaWord::parse("123")));
    r.p_e132 = Rational(512) * volume(build_E(SigmaWord::parse("132")));
    r.p_e = Rational(3) * (r.p_e123 + r.p_e132);
    r.p_triangle = Rational(2) * r.p_e;
    r.p_3line = Rational(1) - r.p_triangle;
    return r;
}

Rational prob_E() { return three_dice_exact().p_e; }

ThreeDiceReport three_dice_report() {
    const auto r = three_dice_exact();
    return {r.p_triangle, r.p_3line};
}

std::vector<std::pair<SigmaWord, Rational>> four_cycle_class_probabilities(int threads) {
    const auto reps = cyclic_representatives();
    std::vector<Rational> probs(reps.size());
    parallel_for(reps.size(), threads,
                 [&](std::size_t i) { probs[i] = Rational(4096) * volume(build_G(reps[i])); });
    std::vector<std::pair<SigmaWord, Rational>> out;
    out.reserve(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) out.emplace_back(reps[i], probs[i]);
    return out;
}

Rational prob_G(int threads) {
    Rational sum;
    for (const auto& [rep, p] : four_cycle_class_probabilities(threads)) sum += p;
    return Rational(4) * sum;
}

void ProbabilityReport::validate() const {
    const Rational one(1);
    auto is_prob = [&](const Rational& r) { return r.sign() >= 0 && r <= one; };
    const bool ok = is_prob(p_3line) && is_prob(p_triangle) && is_prob(p_4line) && is_prob(p_square) &&
                    is_prob(p_winner_tri) && is_prob(p_loser_tri) && p_3line + p_triangle == one &&
                    p_4line + p_square + p_winner_tri + p_loser_tri == one;
    if (!ok) throw ConsistencyError("probability report: entries are not a distribution");
}

ProbabilityReport assemble_four_dice(const Rational& p_g, const Rational& p_3line,
                                     const Rational& p_triangle) {
    const Rational p_square = Rational(6) * p_g;
    const RatMatrix m(std::vector<RatVector>{
        RatVector{Rational(1), Rational(3, 4), Rational(3, 4)},
        RatVector{Rational(0), Rational(1, 4), Rational(1, 4)},
        RatVector{Rational(0), Rational(1), Rational(-1)},
    });
    const Rational half_sq = p_square / Rational(2);
    const RatVector rhs{p_3line - half_sq, p_triangle - half_sq, Rational(0)};
    const auto x = solve_linear(m, rhs);
    if (!x) throw ConsistencyError("four-dice assembly: deletion system is inconsistent");
    ProbabilityReport r{p_3line, p_triangle, (*x)[0], p_square, (*x)[1], (*x)[2]};
    r.validate();
    return r;
}

FourDiceExact four_dice_exact(int threads) {
    FourDiceExact out;
    out.class_probs = four_cycle_class_probabilities(threads);
    Rational sum;
    for (const auto& [rep, p] : out.class_probs) sum += p;
    out.p_g = Rational(4) * sum;
    const auto three = three_dice_exact();
    out.report = assemble_four_dice(out.p_g, three.p_3line, three.p_triangle);
    return out;
}

}  // namespace qdice

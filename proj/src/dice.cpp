#include "qdice/dice.hpp"

#include <algorithm>
#include <set>

namespace qdice {

Die::Die(Rational f1, Rational f2, Rational f3) : f_{std::move(f1), std::move(f2), std::move(f3)} {
    std::sort(f_.begin(), f_.end());
    if (f_[0].sign() < 0 || f_[2] > Rational(1))
        throw std::invalid_argument("Die: faces must lie in [0, 1]");
    if (f_[0] + f_[1] + f_[2] != Rational(3, 2))
        throw std::invalid_argument("Die: faces must sum to 3/2");
}

const Rational& Die::face(int i) const {
    if (i < 1 || i > 3) throw std::out_of_range("Die::face: index must be 1..3");
    return f_[static_cast<std::size_t>(i - 1)];
}

DominanceOutcome dominance(const Die& a, const Die& b) {
    int s = 0;
    for (const auto& x : a.faces())
        for (const auto& y : b.faces()) s += (x > y) - (x < y);
    if (s > 0) return DominanceOutcome::first_dominates;
    if (s < 0) return DominanceOutcome::second_dominates;
    return DominanceOutcome::tie;
}

DominanceMode::DominanceMode(int index) : index_(index) {
    if (index < 1 || index > 3) throw std::invalid_argument("DominanceMode: index must be 1..3");
}

std::optional<DominanceMode> dominance_mode(const Die& a, const Die& b) {
    int wins = 0, lost_at = 0;
    for (int i = 1; i <= 3; ++i) {
        if (a.face(i) == b.face(i))
            throw BoundaryError("dominance_mode: sorted faces " + std::to_string(i) + " are equal");
        if (a.face(i) > b.face(i))
            ++wins;
        else
            lost_at = i;
    }
    if (wins == 3) throw std::logic_error("dominance_mode: equal-sum dice cannot win all comparisons");
    if (wins != 2) return std::nullopt;
    return DominanceMode(lost_at);
}

Die star(const Die& a) {
    const Rational one(1);
    return Die(one - a.face(3), one - a.face(2), one - a.face(1));
}

SigmaWord::SigmaWord(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.size() != 3 && letters_.size() != 4)
        throw std::invalid_argument("SigmaWord: length must be 3 or 4");
    for (int l : letters_)
        if (l < 1 || l > 3) throw std::invalid_argument("SigmaWord: letters must be 1..3");
}

SigmaWord SigmaWord::parse(std::string_view text) {
    std::vector<int> ls;
    for (char c : text) {
        if (c < '1' || c > '3') throw std::invalid_argument("SigmaWord: expected digits 1..3");
        ls.push_back(c - '0');
    }
    return SigmaWord(std::move(ls));
}

SigmaWord SigmaWord::rotated(int by) const {
    const int n = static_cast<int>(letters_.size());
    std::vector<int> ls(letters_.size());
    for (int p = 0; p < n; ++p) ls[static_cast<std::size_t>(p)] = letters_[static_cast<std::size_t>((p + by) % n)];
    return SigmaWord(std::move(ls));
}

std::vector<SigmaWord> SigmaWord::rotations() const {
    std::vector<SigmaWord> out;
    for (int by = 0; by < static_cast<int>(letters_.size()); ++by) out.push_back(rotated(by));
    return out;
}

std::string SigmaWord::str() const {
    std::string s;
    for (int l : letters_) s.push_back(static_cast<char>('0' + l));
    return s;
}

HPolytope build_Q() {
    HPolytope q;
    q.ambient_dim = 2;
    q.halfspaces = {
        {Rational(0), {Rational(1), Rational(0)}},
        {Rational(0), {Rational(-1), Rational(1)}},
        {Rational(-1), {Rational(2), Rational(2)}},
        {Rational(3), {Rational(-2), Rational(-4)}},
    };
    return q;
}

HPolytope build_Qk(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("build_Qk: k must be 1..4");
    HPolytope out = build_Q();
    for (int j = 1; j < k; ++j) out = product(out, build_Q());
    return out;
}

std::vector<HalfSpace> relation_inequalities(int m, int i, int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("relation_inequalities: k must be 3 or 4");
    if (m < 1 || m > k) throw std::invalid_argument("relation_inequalities: m must be 1..k");
    if (i < 1 || i > 3) throw std::invalid_argument("relation_inequalities: i must be 1..3");

    // Mode i means the winner loses exactly the i-th sorted-face comparison.
    static constexpr int signs[3][3] = {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    const auto x = static_cast<std::size_t>(2 * (m - 1));  // winner's (f1, f2) block
    const auto y = static_cast<std::size_t>(2 * (m % k));  // loser's block
    const int* s = signs[i - 1];

    const auto dims = static_cast<std::size_t>(2 * k);
    std::vector<HalfSpace> rows(3, HalfSpace{Rational(0), RatVector(dims)});
    rows[0].normal[x] += s[0];
    rows[0].normal[y] -= s[0];
    rows[1].normal[x + 1] += s[1];
    rows[1].normal[y + 1] -= s[1];
    // Third faces via f3 = 3/2 - f1 - f2; the constants cancel.
    rows[2].normal[x] -= s[2];
    rows[2].normal[x + 1] -= s[2];
    rows[2].normal[y] += s[2];
    rows[2].normal[y + 1] += s[2];
    return rows;
}

namespace {

HPolytope build_cycle_event(const SigmaWord& sigma, int k) {
    HPolytope p = build_Qk(k);
    for (int m = 1; m <= k; ++m)
        for (auto& h : relation_inequalities(m, sigma.letter(static_cast<std::size_t>(m - 1)), k))
            p.halfspaces.push_back(std::move(h));
    return p;
}

}  // namespace

HPolytope build_E(const SigmaWord& sigma) {
    if (sigma.size() != 3) throw std::invalid_argument("build_E: sigma must have length 3");
    return build_cycle_event(sigma, 3);
}

HPolytope build_G(const SigmaWord& sigma) {
    if (sigma.size() != 4) throw std::invalid_argument("build_G: sigma must have length 4");
    return build_cycle_event(sigma, 4);
}

bool is_degenerate_sigma(const SigmaWord& sigma) {
    if (sigma.size() != 4) throw std::invalid_argument("is_degenerate_sigma: sigma must have length 4");
    std::set<int> distinct;
    for (std::size_t p = 0; p < sigma.size(); ++p) distinct.insert(sigma.letter(p));
    return distinct.size() <= 2;
}

std::vector<SigmaWord> cyclic_representatives() {
    std::set<SigmaWord> reps;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d) {
                    SigmaWord w({a, b, c, d});
                    if (is_degenerate_sigma(w)) continue;
                    auto rots = w.rotations();
                    reps.insert(*std::min_element(rots.begin(), rots.end()));
                }
    return {reps.begin(), reps.end()};
}

}  // namespace qdice

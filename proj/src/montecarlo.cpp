#include "qdice/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qdice {

namespace {

static_assert(sizeof(unsigned long) >= 8, "need 64-bit limbs for dyadic draws");

Rational dyadic(std::uint64_t r) {
    static const mpz_class den = mpz_class(1) << 64;
    return Rational(mpz_class(static_cast<unsigned long>(r)), den);
}

struct Triangle {
    RatVector a, ab, ac;
    Rational share;  // cumulative area fraction
};

// Triangulates the die polytope once; immutable afterwards, safe to share
// across sampler threads.
class QSampler {
public:
    QSampler() {
        const HPolytope q = build_Q();
        Rational total;
        std::vector<Rational> areas;
        for (const auto& s : triangulate(vertex_enumerate(q))) {
            tris_.push_back({s.vertices[0], s.vertices[1] - s.vertices[0], s.vertices[2] - s.vertices[0],
                             Rational(0)});
            areas.push_back(simplex_volume(s));
            total += areas.back();
        }
        Rational cum;
        for (std::size_t i = 0; i < tris_.size(); ++i) {
            cum += areas[i];
            tris_[i].share = cum / total;
        }
    }

    Die sample(std::mt19937_64& rng) const {
        const Rational pick = dyadic(rng());
        std::size_t i = 0;
        while (i + 1 < tris_.size() && pick >= tris_[i].share) ++i;
        const Triangle& t = tris_[i];

        Rational u = dyadic(rng()), v = dyadic(rng());
        if (u + v > Rational(1)) {
            u = Rational(1) - u;
            v = Rational(1) - v;
        }
        const Rational f1 = t.a[0] + u * t.ab[0] + v * t.ac[0];
        const Rational f2 = t.a[1] + u * t.ab[1] + v * t.ac[1];
        return Die(f1, f2, Rational(3, 2) - f1 - f2);
    }

private:
    std::vector<Triangle> tris_;
};

int class_index(const Tournament& t) {
    return t.size() == 3 ? static_cast<int>(classify3(t)) : static_cast<int>(classify4(t));
}

}  // namespace

Die sample_die(std::mt19937_64& rng) {
    static const QSampler sampler;
    return sampler.sample(rng);
}

const std::vector<std::string>& class_labels(int dice_count) {
    static const std::vector<std::string> three{"3-line", "triangle"};
    static const std::vector<std::string> four{"4-line", "square", "winner+3cycle", "loser+3cycle"};
    if (dice_count == 3) return three;
    if (dice_count == 4) return four;
    throw std::invalid_argument("class_labels: dice count must be 3 or 4");
}

EstimateReport estimate(const SamplerConfig& config, const std::vector<Rational>& exact_probs,
                        int workers, int threads) {
    const auto& labels = class_labels(config.dice_count);
    if (config.trials < 1) throw std::invalid_argument("estimate: need at least one trial");
    if (workers < 1) throw std::invalid_argument("estimate: need at least one worker");
    if (exact_probs.size() != labels.size())
        throw std::invalid_argument("estimate: one exact probability per class required");

    struct Tally {
        std::uint64_t by_class[4] = {};
        std::uint64_t ties = 0;
    };
    const auto nworkers = static_cast<std::size_t>(workers);
    std::vector<Tally> tallies(nworkers);

    auto run_worker = [&](std::size_t w) {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                          static_cast<std::uint32_t>(config.seed >> 32), static_cast<std::uint32_t>(w)};
        std::mt19937_64 rng(seq);
        std::uint64_t n = config.trials / nworkers + (w < config.trials % nworkers ? 1 : 0);
        Tally& tally = tallies[w];
        std::vector<Die> dice;
        for (std::uint64_t t = 0; t < n; ++t) {
            dice.clear();
            for (int d = 0; d < config.dice_count; ++d) dice.push_back(sample_die(rng));
            const auto tournament = tournament_of_dice(dice);
            if (!tournament)
                ++tally.ties;
            else
                ++tally.by_class[class_index(*tournament)];
        }
    };

    const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), nworkers);
    if (nt <= 1) {
        for (std::size_t w = 0; w < nworkers; ++w) run_worker(w);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mu;
        std::vector<std::thread> pool;
        pool.reserve(nt);
        for (std::size_t t = 0; t < nt; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t w = next.fetch_add(1);
                    if (w >= nworkers) return;
                    try {
                        run_worker(w);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mu);
                        if (!error) error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    EstimateReport report;
    report.config = config;
    report.workers = workers;
    report.classes.resize(labels.size());
    for (std::size_t w = 0; w < nworkers; ++w) {
        report.tie_count += tallies[w].ties;
        for (std::size_t c = 0; c < labels.size(); ++c)
            report.classes[c].count += tallies[w].by_class[c];
    }
    const double n = static_cast<double>(config.trials);
    for (std::size_t c = 0; c < labels.size(); ++c) {
        ClassEstimate& e = report.classes[c];
        e.label = labels[c];
        e.frequency = static_cast<double>(e.count) / n;
        e.exact = exact_probs[c].to_double();
        e.std_error = std::sqrt(e.frequency * (1.0 - e.frequency) / n);
        const double diff = e.frequency - e.exact;
        if (e.std_error > 0)
            e.z = diff / e.std_error;
        else
            e.z = diff == 0 ? 0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return report;
}

}  // namespace qdice

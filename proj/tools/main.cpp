// Command-line front end: exact tournament probabilities for balanced
// 3-sided dice, plus polytope utilities and a Monte Carlo cross-check.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdice/dice.hpp"
#include "qdice/montecarlo.hpp"
#include "qdice/polytope.hpp"
#include "qdice/tournament.hpp"

using nlohmann::json;
using namespace qdice;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string rat_text(const Rational& r) {
    const std::string exact = r.str(), dec = r.decimal();
    return exact == dec ? exact : exact + " = " + dec;
}

json rat_json(const Rational& r) { return json{{"rational", r.str()}, {"decimal", r.decimal()}}; }

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

void emit(bool as_json, const json& doc, const std::string& text) {
    if (as_json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_volume(const std::string& path, bool as_json) {
    const auto t0 = Clock::now();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    HPolytope p;
    try {
        p = parse_hpolytope(in);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    const VPolytope v = vertex_enumerate(p);
    const int dim = affine_dimension(v.vertices);
    const Rational vol = volume(v);
    const double elapsed = seconds_since(t0);

    std::ostringstream text;
    text << "ambient dimension = " << p.ambient_dim << "\n"
         << "dimension = " << dim << "\n"
         << "vertices = " << v.vertices.size() << "\n"
         << "volume = " << rat_text(vol) << "\n"
         << "elapsed = " << fixed(elapsed, 2) << " s\n";
    emit(as_json,
         json{{"command", "volume"},
              {"inputs", {{"file", path}}},
              {"results",
               {{"ambient_dim", p.ambient_dim},
                {"dim", dim},
                {"vertex_count", v.vertices.size()},
                {"volume", rat_json(vol)}}},
              {"elapsed_seconds", elapsed}},
         text.str());
    return 0;
}

int cmd_three_dice(bool as_json) {
    const auto t0 = Clock::now();
    const ThreeDiceExact r = three_dice_exact();
    const double elapsed = seconds_since(t0);

    std::ostringstream text;
    text << "vol(Q3) = " << rat_text(r.vol_q3) << "\n"
         << "P(E123) = " << rat_text(r.p_e123) << "\n"
         << "P(E132) = " << rat_text(r.p_e132) << "\n"
         << "P(A>B>C>A) = P(E) = " << rat_text(r.p_e) << "\n"
         << "p_triangle = " << rat_text(r.p_triangle) << "\n"
         << "p_3line = " << rat_text(r.p_3line) << "\n"
         << "elapsed = " << fixed(elapsed, 2) << " s\n";
    emit(as_json,
         json{{"command", "three-dice"},
              {"results",
               {{"vol_Q3", rat_json(r.vol_q3)},
                {"P_E123", rat_json(r.p_e123)},
                {"P_E132", rat_json(r.p_e132)},
                {"P_E", rat_json(r.p_e)},
                {"p_triangle", rat_json(r.p_triangle)},
                {"p_3line", rat_json(r.p_3line)}}},
              {"elapsed_seconds", elapsed}},
         text.str());
    return 0;
}

int cmd_four_dice(bool full, int threads, bool as_json) {
    const auto t0 = Clock::now();
    const FourDiceExact r = four_dice_exact(threads);

    // With --full, price every non-degenerate word separately and check
    // that volumes are constant on each cyclic class.
    std::vector<std::pair<SigmaWord, Rational>> word_probs;
    if (full) {
        std::map<SigmaWord, Rational> by_rep(r.class_probs.begin(), r.class_probs.end());
        std::vector<SigmaWord> words;
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c)
                    for (int d = 1; d <= 3; ++d) {
                        const SigmaWord w({a, b, c, d});
                        if (!is_degenerate_sigma(w)) words.push_back(w);
                    }
        for (const auto& w : words) {
            const Rational p = Rational(4096) * volume(build_G(w));
            const auto rots = w.rotations();
            const SigmaWord rep = *std::min_element(rots.begin(), rots.end());
            if (p != by_rep.at(rep))
                throw ConsistencyError("cyclic class " + rep.str() + " is not volume-invariant at " +
                                       w.str());
            word_probs.emplace_back(w, p);
        }
    }
    const double elapsed = seconds_since(t0);

    std::ostringstream text;
    json jclasses = json::array();
    for (const auto& [sigma, p] : (full ? word_probs : r.class_probs)) {
        text << "P(G_" << sigma.str() << ") = " << rat_text(p) << "\n";
        jclasses.push_back(json{{"sigma", sigma.str()}, {"P", rat_json(p)}});
    }
    if (full) text << "cyclic volume equalities: verified for all 9 classes\n";
    text << "P(A>B>C>D>A) = P(G) = " << rat_text(r.p_g) << "\n"
         << "p_3line = " << rat_text(r.report.p_3line) << "\n"
         << "p_triangle = " << rat_text(r.report.p_triangle) << "\n"
         << "p_4line = " << rat_text(r.report.p_4line) << "\n"
         << "p_square = " << rat_text(r.report.p_square) << "\n"
         << "p_winner_tri = " << rat_text(r.report.p_winner_tri) << "\n"
         << "p_loser_tri = " << rat_text(r.report.p_loser_tri) << "\n"
         << "elapsed = " << fixed(elapsed, 2) << " s\n";
    emit(as_json,
         json{{"command", "four-dice"},
              {"inputs", {{"full", full}, {"threads", threads}}},
              {"results",
               {{"classes", jclasses},
                {"P_G", rat_json(r.p_g)},
                {"p_3line", rat_json(r.report.p_3line)},
                {"p_triangle", rat_json(r.report.p_triangle)},
                {"p_4line", rat_json(r.report.p_4line)},
                {"p_square", rat_json(r.report.p_square)},
                {"p_winner_tri", rat_json(r.report.p_winner_tri)},
                {"p_loser_tri", rat_json(r.report.p_loser_tri)}}},
              {"elapsed_seconds", elapsed}},
         text.str());
    return 0;
}

int cmd_sigma(const std::string& word, const std::string& dump_path, bool as_json) {
    const auto t0 = Clock::now();
    const SigmaWord sigma = SigmaWord::parse(word);
    const bool three = sigma.size() == 3;
    const HPolytope p = three ? build_E(sigma) : build_G(sigma);
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) throw std::runtime_error("cannot write \"" + dump_path + "\"");
        out << format_hpolytope(p);
    }
    const VPolytope v = vertex_enumerate(p);
    const int dim = affine_dimension(v.vertices);
    const Rational vol = volume(v);
    const Rational prob = Rational(three ? 512 : 4096) * vol;
    const std::string label = std::string("P(") + (three ? "E" : "G") + "_" + sigma.str() + ")";
    const double elapsed = seconds_since(t0);

    std::ostringstream text;
    text << "sigma = " << sigma.str() << "\n"
         << "ambient dimension = " << p.ambient_dim << "\n"
         << "dimension = " << dim << "\n"
         << "volume = " << rat_text(vol) << "\n"
         << label << " = " << rat_text(prob) << "\n"
         << "elapsed = " << fixed(elapsed, 2) << " s\n";
    emit(as_json,
         json{{"command", "sigma"},
              {"inputs", {{"sigma", sigma.str()}, {"dump", dump_path}}},
              {"results",
               {{"ambient_dim", p.ambient_dim},
                {"dim", dim},
                {"volume", rat_json(vol)},
                {"probability", rat_json(prob)}}},
              {"elapsed_seconds", elapsed}},
         text.str());
    return 0;
}

int cmd_simulate(int dice, std::uint64_t trials, std::uint64_t seed, int workers, int threads,
                 bool as_json) {
    const auto t0 = Clock::now();
    std::vector<Rational> exact;
    if (dice == 3) {
        const auto r = three_dice_exact();
        exact = {r.p_3line, r.p_triangle};
    } else {
        const auto r = four_dice_exact(threads);
        exact = {r.report.p_4line, r.report.p_square, r.report.p_winner_tri, r.report.p_loser_tri};
    }
    SamplerConfig config{seed, trials, dice};
    const EstimateReport rep = estimate(config, exact, workers, threads);
    const double elapsed = seconds_since(t0);

    std::ostringstream text;
    text << "dice = " << dice << ", trials = " << trials << ", seed = " << seed
         << ", workers = " << workers << "\n";
    text << std::left << std::setw(15) << "class" << std::right << std::setw(10) << "count"
         << std::setw(12) << "freq" << std::setw(12) << "exact" << std::setw(12) << "se"
         << std::setw(9) << "z" << "\n";
    json jclasses = json::array();
    for (const auto& c : rep.classes) {
        text << std::left << std::setw(15) << c.label << std::right << std::setw(10) << c.count
             << std::setw(12) << fixed(c.frequency, 6) << std::setw(12) << fixed(c.exact, 6)
             << std::setw(12) << fixed(c.std_error, 6) << std::setw(9) << fixed(c.z, 2) << "\n";
        jclasses.push_back(json{{"label", c.label},
                                {"count", c.count},
                                {"frequency", c.frequency},
                                {"exact", c.exact},
                                {"std_error", c.std_error},
                                {"z", c.z}});
    }
    text << "ties = " << rep.tie_count << "\n"
         << "elapsed = " << fixed(elapsed, 2) << " s\n";
    emit(as_json,
         json{{"command", "simulate"},
              {"inputs",
               {{"dice", dice}, {"trials", trials}, {"seed", seed}, {"workers", workers}}},
              {"results", {{"classes", jclasses}, {"ties", rep.tie_count}}},
              {"elapsed_seconds", elapsed}},
         text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tournament probabilities for balanced uniform 3-sided dice"};
    app.require_subcommand(1);

    bool as_json = false;
    int threads = 1;
    app.add_flag("--json", as_json, "emit one JSON object instead of text");
    app.add_option("--threads", threads, "threads for the heavy volume computations")
        ->check(CLI::PositiveNumber);

    auto* vol = app.add_subcommand("volume", "dimension and exact volume of a polytope file");
    std::string vol_path;
    vol->add_option("file", vol_path, "halfspace description file")->required();

    app.add_subcommand("three-dice", "exact three-dice tournament class probabilities");

    auto* four = app.add_subcommand("four-dice", "exact four-dice tournament class probabilities");
    bool full = false;
    four->add_flag("--full", full, "price all 36 non-degenerate mode words and verify cyclic equalities");

    auto* sig = app.add_subcommand("sigma", "one cycle-event polytope: dimension, volume, probability");
    std::string word, dump_path;
    sig->add_option("word", word, "mode word over 1..3, length 3 or 4")->required();
    sig->add_option("--dump", dump_path, "write the polytope in text format to this file");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo cross-check of the exact probabilities");
    int sim_dice = 3;
    std::uint64_t sim_trials = 100000, sim_seed = 0;
    int sim_workers = 1;
    sim->add_option("--dice", sim_dice, "number of dice, 3 or 4")->check(CLI::Range(3, 4));
    sim->add_option("--trials", sim_trials, "number of simulated tournaments")
        ->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "base seed for the worker streams");
    sim->add_option("--workers", sim_workers, "independent sample streams")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (vol->parsed()) return cmd_volume(vol_path, as_json);
        if (app.got_subcommand("three-dice")) return cmd_three_dice(as_json);
        if (four->parsed()) return cmd_four_dice(full, threads, as_json);
        if (sig->parsed()) return cmd_sigma(word, dump_path, as_json);
        if (sim->parsed()) return cmd_simulate(sim_dice, sim_trials, sim_seed, sim_workers, threads, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

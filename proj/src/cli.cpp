#include "aztec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aztec/holes.hpp"
#include "aztec/oracle.hpp"
#include "aztec/placement.hpp"
#include "aztec/shuffle.hpp"
#include "aztec/verify.hpp"

namespace aztec {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::uint64_t kDefaultSeed = 20240801;

long oracle_cap_from_env() {
    if (const char* cap = std::getenv("AZTEC_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("AZTEC_ORACLE_CAP must be a positive integer");
    }
    return kDefaultOracleCap;
}

Cell parse_cell(const std::string& text) {
    std::istringstream in(text);
    long i, j;
    char comma;
    if (!(in >> i >> comma >> j) || comma != ',' || !(in >> std::ws).eof())
        throw CLI::ValidationError("expected a cell as i,j, got '" + text + "'");
    return Cell{i, j};
}

nlohmann::json envelope(const std::string& command, nlohmann::json inputs,
                        nlohmann::json result) {
    return nlohmann::json{{"command", command},
                          {"inputs", std::move(inputs)},
                          {"result", std::move(result)},
                          {"provenance", {{"tool", "aztec"}, {"version", kVersion}}}};
}

void emit(std::ostream& out, bool json_mode, const std::string& command,
          const nlohmann::json& inputs, const nlohmann::json& result,
          const std::string& plain) {
    if (json_mode)
        out << envelope(command, inputs, result).dump() << "\n";
    else
        out << plain << "\n";
}

std::string ratfunc_or_absent(const std::optional<RationalFunction>& f) {
    return f ? f->str() : "absent (probability is 0 by parity)";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact placement probabilities, tiling counts and uniform sampling "
                 "for Aztec diamonds"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output");

    // prob
    auto* prob = app.add_subcommand("prob", "exact placement probability");
    long pl = 0, pm = 0, pn = 0;
    std::string prob_cell_a, prob_cell_b;
    prob->add_option("--l", pl, "position l (black-left horizontal domino)");
    prob->add_option("--m", pm, "position m");
    prob->add_option("--n", pn, "diamond order")->required();
    prob->add_option("--cell-a", prob_cell_a, "first cell i,j of an arbitrary domino");
    prob->add_option("--cell-b", prob_cell_b, "second cell i,j of an arbitrary domino");

    // ratfunc
    auto* ratfunc = app.add_subcommand("ratfunc", "the rational function of the 1/4 formula");
    long rl = 0, rm = 0;
    int ralpha = 0;
    ratfunc->add_option("--l", rl)->required();
    ratfunc->add_option("--m", rm)->required();
    ratfunc->add_option("--alpha", ralpha, "size residue mod 4")->required()
        ->check(CLI::Range(0, 3));

    // cr
    auto* cr = app.add_subcommand("cr", "creation rate, numeric or symbolic");
    long cl = 0, cm = 0, cn = 0;
    int calpha = 0;
    bool cr_sym = false;
    cr->add_option("--l", cl)->required();
    cr->add_option("--m", cm)->required();
    cr->add_option("--n", cn, "diamond order (numeric mode)");
    cr->add_flag("--symbolic", cr_sym, "emit the rational function for n = 4p+alpha");
    cr->add_option("--alpha", calpha, "size residue (symbolic mode)")->check(CLI::Range(0, 3));

    // count
    auto* count = app.add_subcommand("count", "exact tiling count of a region");
    long on = 0;
    std::vector<std::string> removed_flags;
    std::string region_file;
    count->add_option("--n", on, "diamond order");
    count->add_option("--remove", removed_flags, "removed cell i,j (repeatable)");
    count->add_option("--region", region_file, "region JSON file");

    // hole
    auto* hole = app.add_subcommand("hole", "2x2-square-hole tiling counts");
    long hl = 0, hm = 0, hn = 0;
    int halpha = 0;
    bool hole_oracle = false, hole_sym = false;
    hole->add_option("--l", hl)->required();
    hole->add_option("--m", hm)->required();
    hole->add_option("--n", hn, "diamond order (count mode)");
    hole->add_flag("--oracle", hole_oracle, "cross-check against the brute-force count");
    hole->add_flag("--symbolic", hole_sym, "emit the (g, h) rational-function pair");
    hole->add_option("--alpha", halpha, "size residue (symbolic mode)")->check(CLI::Range(0, 3));

    // sample
    auto* smp = app.add_subcommand("sample", "uniform random tiling via domino shuffling");
    long sn = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string svg_file;
    bool seed_given = false;
    smp->add_option("--n", sn)->required();
    smp->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    smp->add_option("--svg", svg_file, "also write an SVG rendering to this file");

    // mc
    auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of a domino probability");
    long mcn = 0;
    std::uint64_t mc_samples = 10000, mc_seed = kDefaultSeed;
    std::string mc_cell_a, mc_cell_b;
    bool mc_seed_given = false;
    mc->add_option("--n", mcn)->required();
    mc->add_option("--cell-a", mc_cell_a)->required();
    mc->add_option("--cell-b", mc_cell_b)->required();
    mc->add_option("--samples", mc_samples);
    mc->add_option("--seed", mc_seed)->each([&](const std::string&) { mc_seed_given = true; });

    // asym
    auto* asym = app.add_subcommand("asym", "asymptotic placement density");
    double ax = 0, ay = 0;
    asym->add_option("--x", ax)->required();
    asym->add_option("--y", ay)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"kravchuk", "placement", "oracle", "shuffle", "holes",
                               "acceptance", "all"}));

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        const long cap = oracle_cap_from_env();
        if (prob->parsed()) {
            nlohmann::json inputs{{"n", pn}};
            ExactProbability p = [&] {
                if (!prob_cell_a.empty() || !prob_cell_b.empty()) {
                    if (prob_cell_a.empty() || prob_cell_b.empty())
                        throw CLI::ValidationError("--cell-a and --cell-b go together");
                    Cell a = parse_cell(prob_cell_a), b = parse_cell(prob_cell_b);
                    inputs["cellA"] = {a.i, a.j};
                    inputs["cellB"] = {b.i, b.j};
                    return prob_general(a, b, pn);
                }
                inputs["l"] = pl;
                inputs["m"] = pm;
                return prob_numeric(pl, pm, pn);
            }();
            emit(out, json_mode, "prob", inputs, p.str(), p.str());
        } else if (ratfunc->parsed()) {
            SymbolicPlacement sp = f_symbolic(rl, rm, ralpha);
            nlohmann::json result;
            result["present"] = sp.f.has_value();
            if (sp.f) result["f"] = sp.f->str();
            emit(out, json_mode, "ratfunc", {{"l", rl}, {"m", rm}, {"alpha", ralpha}}, result,
                 ratfunc_or_absent(sp.f));
        } else if (cr->parsed()) {
            if (cr_sym) {
                if (cr->count("--alpha") == 0)
                    throw CLI::ValidationError("symbolic mode needs --alpha");
                auto h = cr_symbolic(cl, cm, calpha);
                nlohmann::json result;
                result["present"] = h.has_value();
                if (h) result["h"] = h->str();
                emit(out, json_mode, "cr", {{"l", cl}, {"m", cm}, {"alpha", calpha}}, result,
                     ratfunc_or_absent(h));
            } else {
                if (cn <= 0) throw CLI::ValidationError("numeric mode needs --n");
                Rat v = creation_rate(cl, cm, cn);
                emit(out, json_mode, "cr", {{"l", cl}, {"m", cm}, {"n", cn}}, v.get_str(),
                     v.get_str());
            }
        } else if (count->parsed()) {
            Region region(on);
            if (!region_file.empty()) {
                std::ifstream in(region_file);
                if (!in) throw std::invalid_argument("cannot open region file " + region_file);
                std::stringstream buffer;
                buffer << in.rdbuf();
                region = region_from_json(buffer.str());
            } else {
                if (on <= 0) throw CLI::ValidationError("count needs --n or --region");
                std::vector<Cell> cells;
                for (const std::string& s : removed_flags) cells.push_back(parse_cell(s));
                region = Region(on).without(cells);
            }
            Int c = count_tilings(region, cap);
            emit(out, json_mode, "count",
                 nlohmann::json::parse(region_to_json(region)), c.get_str(), c.get_str());
        } else if (hole->parsed()) {
            if (hole_sym) {
                if (hole->count("--alpha") == 0)
                    throw CLI::ValidationError("symbolic mode needs --alpha");
                HoleSymbolic hs = hole_symbolic(hl, hm, halpha);
                nlohmann::json result{{"g", hs.g.str()}, {"h", hs.h.str()}};
                emit(out, json_mode, "hole", {{"l", hl}, {"m", hm}, {"alpha", halpha}}, result,
                     "g = " + hs.g.str() + "\nh = " + hs.h.str());
            } else {
                if (hn <= 0) throw CLI::ValidationError("count mode needs --n");
                HoleSpec spec{Position{hl, hm}, hn};
                Int c = hole_count(spec);
                std::string plain = c.get_str();
                nlohmann::json result = c.get_str();
                if (hole_oracle) {
                    auto cells = spec.cells();
                    Int brute =
                        count_tilings(Region(hn, std::set<Cell>(cells.begin(), cells.end())), cap);
                    bool match = brute == c;
                    result = nlohmann::json{{"closed_form", c.get_str()},
                                            {"oracle", brute.get_str()},
                                            {"match", match}};
                    plain += match ? " (oracle agrees)" : " (ORACLE DISAGREES: " + brute.get_str() + ")";
                    if (!match) {
                        emit(out, json_mode, "hole", {{"l", hl}, {"m", hm}, {"n", hn}}, result,
                             plain);
                        return 1;
                    }
                }
                emit(out, json_mode, "hole", {{"l", hl}, {"m", hm}, {"n", hn}}, result, plain);
            }
        } else if (smp->parsed()) {
            if (!seed_given && !json_mode) err << "seed: " << seed << " (default)\n";
            Tiling t = sample(sn, seed);
            if (!svg_file.empty()) {
                std::ofstream svg(svg_file);
                if (!svg) throw std::invalid_argument("cannot open " + svg_file);
                svg << tiling_to_svg(t);
            }
            emit(out, json_mode, "sample",
                 {{"n", sn}, {"seed", seed}}, nlohmann::json::parse(tiling_to_json(t)),
                 tiling_to_json(t));
        } else if (mc->parsed()) {
            if (!mc_seed_given && !json_mode) err << "seed: " << mc_seed << " (default)\n";
            Cell a = parse_cell(mc_cell_a), b = parse_cell(mc_cell_b);
            McEstimate est = mc_estimate(mcn, a, b, mc_samples, mc_seed);
            std::ostringstream plain;
            plain << "frequency " << est.frequency << "  stderr " << est.stderr_ << "  ("
                  << est.hits << "/" << est.samples << ")";
            emit(out, json_mode, "mc",
                 {{"n", mcn},
                  {"cellA", {a.i, a.j}},
                  {"cellB", {b.i, b.j}},
                  {"samples", mc_samples},
                  {"seed", mc_seed}},
                 {{"frequency", est.frequency}, {"stderr", est.stderr_}, {"hits", est.hits}},
                 plain.str());
        } else if (asym->parsed()) {
            double v = asymptotic_prob(ax, ay);
            std::ostringstream plain;
            plain.precision(17);
            plain << v;
            emit(out, json_mode, "asym", {{"x", ax}, {"y", ay}}, v, plain.str());
        } else if (verify->parsed()) {
            std::vector<Check> checks = run_suite(suite, cap);
            std::size_t failed = 0;
            nlohmann::json rows = nlohmann::json::array();
            for (const Check& c : checks) {
                if (!c.pass) ++failed;
                if (json_mode)
                    rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                else
                    out << (c.pass ? "ok   " : "FAIL ") << c.name
                        << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            }
            if (json_mode)
                out << envelope("verify", {{"suite", suite}},
                                {{"checks", rows}, {"failed", failed}})
                           .dump()
                    << "\n";
            else
                out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace aztec

/*
   Copyright 2026 The drinfeld-survey authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "drinfeld/survey.hpp"

namespace {

int run_survey(const drinfeld::SurveyConfig& config, const std::string& out_path) {
    drinfeld::SweepResult result = drinfeld::sweep(config);
    for (const auto& p : result.bad_primes)
        std::cerr << "bad reduction: " << p.to_string() << '\n';
    if (out_path.empty() || out_path == "-") {
        drinfeld::write_records(std::cout, config, result);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << out_path << '\n';
            return 1;
        }
        drinfeld::write_records(os, config, result);
    }
    return 0;
}

int run_tables(const std::string& in_path, const std::string& report, const std::string& fspec) {
    std::ifstream is(in_path, std::ios::binary);
    if (!is) {
        std::cerr << "cannot open " << in_path << '\n';
        return 1;
    }
    drinfeld::ParsedSurvey parsed = drinfeld::read_csv(is);
    auto rows = drinfeld::rows_from_records(parsed.records, drinfeld::FSpec::parse(fspec));
    if (report == "density")
        std::cout << drinfeld::density_report(rows, parsed.q);
    else if (report == "growth")
        std::cout << drinfeld::growth_report(rows, parsed.q);
    else {
        std::cerr << "unknown report '" << report << "'\n";
        return 1;
    }
    return 0;
}

int run_oracles(int q, const std::string& g1, const std::string& g2, int max_deg) {
    using namespace drinfeld;
    DrinfeldModuleSpec psi(q, RatFunc::parse(q, g1), RatFunc::parse(q, g2));
    long checked = 0, disagreements = 0, smith_mismatches = 0;
    for (int x = 1; x <= max_deg; ++x) {
        for (const auto& p : monic_irreducibles(q, x)) {
            if (!good_reduction(psi, p)) continue;
            ReducedModule m = reduce_mod(psi, p);
            FrobeniusRecord r = build_record(m);
            for (int dm = 1; 2 * dm <= x; ++dm) {
                for (const auto& m0 : monic_polys(q, dm)) {
                    if (!divides(m0, r.b_max)) continue;
                    bool skew = conductor_divides(m, r.a_p, m0);
                    bool scalar = divisibility_oracle(m, m0);
                    bool cent = centralizer_membership(m, r.a_p, m0);
                    ++checked;
                    if (skew != scalar || skew != cent) {
                        ++disagreements;
                        std::cerr << "disagreement at p = " << p.to_string()
                                  << ", m = " << m0.to_string() << ": skew=" << skew
                                  << " scalar=" << scalar << " centralizer=" << cent << '\n';
                    }
                }
            }
            if (x <= 3) {
                ModuleStructure scan = module_structure_torsion_scan(m);
                if (scan.d1 != r.d1 || scan.d2 != r.d2) {
                    ++smith_mismatches;
                    std::cerr << "smith/torsion mismatch at p = " << p.to_string() << '\n';
                }
            }
        }
    }
    std::cout << "membership tests checked: " << checked << "\n"
              << "three-way disagreements: " << disagreements << "\n"
              << "smith/torsion mismatches (deg <= 3): " << smith_mismatches << "\n";
    return disagreements == 0 && smith_mismatches == 0 ? 0 : 1;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

/// Plain `key = value` file mirroring the survey flags; flags given on the
/// command line take precedence. `setters` applies a value for a key only
/// when the matching flag was absent.
void apply_config_file(
    const std::string& path,
    const std::map<std::string, std::function<void(const std::string&)>>& setters) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" +
                                     key + "'");
        it->second(value);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank-2 Drinfeld module Frobenius survey over F_q[T]"};
    app.require_subcommand(1);

    drinfeld::SurveyConfig config;
    std::string fspec = "sqrt";
    std::string out_path;

    CLI::App* survey = app.add_subcommand("survey", "sweep primes and emit per-prime records");
    std::string config_path;
    survey->add_option("--config", config_path, "config file with key = value lines");
    survey->add_option("--q", config.q, "odd prime q")->capture_default_str();
    survey->add_option("--g1", config.g1, "g1 coefficient (poly or poly/poly)")->capture_default_str();
    survey->add_option("--g2", config.g2, "g2 coefficient, nonzero")->capture_default_str();
    survey->add_option("--deg-min", config.deg_min, "lowest prime degree")->capture_default_str();
    survey->add_option("--deg-max", config.deg_max, "highest prime degree")->capture_default_str();
    survey->add_option("--f", fspec, "threshold: const:k | sqrt | log2 | linear:num/den")
        ->capture_default_str();
    survey->add_option("--workers", config.workers, "worker thread count")->capture_default_str();
    survey->add_option("--format", config.format, "csv | jsonl")->capture_default_str();
    survey->add_option("--out", out_path, "output path (default stdout)");

    std::string in_path, report = "density";
    CLI::App* tables = app.add_subcommand("tables", "aggregate a survey CSV into report tables");
    tables->add_option("--in", in_path, "survey CSV input")->required();
    tables->add_option("--report", report, "density | growth")->capture_default_str();
    tables->add_option("--f", fspec, "threshold function used for the density column")
        ->capture_default_str();

    int oq = 3, max_deg = 4;
    std::string og1 = "1", og2 = "1";
    CLI::App* oracles = app.add_subcommand("oracles", "run the independent-oracle agreement suite");
    oracles->add_option("--q", oq, "odd prime q")->capture_default_str();
    oracles->add_option("--g1", og1, "g1 coefficient")->capture_default_str();
    oracles->add_option("--g2", og2, "g2 coefficient")->capture_default_str();
    oracles->add_option("--max-deg", max_deg, "highest prime degree")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (survey->parsed()) {
            if (!config_path.empty()) {
                auto unless_flag = [&](const char* flag,
                                       std::function<void(const std::string&)> set) {
                    return [&, flag, set](const std::string& v) {
                        if (survey->get_option(flag)->count() == 0) set(v);
                    };
                };
                std::map<std::string, std::function<void(const std::string&)>> setters{
                    {"q", unless_flag("--q", [&](const std::string& v) { config.q = std::stoi(v); })},
                    {"g1", unless_flag("--g1", [&](const std::string& v) { config.g1 = v; })},
                    {"g2", unless_flag("--g2", [&](const std::string& v) { config.g2 = v; })},
                    {"deg-min", unless_flag("--deg-min",
                                            [&](const std::string& v) { config.deg_min = std::stoi(v); })},
                    {"deg-max", unless_flag("--deg-max",
                                            [&](const std::string& v) { config.deg_max = std::stoi(v); })},
                    {"f", unless_flag("--f", [&](const std::string& v) { fspec = v; })},
                    {"workers", unless_flag("--workers",
                                            [&](const std::string& v) { config.workers = std::stoi(v); })},
                    {"format", unless_flag("--format", [&](const std::string& v) { config.format = v; })},
                    {"out", unless_flag("--out", [&](const std::string& v) { out_path = v; })},
                };
                apply_config_file(config_path, setters);
            }
            config.f = drinfeld::FSpec::parse(fspec);
            return run_survey(config, out_path);
        }
        if (tables->parsed()) return run_tables(in_path, report, fspec);
        if (oracles->parsed()) return run_oracles(oq, og1, og2, max_deg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

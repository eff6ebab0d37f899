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

// End-to-end acceptance gate. Prints one pass/fail line per criterion and
// exits nonzero if any criterion fails. Criteria 7 and 8 exercise the
// installed CLI binary and the independent Python recount script, passed in
// via --cli / --recount / --python.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/frobenius.hpp"
#include "drinfeld/quadform.hpp"
#include "drinfeld/survey.hpp"

using namespace drinfeld;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  (%s)\n", criterion, ok ? "pass" : "FAIL", detail.c_str());
    if (!ok) ++failures;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool run(const std::string& cmd) { return std::system(cmd.c_str()) == 0; }

std::string quote(const std::string& s) { return "'" + s + "'"; }

Poly random_poly(std::mt19937& rng, int q, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<int> dc(0, q - 1);
    std::vector<int> c(static_cast<std::size_t>(dd(rng)) + 1);
    for (auto& x : c) x = dc(rng);
    return Poly(q, std::move(c));
}

/// Affine points of y^2 = delta(T) over F_q plus the point at infinity of the
/// smooth projective model (deg delta odd).
int hyperelliptic_point_count(const Poly& delta) {
    Fq F(delta.q());
    int count = 1;
    for (int t = 0; t < delta.q(); ++t) {
        int v = 0;
        for (int i = delta.deg(); i >= 0; --i) v = F.add(F.mul(v, t), delta.coeff(i));
        if (v == 0) count += 1;
        else if (F.is_square(v)) count += 2;
    }
    return count;
}

DrinfeldModuleSpec default_psi(int q) {
    return DrinfeldModuleSpec(q, RatFunc::parse(q, "1"), RatFunc::parse(q, "1"));
}

void criterion1() {
    int q = 3;
    ReducedModule m = reduce_mod(default_psi(q), Poly::T(q));
    FrobeniusRecord r = build_record(m);
    bool ok = r.a_p == Poly::constant(q, 1) && r.mu_p == 2 && r.delta_p == Poly(q, {1, 1}) &&
              r.b_p.is_one() && r.c_p.is_one() && r.d1.is_one() && r.d2 == Poly(q, {1, 1});
    // direct substitution: tau^2 + psi_{a_p} tau + psi_{mu_p p} = 0
    const ResidueField& F = m.field;
    SkewPoly sub = skew_add(
        F,
        skew_add(F, skew_tau_power(F, 2), skew_mul(F, psi_a(m, r.a_p), skew_tau_power(F, 1))),
        psi_a(m, m.field.modulus().times(r.mu_p)));
    ok = ok && sub.is_zero();
    report(1, ok, "worked instance p = T: a_p = 1, mu_p = 2, delta_p = T+1, d2 = T+1, P(pi) = 0");
}

void criterion2() {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    auto t0 = std::chrono::steady_clock::now();
    long n = 0, bad = 0;
    for (int x = 1; x <= 7; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            FrobeniusRecord r = build_record(psi, p);  // build_record re-checks
            ++n;
            // every acceptance-listed invariant, re-checked here explicitly
            Fq F(q);
            Poly p1 = Poly::constant(q, 1) + r.a_p + p.times(r.mu_p);
            bool ok = 2 * r.a_p.deg() <= p.deg() && r.mu_p != 0 &&
                      r.disc == r.a_p * r.a_p - p.times(4 * r.mu_p) &&
                      r.b_max * r.b_max * r.delta_K == r.disc && r.b_p * r.c_p == r.b_max &&
                      r.b_p * r.b_p * r.delta_p == r.disc && divides(r.d1, r.d2) &&
                      r.d1.deg() + r.d2.deg() == p.deg() && 2 * r.d2.deg() >= p.deg() &&
                      is_imaginary(r.delta_K) &&
                      (r.delta_K.deg() % 2 == 1 || !F.is_square(r.delta_K.lc())) &&
                      r.d1 * r.d2 == p1.monic() && r.supersingular == r.a_p.is_zero() &&
                      (!r.supersingular ||
                       (r.b_p.is_one() && r.c_p.is_one() && r.d1.is_one() &&
                        (p - r.d2).is_constant() && !(p - r.d2).is_zero()));
            if (!ok) ++bad;
        }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << n << " primes of degree <= 7, " << bad << " invariant failures, " << secs << " s";
    report(2, bad == 0 && n > 300 && secs < 300.0, d.str());
}

void criterion3() {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    long checked = 0, disagree = 0;
    for (int x = 1; x <= 4; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            ReducedModule m = reduce_mod(psi, p);
            FrobeniusRecord r = build_record(m);
            for (int dm = 1; 2 * dm <= x; ++dm)
                for (const auto& m0 : monic_polys(q, dm)) {
                    if (divides(p, m0)) continue;
                    bool skew = conductor_divides(m, r.a_p, m0);
                    bool scalar = divisibility_oracle(m, m0);
                    bool cent = centralizer_membership(m, r.a_p, m0);
                    ++checked;
                    if (skew != scalar || skew != cent || skew != divides(m0, r.b_p)) ++disagree;
                }
        }
    std::ostringstream d;
    d << checked << " (prime, m) pairs of degree <= 4, " << disagree << " disagreements";
    report(3, disagree == 0 && checked > 100, d.str());
}

void criterion4() {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    long n = 0, bad = 0;
    for (int x = 1; x <= 3; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            ReducedModule m = reduce_mod(psi, p);
            ModuleStructure smith = module_structure(m);
            ModuleStructure scan = module_structure_torsion_scan(m);
            ++n;
            if (!(smith.d1 == scan.d1 && smith.d2 == scan.d2)) ++bad;
        }
    std::ostringstream d;
    d << n << " primes of degree <= 3, " << bad << " Smith/torsion mismatches";
    report(4, bad == 0 && n > 10, d.str());
}

void criterion5() {
    int q = 3;
    std::mt19937 rng(20260824);
    int done = 0, bad = 0;
    while (done < 1000) {
        BinaryForm f{random_poly(rng, q, 6), random_poly(rng, q, 6), random_poly(rng, q, 6)};
        if (discriminant(f).is_zero() || !is_primitive(f)) continue;
        ++done;
        ReduceResult r = reduce(f);
        bool ok = is_reduced(r.g) && r.g.b.deg() < r.g.a.deg() && r.g.a.deg() <= r.g.c.deg() &&
                  discriminant(r.g) == discriminant(f) && act(r.transcript, f) == r.g &&
                  r.transcript.det().is_one();
        if (!ok) ++bad;
    }
    std::ostringstream d;
    d << "1000 random primitive forms, degrees <= 6, " << bad << " failures";
    report(5, bad == 0, d.str());
}

void criterion6() {
    int q = 3;
    long tested = 0, bad = 0, cubics = 0, orders = 0, inert_flagged = 0;
    try {
        // maximal orders, deg Delta_B <= 5
        for (int deg = 1; deg <= 5; ++deg)
            for (const auto& m : monic_polys(q, deg)) {
                if (!squarefree_split(m).b_max.is_one()) continue;
                for (int u = 1; u < q; ++u) {
                    Poly d = m.times(u);
                    if (!is_imaginary(d)) continue;
                    ++tested;
                    std::int64_t h = h_maximal(d);  // asserts integrality + bound
                    if (h <= 0) ++bad;
                    if (deg == 3) {
                        ++cubics;
                        if (h != hyperelliptic_point_count(d)) ++bad;
                    }
                }
            }
        // orders, deg Delta_O <= 4, vs the BFS oracle at depth 3
        for (int deg = 1; deg <= 4; ++deg)
            for (const auto& m : monic_polys(q, deg))
                for (int u = 1; u < q; ++u) {
                    Poly d = m.times(u);
                    SquarefreeSplit s = squarefree_split(d);
                    if (s.delta.is_constant() || !is_imaginary(s.delta)) continue;
                    ++orders;
                    OrderInvariants o = h_order(d);
                    int oracle = class_count_oracle(d, 3);
                    if (o.inf == InfinityType::ramified) {
                        if (oracle != o.h_O) ++bad;
                    } else if (oracle < o.h_O) {
                        ++bad;
                    } else if (oracle != o.h_O) {
                        // flagged: with a degree-2 infinite place the reduced
                        // representative is not unique, so the form count
                        // exceeds h_O; never silently equated
                        ++inert_flagged;
                    }
                }
    } catch (const std::exception& e) {
        report(6, false, std::string("exception: ") + e.what());
        return;
    }
    std::ostringstream d;
    d << tested << " maximal discs (deg <= 5, " << cubics << " ramified cubics vs point counts), "
      << orders << " orders vs BFS oracle (" << inert_flagged << " inert over-counts flagged), "
      << bad << " failures";
    report(6, bad == 0 && tested > 50 && orders > 20, d.str());
}

void criterion7(const std::string& cli, const std::string& recount, const std::string& python,
                const fs::path& tmp) {
    fs::path csv = tmp / "survey.csv";
    bool ok = run(quote(cli) + " survey --q 3 --g1 1 --g2 1 --deg-min 1 --deg-max 6 --f sqrt" +
                  " --workers 4 --out " + quote(csv.string()));
    long bad = 0;
    for (const std::string& rep : {std::string("density"), std::string("growth")}) {
        fs::path cpp_out = tmp / (rep + ".cpp.txt");
        fs::path py_out = tmp / (rep + ".py.txt");
        ok = ok && run(quote(cli) + " tables --in " + quote(csv.string()) + " --report " + rep +
                       " --f sqrt > " + quote(cpp_out.string()));
        ok = ok && run(quote(python) + " " + quote(recount) + " --in " + quote(csv.string()) +
                       " --report " + rep + " --f sqrt > " + quote(py_out.string()));
        if (!ok || read_file(cpp_out) != read_file(py_out)) ++bad;
    }
    // min_d2_slack >= 0 in every row of the growth table (exact trivial bound)
    std::istringstream is(read_file(csv));
    ParsedSurvey parsed = read_csv(is);
    auto rows = rows_from_records(parsed.records, FSpec::parse("sqrt"));
    for (const auto& row : rows)
        if (row.min_d2_slack < 0) ++bad;
    std::ostringstream d;
    d << "density+growth tables vs recount.py byte-for-byte, " << rows.size()
      << " degree rows, min_d2_slack >= 0, " << bad << " mismatches";
    report(7, ok && bad == 0 && rows.size() == 6, d.str());
}

void criterion8(const std::string& cli, const fs::path& tmp) {
    fs::path one = tmp / "w1.csv";
    fs::path many = tmp / "w8.csv";
    std::string base = " survey --q 3 --g1 1 --g2 1 --deg-min 1 --deg-max 5 --f sqrt --out ";
    bool ok = run(quote(cli) + base + quote(one.string()) + " --workers 1") &&
              run(quote(cli) + base + quote(many.string()) + " --workers 8");
    std::string a = read_file(one), b = read_file(many);
    ok = ok && !a.empty() && a == b;
    report(8, ok, "1-worker and 8-worker sweeps byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli, recount, python = "python3";
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string k = argv[i];
        if (k == "--cli") cli = argv[i + 1];
        else if (k == "--recount") recount = argv[i + 1];
        else if (k == "--python") python = argv[i + 1];
    }
    if (cli.empty() || recount.empty()) {
        std::cerr << "usage: acceptance --cli <survey-binary> --recount <recount.py>"
                     " [--python <interpreter>]\n";
        return 2;
    }
    fs::path tmp = fs::temp_directory_path() / "drinfeld-acceptance";
    fs::create_directories(tmp);

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(cli, recount, python, tmp);
    criterion8(cli, tmp);

    std::error_code ec;
    fs::remove_all(tmp, ec);
    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}

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

#include "drinfeld/survey.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "drinfeld/quadform.hpp"

namespace drinfeld {

FSpec FSpec::parse(const std::string& text) {
    FSpec f;
    if (text == "sqrt") {
        f.kind = Kind::Sqrt;
    } else if (text == "log2") {
        f.kind = Kind::Log2;
    } else if (text.rfind("const:", 0) == 0) {
        f.kind = Kind::Const;
        f.k = std::stod(text.substr(6));
        if (f.k < 0) throw std::invalid_argument("FSpec: const threshold must be >= 0");
    } else if (text.rfind("linear:", 0) == 0) {
        f.kind = Kind::Linear;
        std::string body = text.substr(7);
        auto slash = body.find('/');
        f.num = std::stoll(body.substr(0, slash));
        f.den = slash == std::string::npos ? 1 : std::stoll(body.substr(slash + 1));
        if (f.num <= 0 || f.den <= 0) throw std::invalid_argument("FSpec: linear needs num, den > 0");
    } else {
        throw std::invalid_argument("FSpec: unknown spec '" + text + "'");
    }
    return f;
}

double FSpec::eval(int x) const {
    switch (kind) {
        case Kind::Const: return k;
        case Kind::Sqrt: return std::sqrt(static_cast<double>(x));
        case Kind::Log2: return std::log2(1.0 + static_cast<double>(x));  // positive for x >= 1
        case Kind::Linear:
            return static_cast<double>(x) * static_cast<double>(num) / static_cast<double>(den);
    }
    return 0.0;
}

std::string FSpec::to_string() const {
    switch (kind) {
        case Kind::Const: return "const:" + std::to_string(k);
        case Kind::Sqrt: return "sqrt";
        case Kind::Log2: return "log2";
        case Kind::Linear: return "linear:" + std::to_string(num) + "/" + std::to_string(den);
    }
    return "?";
}

DrinfeldModuleSpec SurveyConfig::module() const {
    return DrinfeldModuleSpec(q, RatFunc::parse(q, g1), RatFunc::parse(q, g2));
}

void SurveyConfig::validate() const {
    Fq check(q);
    if (deg_min < 1 || deg_min > deg_max)
        throw std::invalid_argument("SurveyConfig: need 1 <= deg_min <= deg_max");
    if (workers < 1) throw std::invalid_argument("SurveyConfig: workers must be >= 1");
    if (format != "csv" && format != "jsonl")
        throw std::invalid_argument("SurveyConfig: format must be csv or jsonl");
    module();  // parses g1, g2
}

SweepResult sweep(const SurveyConfig& config) {
    config.validate();
    DrinfeldModuleSpec psi = config.module();
    std::vector<Poly> good;
    std::vector<Poly> bad;
    for (int x = config.deg_min; x <= config.deg_max; ++x)
        for (const auto& p : monic_irreducibles(config.q, x))
            (good_reduction(psi, p) ? good : bad).push_back(p);

    std::vector<FrobeniusRecord> records(good.size(), FrobeniusRecord{});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= good.size()) return;
            records[i] = build_record(psi, good[i]);
        }
    };
    if (config.workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < config.workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    // deg m candidates behind b_p never exceed x/2
    for (const auto& r : records)
        if (2 * r.b_max.deg() > r.p.deg())
            throw std::logic_error("sweep: deg b_max exceeds x/2 at p = " + r.p.to_string());
    std::vector<DensityRow> rows = rows_from_records(records, config.f);
    return SweepResult{std::move(records), std::move(rows), std::move(bad)};
}

std::vector<DensityRow> rows_from_records(const std::vector<FrobeniusRecord>& records,
                                          const FSpec& f) {
    std::map<int, DensityRow> by_x;
    std::map<int, std::int64_t> delta_sum;
    for (const auto& r : records) {
        int x = r.p.deg();
        auto [it, fresh] = by_x.try_emplace(x);
        DensityRow& row = it->second;
        int slack = 2 * r.d2.deg() - x;
        if (fresh) {
            row.x = x;
            row.min_deg_delta = r.delta_p.deg();
            row.min_d2_slack = slack;
        }
        row.primes_total += 1;
        if (2.0 * r.b_p.deg() >= f.eval(x)) row.count_bp_large += 1;
        if (r.b_p.is_one()) row.count_bp_one += 1;
        if (r.supersingular) row.supersingular_count += 1;
        row.min_deg_delta = std::min(row.min_deg_delta, r.delta_p.deg());
        row.min_d2_slack = std::min(row.min_d2_slack, slack);
        delta_sum[x] += r.delta_p.deg();
    }
    std::vector<DensityRow> rows;
    for (auto& [x, row] : by_x) {
        row.mean_deg_delta = Rat(delta_sum[x], row.primes_total);
        if (row.min_d2_slack < 0)
            throw std::logic_error("rows_from_records: negative d2 slack at x = " +
                                   std::to_string(x));
        rows.push_back(row);
    }
    return rows;
}

std::string csv_header() {
    return "q,x,p,a_p,mu_p,disc,b_max,b_p,c_p,delta_p,deg_delta_p,d1,d2,supersingular,j_bar";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (quoted) {
            if (ch == '"') quoted = false;
            else cur.push_back(ch);
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string record_to_csv(int q, const FrobeniusRecord& r) {
    std::ostringstream os;
    os << q << ',' << r.p.deg() << ',' << csv_field(r.p.to_string()) << ','
       << csv_field(r.a_p.to_string()) << ',' << r.mu_p << ',' << csv_field(r.disc.to_string())
       << ',' << csv_field(r.b_max.to_string()) << ',' << csv_field(r.b_p.to_string()) << ','
       << csv_field(r.c_p.to_string()) << ',' << csv_field(r.delta_p.to_string()) << ','
       << r.delta_p.deg() << ',' << csv_field(r.d1.to_string()) << ','
       << csv_field(r.d2.to_string()) << ',' << (r.supersingular ? 1 : 0) << ','
       << csv_field(r.j_bar.to_string());
    return os.str();
}

std::string record_to_json(int q, const FrobeniusRecord& r) {
    std::ostringstream os;
    os << "{\"q\":" << q << ",\"x\":" << r.p.deg() << ",\"p\":\"" << r.p.to_string()
       << "\",\"a_p\":\"" << r.a_p.to_string() << "\",\"mu_p\":" << r.mu_p << ",\"disc\":\""
       << r.disc.to_string() << "\",\"b_max\":\"" << r.b_max.to_string() << "\",\"b_p\":\""
       << r.b_p.to_string() << "\",\"c_p\":\"" << r.c_p.to_string() << "\",\"delta_p\":\""
       << r.delta_p.to_string() << "\",\"deg_delta_p\":" << r.delta_p.deg() << ",\"d1\":\""
       << r.d1.to_string() << "\",\"d2\":\"" << r.d2.to_string()
       << "\",\"supersingular\":" << (r.supersingular ? "true" : "false") << ",\"j_bar\":\""
       << r.j_bar.to_string() << "\"}";
    return os.str();
}

void write_records(std::ostream& os, const SurveyConfig& config, const SweepResult& result) {
    if (config.format == "csv") {
        os << csv_header() << '\n';
        for (const auto& r : result.records) os << record_to_csv(config.q, r) << '\n';
    } else {
        for (const auto& r : result.records) os << record_to_json(config.q, r) << '\n';
    }
}

ParsedSurvey read_csv(std::istream& is) {
    ParsedSurvey out;
    std::string line;
    if (!std::getline(is, line) || line != csv_header())
        throw std::invalid_argument("read_csv: missing or unexpected header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 15) throw std::invalid_argument("read_csv: bad field count");
        int q = std::stoi(f[0]);
        if (out.q == 0) out.q = q;
        if (q != out.q) throw std::invalid_argument("read_csv: mixed q");
        FrobeniusRecord r;
        r.p = Poly::parse(q, f[2]);
        r.a_p = Poly::parse(q, f[3]);
        r.mu_p = std::stoi(f[4]);
        r.disc = Poly::parse(q, f[5]);
        r.b_max = Poly::parse(q, f[6]);
        r.b_p = Poly::parse(q, f[7]);
        r.c_p = Poly::parse(q, f[8]);
        r.delta_p = Poly::parse(q, f[9]);
        if (std::stoi(f[10]) != r.delta_p.deg())
            throw std::invalid_argument("read_csv: deg_delta_p mismatch");
        r.d1 = Poly::parse(q, f[11]);
        r.d2 = Poly::parse(q, f[12]);
        r.supersingular = f[13] == "1";
        r.j_bar = Poly::parse(q, f[14]);
        r.delta_K = divmod(r.delta_p, r.c_p * r.c_p).quot;
        out.records.push_back(std::move(r));
    }
    return out;
}

namespace {

std::string fmt(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string density_report(const std::vector<DensityRow>& rows, int q) {
    std::ostringstream os;
    os << "x,primes_total,count_bp_large,count_bp_one,supersingular,frac_bp_large,"
          "dirichlet_s1.1,dirichlet_s1.5\n";
    double num11 = 0, den11 = 0, num15 = 0, den15 = 0;
    for (const auto& r : rows) {
        double w11 = std::pow(static_cast<double>(q), -1.1 * r.x);
        double w15 = std::pow(static_cast<double>(q), -1.5 * r.x);
        num11 += w11 * static_cast<double>(r.count_bp_large);
        den11 += w11 * static_cast<double>(r.primes_total);
        num15 += w15 * static_cast<double>(r.count_bp_large);
        den15 += w15 * static_cast<double>(r.primes_total);
        Rat frac = r.primes_total > 0 ? Rat(r.count_bp_large, r.primes_total) : Rat(0);
        os << r.x << ',' << r.primes_total << ',' << r.count_bp_large << ',' << r.count_bp_one
           << ',' << r.supersingular_count << ',' << frac.to_string() << ','
           << fmt(den11 > 0 ? num11 / den11 : 0.0, 9) << ','
           << fmt(den15 > 0 ? num15 / den15 : 0.0, 9) << '\n';
    }
    return os.str();
}

std::string growth_report(const std::vector<DensityRow>& rows, int q) {
    std::ostringstream os;
    os << "x,min_deg_delta,mean_deg_delta,min_d2_slack,ref_delta,ref_d2\n";
    double logq = std::log(static_cast<double>(q));
    for (const auto& r : rows) {
        // log_q of the conjectural lower-bound reference curves at |p| = q^x:
        // log|p| / (loglog|p|)^2 for deg delta_p, and
        // |p|^(1/2) (log|p|)^(1/2) / loglog|p| for deg d_2.
        double lp = r.x * logq;
        double llp = std::log(lp);
        double ref1 = (std::log(lp) - 2.0 * std::log(std::max(llp, 1e-9))) / logq;
        double ref2 = r.x / 2.0 + (0.5 * std::log(lp) - std::log(std::max(llp, 1e-9))) / logq;
        os << r.x << ',' << r.min_deg_delta << ',' << r.mean_deg_delta.to_string() << ','
           << r.min_d2_slack << ',' << fmt(ref1, 6) << ',' << fmt(ref2, 6) << '\n';
    }
    return os.str();
}

}  // namespace drinfeld

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

#ifndef DRINFELD_SURVEY_HPP
#define DRINFELD_SURVEY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "drinfeld/frobenius.hpp"
#include "drinfeld/rat.hpp"

namespace drinfeld {

/// Threshold function f(x) for the deg b_p >= f(x)/2 density column.
struct FSpec {
    enum class Kind { Const, Sqrt, Log2, Linear };
    Kind kind = Kind::Sqrt;
    double k = 0.0;        // Const
    std::int64_t num = 1;  // Linear
    std::int64_t den = 1;

    /// "const:k", "sqrt", "log2", "linear:num/den"
    static FSpec parse(const std::string& text);
    double eval(int x) const;
    std::string to_string() const;
};

struct SurveyConfig {
    int q = 3;
    std::string g1 = "1";
    std::string g2 = "1";
    int deg_min = 1;
    int deg_max = 8;
    FSpec f;
    int workers = 1;
    std::string format = "csv";  // csv | jsonl

    DrinfeldModuleSpec module() const;
    void validate() const;
};

struct DensityRow {
    int x = 0;
    std::int64_t primes_total = 0;  // good-reduction primes of degree x
    std::int64_t count_bp_large = 0;  // 2 deg b_p >= f(x)
    std::int64_t count_bp_one = 0;
    int min_deg_delta = 0;
    Rat mean_deg_delta;
    int min_d2_slack = 0;  // min of 2 deg d2 - deg p
    std::int64_t supersingular_count = 0;
};

struct SweepResult {
    std::vector<FrobeniusRecord> records;  // ordered by (deg p, lex p)
    std::vector<DensityRow> rows;
    std::vector<Poly> bad_primes;  // logged, excluded from rows
};

/// Every monic irreducible of degree deg_min..deg_max, classified and
/// processed on `workers` threads; output order is independent of the
/// worker count.
SweepResult sweep(const SurveyConfig& config);

/// Bit-exact CSV schema.
std::string csv_header();
std::string record_to_csv(int q, const FrobeniusRecord& r);
std::string record_to_json(int q, const FrobeniusRecord& r);
void write_records(std::ostream& os, const SurveyConfig& config, const SweepResult& result);

struct ParsedSurvey {
    int q = 0;
    std::vector<FrobeniusRecord> records;
};
ParsedSurvey read_csv(std::istream& is);

/// Aggregation used by both the sweep and the tables subcommand.
std::vector<DensityRow> rows_from_records(const std::vector<FrobeniusRecord>& records,
                                          const FSpec& f);

std::string density_report(const std::vector<DensityRow>& rows, int q);
std::string growth_report(const std::vector<DensityRow>& rows, int q);

}  // namespace drinfeld

#endif

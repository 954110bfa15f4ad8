// Copyright 2026 The BPMN Analyzer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bpmn/bench.hpp"

#include "bpmn/xml_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace bpmn {

std::vector<BranchParams> default_branch_rows()
{
    return {{5, 1}, {10, 1}, {15, 1}, {16, 1}, {17, 1}, {20, 1}, {5, 5}, {3, 20}};
}

std::vector<BenchModel> branches_suite(const std::vector<BranchParams>& rows)
{
    std::vector<BenchModel> models;
    for (const auto& p : rows) {
        models.push_back({"branches", "n=" + std::to_string(p.branches) + ";L=" + std::to_string(p.length),
                          [p] { return gen_parallel_branches(p); }});
    }
    return models;
}

std::vector<BenchModel> growing_suite(std::size_t from, std::size_t to, std::size_t count)
{
    if (from < 5 || to < from || count == 0) {
        throw std::invalid_argument("growing suite needs 5 <= from <= to and count >= 1");
    }
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < count; ++i) {
        sizes.push_back(count == 1 ? to : from + (to - from) * i / (count - 1));
    }
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    std::vector<BenchModel> models;
    for (auto size : sizes) {
        models.push_back({"growing", "elements=" + std::to_string(size),
                          [size] { return gen_growing_sequence(size); }});
    }
    return models;
}

std::vector<BenchModel> directory_suite(const std::filesystem::path& dir, bool lenient)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw std::invalid_argument("not a directory: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".bpmn") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw std::invalid_argument("no .bpmn files in " + dir.string());
    }
    std::sort(files.begin(), files.end());

    std::vector<BenchModel> models;
    for (const auto& file : files) {
        models.push_back({file.filename().string(), "", [file, lenient] {
                              std::ifstream in(file, std::ios::binary);
                              if (!in) throw std::runtime_error("cannot read " + file.string());
                              std::ostringstream text;
                              text << in.rdbuf();
                              return parse_bpmn(text.str(), ParseOptions{lenient});
                          }});
    }
    return models;
}

BenchClock monotonic_clock()
{
    return [] {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch());
    };
}

BenchReport run_benchmark(const std::vector<BenchModel>& models, std::size_t repetitions,
                          const DiagnoseOptions& options, const BenchClock& clock)
{
    if (repetitions < kMinRepetitions) {
        throw std::invalid_argument("at least " + std::to_string(kMinRepetitions) +
                                    " repetitions are required");
    }
    BenchReport report;
    for (const auto& m : models) {
        BenchRow row{m.name, m.params};
        try {
            const auto model = m.load();
            std::vector<double> samples;
            samples.reserve(repetitions);
            for (std::size_t r = 0; r < repetitions; ++r) {
                const auto start = clock();
                const auto d = diagnose(model, options);
                const auto stop = clock();
                samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
                row.states = d.stats.state_count;
            }
            double sum = 0;
            for (double s : samples) sum += s;
            row.mean_us = sum / samples.size();
            double sq = 0;
            for (double s : samples) sq += (s - row.mean_us) * (s - row.mean_us);
            row.stddev_us = std::sqrt(sq / (samples.size() - 1));
            row.reps = repetitions;
        } catch (const std::exception& e) {
            row = BenchRow{m.name, m.params};
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool BenchReport::any_failed() const
{
    return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.error.has_value(); });
}

namespace {

std::string fixed(double v)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << v;
    return s.str();
}

std::string csv_field(const std::string& v)
{
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string quoted = "\"";
    for (char c : v) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::string BenchReport::to_text() const
{
    std::ostringstream out;
    out << std::left << std::setw(24) << "model" << std::setw(20) << "params" << std::right
        << std::setw(12) << "states" << std::setw(14) << "mean_us" << std::setw(12) << "stddev_us"
        << std::setw(6) << "reps" << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(24) << r.model << std::setw(20) << r.params << std::right;
        if (r.error) {
            out << "  error: " << *r.error << "\n";
            continue;
        }
        out << std::setw(12) << r.states << std::setw(14) << fixed(r.mean_us) << std::setw(12)
            << fixed(r.stddev_us) << std::setw(6) << r.reps << "\n";
    }
    return out.str();
}

std::string BenchReport::to_csv() const
{
    std::ostringstream out;
    out << "model,params,states,mean_us,stddev_us,reps\n";
    for (const auto& r : rows) {
        out << csv_field(r.model) << ',' << csv_field(r.params) << ',';
        if (r.error) {
            out << ",,," << '\n';
            continue;
        }
        out << r.states << ',' << fixed(r.mean_us) << ',' << fixed(r.stddev_us) << ',' << r.reps << '\n';
    }
    return out.str();
}

}  // namespace bpmn

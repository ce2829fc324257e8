// core/include/neurovox/metrics/report.h

// Copyright 2026  NeuroVox Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef NEUROVOX_METRICS_REPORT_H_
#define NEUROVOX_METRICS_REPORT_H_

#include <optional>
#include <string>
#include <vector>

namespace neurovox::metrics {

struct UtteranceMetrics {
  std::string id;
  double snr_noisy = 0.0;
  double snr_enhanced = 0.0;
  double stoi_noisy = 0.0;
  double stoi_enhanced = 0.0;
  double spectral_convergence = 0.0;
  std::optional<double> pesq_noisy;
  std::optional<double> pesq_enhanced;
};

struct MetricMeans {
  double snr_noisy = 0.0;
  double snr_enhanced = 0.0;
  double stoi_noisy = 0.0;
  double stoi_enhanced = 0.0;
  double spectral_convergence = 0.0;
  std::optional<double> pesq_noisy;
  std::optional<double> pesq_enhanced;
};

struct MetricReport {
  std::string model;              // which checkpoint produced the enhanced set
  std::string note;               // free-form provenance line
  bool pesq_configured = false;   // PESQ columns appear only when true
  std::vector<UtteranceMetrics> records;
  std::vector<std::string> skipped;  // utterances missing files, with reasons

  // Arithmetic means over records. PESQ means cover only records where the
  // external evaluator returned a score.
  MetricMeans means() const;
};

std::string to_csv(const MetricReport& report);
std::string to_json(const MetricReport& report);

void write_report_files(const MetricReport& report, const std::string& csv_path,
                        const std::string& json_path);

}  // namespace neurovox::metrics

#endif  // NEUROVOX_METRICS_REPORT_H_

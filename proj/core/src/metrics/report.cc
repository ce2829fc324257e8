// core/src/metrics/report.cc

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

#include "neurovox/metrics/report.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace neurovox::metrics {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

MetricMeans MetricReport::means() const {
  MetricMeans m;
  if (records.empty()) return m;
  const double n = static_cast<double>(records.size());
  double pesq_n_sum = 0.0, pesq_e_sum = 0.0;
  std::size_t pesq_n_count = 0, pesq_e_count = 0;
  for (const UtteranceMetrics& r : records) {
    m.snr_noisy += r.snr_noisy / n;
    m.snr_enhanced += r.snr_enhanced / n;
    m.stoi_noisy += r.stoi_noisy / n;
    m.stoi_enhanced += r.stoi_enhanced / n;
    m.spectral_convergence += r.spectral_convergence / n;
    if (r.pesq_noisy) {
      pesq_n_sum += *r.pesq_noisy;
      ++pesq_n_count;
    }
    if (r.pesq_enhanced) {
      pesq_e_sum += *r.pesq_enhanced;
      ++pesq_e_count;
    }
  }
  if (pesq_n_count > 0) m.pesq_noisy = pesq_n_sum / static_cast<double>(pesq_n_count);
  if (pesq_e_count > 0) m.pesq_enhanced = pesq_e_sum / static_cast<double>(pesq_e_count);
  return m;
}

std::string to_csv(const MetricReport& report) {
  std::string out;
  out += "id,snr_noisy,snr_enhanced,stoi_noisy,stoi_enhanced,spectral_convergence";
  if (report.pesq_configured) out += ",pesq_noisy,pesq_enhanced";
  out += "\n";
  auto pesq_cell = [](const std::optional<double>& v) {
    return v ? fmt(*v) : std::string("unavailable");
  };
  for (const UtteranceMetrics& r : report.records) {
    out += r.id + ',' + fmt(r.snr_noisy) + ',' + fmt(r.snr_enhanced) + ',' +
           fmt(r.stoi_noisy) + ',' + fmt(r.stoi_enhanced) + ',' +
           fmt(r.spectral_convergence);
    if (report.pesq_configured) {
      out += ',' + pesq_cell(r.pesq_noisy) + ',' + pesq_cell(r.pesq_enhanced);
    }
    out += "\n";
  }
  const MetricMeans m = report.means();
  out += "mean," + fmt(m.snr_noisy) + ',' + fmt(m.snr_enhanced) + ',' + fmt(m.stoi_noisy) +
         ',' + fmt(m.stoi_enhanced) + ',' + fmt(m.spectral_convergence);
  if (report.pesq_configured) {
    out += ',' + pesq_cell(m.pesq_noisy) + ',' + pesq_cell(m.pesq_enhanced);
  }
  out += "\n";
  return out;
}

std::string to_json(const MetricReport& report) {
  nlohmann::json j;
  j["model"] = report.model;
  j["note"] = report.note;
  j["pesq"] = report.pesq_configured ? "external" : "unavailable";
  j["records"] = nlohmann::json::array();
  for (const UtteranceMetrics& r : report.records) {
    nlohmann::json rec;
    rec["id"] = r.id;
    rec["snr_noisy"] = r.snr_noisy;
    rec["snr_enhanced"] = r.snr_enhanced;
    rec["stoi_noisy"] = r.stoi_noisy;
    rec["stoi_enhanced"] = r.stoi_enhanced;
    rec["spectral_convergence"] = r.spectral_convergence;
    if (report.pesq_configured) {
      rec["pesq_noisy"] = r.pesq_noisy ? nlohmann::json(*r.pesq_noisy) : nlohmann::json();
      rec["pesq_enhanced"] =
          r.pesq_enhanced ? nlohmann::json(*r.pesq_enhanced) : nlohmann::json();
    }
    j["records"].push_back(rec);
  }
  const MetricMeans m = report.means();
  j["means"]["snr_noisy"] = m.snr_noisy;
  j["means"]["snr_enhanced"] = m.snr_enhanced;
  j["means"]["stoi_noisy"] = m.stoi_noisy;
  j["means"]["stoi_enhanced"] = m.stoi_enhanced;
  j["means"]["spectral_convergence"] = m.spectral_convergence;
  if (report.pesq_configured) {
    j["means"]["pesq_noisy"] = m.pesq_noisy ? nlohmann::json(*m.pesq_noisy) : nlohmann::json();
    j["means"]["pesq_enhanced"] =
        m.pesq_enhanced ? nlohmann::json(*m.pesq_enhanced) : nlohmann::json();
  }
  j["skipped"] = report.skipped;
  return j.dump(2) + "\n";
}

void write_report_files(const MetricReport& report, const std::string& csv_path,
                        const std::string& json_path) {
  {
    std::ofstream os(csv_path);
    if (!os) throw std::runtime_error("write_report_files: cannot open " + csv_path);
    os << to_csv(report);
  }
  {
    std::ofstream os(json_path);
    if (!os) throw std::runtime_error("write_report_files: cannot open " + json_path);
    os << to_json(report);
  }
}

}  // namespace neurovox::metrics

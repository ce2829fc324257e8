// core/src/synth/corpus.cc

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

#include "neurovox/synth/corpus.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "neurovox/common/rng.h"
#include "neurovox/dsp/wav_io.h"
#include "neurovox/io/container.h"

namespace neurovox::synth {
namespace {

namespace fs = std::filesystem;

std::string subject_name(std::size_t index) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "s%02zu", index);
  return buf;
}

nlohmann::json params_to_json(const SynthParams& p) {
  nlohmann::json j;
  j["duration_s"] = p.duration_s;
  j["pitch_lo_hz"] = p.pitch_lo_hz;
  j["pitch_hi_hz"] = p.pitch_hi_hz;
  j["n_latents"] = p.n_latents;
  j["n_coupled_latents"] = p.n_coupled_latents;
  j["coupling"] = p.coupling;
  j["latent_smooth_ms"] = p.latent_smooth_ms;
  j["pink_noise_level"] = p.pink_noise_level;
  j["mixing_seed"] = p.mixing_seed;
  return j;
}

SynthParams params_from_json(const nlohmann::json& j) {
  SynthParams p;
  p.duration_s = j.value("duration_s", p.duration_s);
  p.pitch_lo_hz = j.value("pitch_lo_hz", p.pitch_lo_hz);
  p.pitch_hi_hz = j.value("pitch_hi_hz", p.pitch_hi_hz);
  p.n_latents = j.value("n_latents", p.n_latents);
  p.n_coupled_latents = j.value("n_coupled_latents", p.n_coupled_latents);
  p.coupling = j.value("coupling", p.coupling);
  p.latent_smooth_ms = j.value("latent_smooth_ms", p.latent_smooth_ms);
  p.pink_noise_level = j.value("pink_noise_level", p.pink_noise_level);
  p.mixing_seed = j.value("mixing_seed", p.mixing_seed);
  return p;
}

std::string noise_kind_name(NoiseKind k) {
  return k == NoiseKind::kMusicLike ? "music_like" : "white";
}

NoiseKind noise_kind_from_name(const std::string& name) {
  if (name == "music_like") return NoiseKind::kMusicLike;
  if (name == "white") return NoiseKind::kWhite;
  throw std::runtime_error("manifest: unknown noise kind '" + name + "'");
}

}  // namespace

std::vector<const UtteranceRecord*> CorpusManifest::split(const std::string& name) const {
  std::vector<const UtteranceRecord*> out;
  for (const UtteranceRecord& u : utterances) {
    if (u.split == name) out.push_back(&u);
  }
  return out;
}

std::string CorpusManifest::resolve(const std::string& relative) const {
  if (relative.empty()) return "";
  return (fs::path(root_dir) / relative).string();
}

CorpusBuildSpec corpus_preset(const std::string& name) {
  CorpusBuildSpec spec;
  spec.preset = name;
  if (name == "desk") {
    spec.n_train_utterances = 50;
    spec.n_test_utterances = 20;
    spec.n_train_subjects = 4;
    spec.n_test_subjects = 2;
    spec.n_common_subjects = 2;
    spec.params.duration_s = 2.0;
  } else if (name == "paper-shape") {
    spec.n_train_utterances = 10 * 30 * 3;
    spec.n_test_utterances = 8 * 30 * 3;
    spec.n_train_subjects = 10;
    spec.n_test_subjects = 8;
    spec.n_common_subjects = 2;
    spec.params.duration_s = 3.0;
  } else {
    throw std::invalid_argument("corpus_preset: unknown preset '" + name +
                                "' (expected 'desk' or 'paper-shape')");
  }
  return spec;
}

CorpusManifest build_corpus(const CorpusBuildSpec& spec, const std::string& out_dir,
                            std::uint64_t master_seed) {
  if (spec.n_train_utterances < 1 || spec.n_test_utterances < 1) {
    throw std::invalid_argument("build_corpus: utterance counts must be >= 1");
  }
  if (spec.n_train_subjects < 1 || spec.n_test_subjects < 1 ||
      spec.n_common_subjects > spec.n_test_subjects) {
    throw std::invalid_argument("build_corpus: invalid subject counts");
  }
  validate(spec.params);

  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "wav", ec);
  fs::create_directories(fs::path(out_dir) / "eeg", ec);
  if (!fs::is_directory(fs::path(out_dir) / "wav") ||
      !fs::is_directory(fs::path(out_dir) / "eeg")) {
    throw std::runtime_error("build_corpus: cannot create output tree under " + out_dir);
  }

  CorpusManifest manifest;
  manifest.preset = spec.preset;
  manifest.master_seed = master_seed;
  manifest.params = spec.params;
  manifest.params.mixing_seed = derive_seed(master_seed, 0xeef);  // corpus-level mixing
  manifest.test_noise = spec.test_noise;
  manifest.test_noise_level_db = spec.test_noise_level_db;
  manifest.root_dir = out_dir;

  // Test subjects occupy the tail of the train-subject list (the shared ones)
  // plus fresh identities beyond it.
  std::vector<std::string> train_subjects, test_subjects;
  for (std::size_t s = 0; s < spec.n_train_subjects; ++s) {
    train_subjects.push_back(subject_name(s));
  }
  for (std::size_t s = 0; s < spec.n_test_subjects; ++s) {
    const std::size_t shared_start = spec.n_train_subjects - spec.n_common_subjects;
    const std::size_t idx = s < spec.n_common_subjects
                                ? shared_start + s
                                : spec.n_train_subjects + (s - spec.n_common_subjects);
    test_subjects.push_back(subject_name(idx));
  }
  const std::set<std::string> train_subject_set(train_subjects.begin(), train_subjects.end());

  std::size_t global_index = 0;
  auto generate = [&](const std::string& split, std::size_t count,
                      const std::vector<std::string>& subjects) {
    for (std::size_t i = 0; i < count; ++i, ++global_index) {
      UtteranceRecord rec;
      rec.split = split;
      rec.subject = subjects[i % subjects.size()];
      rec.seed = derive_seed(master_seed, global_index);
      char idbuf[32];
      std::snprintf(idbuf, sizeof(idbuf), "%s-%04zu-%s", split.c_str(), i,
                    rec.subject.c_str());
      rec.id = idbuf;
      rec.subject_in_train = train_subject_set.count(rec.subject) > 0;

      auto [speech, recording] = synth_utterance(manifest.params, rec.seed);

      rec.clean_wav = "wav/" + rec.id + "_clean.wav";
      dsp::write_wav(manifest.resolve(rec.clean_wav), speech);
      if (split == "test") {
        const dsp::Waveform noisy =
            mix_background(speech, spec.test_noise, spec.test_noise_level_db,
                           derive_seed(rec.seed, 0x1015e));
        rec.noisy_wav = "wav/" + rec.id + "_noisy.wav";
        dsp::write_wav(manifest.resolve(rec.noisy_wav), noisy);
      }
      rec.eeg = "eeg/" + rec.id + ".nvc";
      io::write_eeg_file(manifest.resolve(rec.eeg), recording);
      manifest.utterances.push_back(std::move(rec));
    }
  };
  generate("train", spec.n_train_utterances, train_subjects);
  generate("test", spec.n_test_utterances, test_subjects);

  save_manifest(manifest, (fs::path(out_dir) / "manifest.json").string());
  return manifest;
}

void save_manifest(const CorpusManifest& manifest, const std::string& path) {
  nlohmann::json j;
  j["preset"] = manifest.preset;
  j["master_seed"] = manifest.master_seed;
  j["seed_rule"] = "utterance_seed = splitmix64(master ^ splitmix64(global_index))";
  j["generator_params"] = params_to_json(manifest.params);
  j["test_noise"] = noise_kind_name(manifest.test_noise);
  j["test_noise_level_db"] = manifest.test_noise_level_db;
  j["utterances"] = nlohmann::json::array();
  for (const UtteranceRecord& u : manifest.utterances) {
    nlohmann::json ju;
    ju["id"] = u.id;
    ju["subject"] = u.subject;
    ju["split"] = u.split;
    ju["seed"] = u.seed;
    ju["clean_wav"] = u.clean_wav;
    if (!u.noisy_wav.empty()) ju["noisy_wav"] = u.noisy_wav;
    ju["eeg"] = u.eeg;
    ju["subject_in_train"] = u.subject_in_train;
    j["utterances"].push_back(ju);
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_manifest: cannot open " + path);
  os << j.dump(2) << "\n";
}

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_manifest: cannot open " + path);
  nlohmann::json j;
  is >> j;

  CorpusManifest manifest;
  manifest.root_dir = fs::path(path).parent_path().string();
  manifest.preset = j.value("preset", "");
  manifest.master_seed = j.value("master_seed", std::uint64_t{0});
  manifest.params = params_from_json(j.value("generator_params", nlohmann::json::object()));
  manifest.test_noise = noise_kind_from_name(j.value("test_noise", "music_like"));
  manifest.test_noise_level_db = j.value("test_noise_level_db", kPaperTestLevelDb);

  std::set<std::string> ids;
  for (const auto& ju : j.value("utterances", nlohmann::json::array())) {
    UtteranceRecord u;
    u.id = ju.value("id", "");
    u.subject = ju.value("subject", "");
    u.split = ju.value("split", "");
    u.seed = ju.value("seed", std::uint64_t{0});
    u.clean_wav = ju.value("clean_wav", "");
    u.noisy_wav = ju.value("noisy_wav", "");
    u.eeg = ju.value("eeg", "");
    u.subject_in_train = ju.value("subject_in_train", false);
    if (u.split != "train" && u.split != "test") {
      throw std::runtime_error("load_manifest: utterance '" + u.id + "' has bad split '" +
                               u.split + "'");
    }
    if (!ids.insert(u.id).second) {
      throw std::runtime_error("load_manifest: duplicate utterance id '" + u.id + "'");
    }
    for (const std::string& rel : {u.clean_wav, u.noisy_wav, u.eeg}) {
      if (!rel.empty() && !fs::exists(manifest.resolve(rel))) {
        throw std::runtime_error("load_manifest: missing file " + manifest.resolve(rel) +
                                 " referenced by '" + u.id + "'");
      }
    }
    manifest.utterances.push_back(std::move(u));
  }
  return manifest;
}

}  // namespace neurovox::synth

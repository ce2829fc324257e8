// core/include/neurovox/synth/corpus.h

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

#ifndef NEUROVOX_SYNTH_CORPUS_H_
#define NEUROVOX_SYNTH_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "neurovox/synth/synth.h"

namespace neurovox::synth {

struct UtteranceRecord {
  std::string id;
  std::string subject;
  std::string split;  // "train" | "test"
  std::uint64_t seed = 0;
  std::string clean_wav;  // paths relative to the manifest directory
  std::string noisy_wav;  // test split only, empty otherwise
  std::string eeg;
  bool subject_in_train = false;  // overlapping-subject flag for test rows
};

struct CorpusManifest {
  std::string preset;
  std::uint64_t master_seed = 0;
  SynthParams params;  // generator snapshot
  NoiseKind test_noise = NoiseKind::kMusicLike;
  double test_noise_level_db = kPaperTestLevelDb;
  std::vector<UtteranceRecord> utterances;
  std::string root_dir;  // directory of the manifest file; not serialized

  std::vector<const UtteranceRecord*> split(const std::string& name) const;
  std::string resolve(const std::string& relative) const;
};

struct CorpusBuildSpec {
  std::string preset = "desk";
  std::size_t n_train_utterances = 50;
  std::size_t n_test_utterances = 20;
  std::size_t n_train_subjects = 4;
  std::size_t n_test_subjects = 2;   // drawn from the tail of the subject list
  std::size_t n_common_subjects = 2; // test subjects that also appear in train
  SynthParams params;
  NoiseKind test_noise = NoiseKind::kMusicLike;
  double test_noise_level_db = kPaperTestLevelDb;
};

// Named presets:
//   "desk"        4 subjects, 50 train / 20 test utterances of 2 s
//   "paper-shape" 10 train subjects x 30 sentences x 3 repeats, 8 test
//                 subjects (2 shared with train) x 30 x 3
CorpusBuildSpec corpus_preset(const std::string& name);

// Generates every utterance (clean WAV; mixed noisy WAV for the test split;
// raw EEG container), writes the manifest JSON, and returns it. Per-utterance
// seeds derive from the master seed and the global utterance index.
CorpusManifest build_corpus(const CorpusBuildSpec& spec, const std::string& out_dir,
                            std::uint64_t master_seed);

void save_manifest(const CorpusManifest& manifest, const std::string& path);

// Loads and validates: unique ids, disjoint splits, every referenced file
// present on disk.
CorpusManifest load_manifest(const std::string& path);

}  // namespace neurovox::synth

#endif  // NEUROVOX_SYNTH_CORPUS_H_

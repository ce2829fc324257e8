// core/src/pipeline/commands.cc

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

#include "neurovox/pipeline/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "neurovox/common/threading.h"
#include "neurovox/dimred/pca.h"
#include "neurovox/dsp/griffin_lim.h"
#include "neurovox/dsp/mfcc.h"
#include "neurovox/dsp/wav_io.h"
#include "neurovox/io/container.h"
#include "neurovox/io/model_io.h"
#include "neurovox/metrics/pesq.h"
#include "neurovox/metrics/snr.h"
#include "neurovox/metrics/spectral.h"
#include "neurovox/metrics/stoi.h"

namespace neurovox::pipeline {
namespace {

namespace fs = std::filesystem;

// Seed-stream tags for the stages hanging off one master seed.
constexpr std::uint64_t kSeedTagKpca = 0x4b5043;     // subsampling
constexpr std::uint64_t kSeedTagCorrupt = 0xc042;    // per-utterance cepstral noise
constexpr std::uint64_t kSeedTagInitLstm = 0x11;     // model init
constexpr std::uint64_t kSeedTagInitGen = 0x12;
constexpr std::uint64_t kSeedTagInitDisc = 0x13;

std::string features_dir(const ExperimentConfig& c) {
  return (fs::path(c.out_dir) / "features").string();
}
std::string models_dir(const ExperimentConfig& c) {
  return (fs::path(c.out_dir) / "models").string();
}
std::string logs_dir(const ExperimentConfig& c) {
  return (fs::path(c.out_dir) / "logs").string();
}
std::string reports_dir(const ExperimentConfig& c) {
  return (fs::path(c.out_dir) / "reports").string();
}
std::string enhanced_dir(const ExperimentConfig& c, const std::string& model) {
  return (fs::path(c.out_dir) / "enhanced" / model).string();
}
std::string feature_path(const ExperimentConfig& c, const std::string& id,
                         const std::string& kind) {
  return (fs::path(features_dir(c)) / (id + "." + kind + ".nvc")).string();
}
std::string kpca_path(const ExperimentConfig& c) {
  return (fs::path(models_dir(c)) / "kpca.nvck").string();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("pipeline: cannot create directory " + dir);
  }
}

std::string eeg_kind(const ExperimentConfig& c) { return c.use_raw_eeg ? "eeg155" : "eeg30"; }

// The feature stream the models consume for a given utterance.
struct UtteranceFeatures {
  Matrix mfcc;
  Matrix eeg;
};

UtteranceFeatures load_features(const ExperimentConfig& c, const std::string& id) {
  UtteranceFeatures f;
  f.mfcc = io::read_feature_file(feature_path(c, id, "mfcc13"), "mfcc13").data;
  f.eeg = io::read_feature_file(feature_path(c, id, eeg_kind(c)), eeg_kind(c)).data;
  return f;
}

models::TrainingSet load_training_set(const ExperimentConfig& config,
                                      const synth::CorpusManifest& manifest) {
  models::TrainingSet set;
  set.mfcc_dim = 13;
  const auto train = manifest.split("train");
  if (train.empty()) throw std::runtime_error("cmd_train: manifest has no train split");
  std::size_t index = 0;
  for (const synth::UtteranceRecord* u : train) {
    UtteranceFeatures f = load_features(config, u->id);
    models::TrainingTriple triple;
    dsp::MfccSequence clean;
    clean.coeffs = f.mfcc;
    // Corruption is materialized once per run; the seed is per utterance.
    const dsp::MfccSequence noisy = synth::corrupt_mfcc(
        clean, config.mfcc_noise_sigma,
        derive_seed(config.master_seed, derive_seed(kSeedTagCorrupt, index)));
    triple.noisy_mfcc = noisy.coeffs;
    triple.eeg = f.eeg;
    triple.clean_mfcc = f.mfcc;
    set.eeg_dim = f.eeg.cols();
    set.items.push_back(std::move(triple));
    ++index;
  }
  return set;
}

void write_explained_variance_csv(const std::vector<double>& curve, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cmd_extract: cannot open " + path);
  os << "component_index,cumulative_fraction\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%zu,%.12g\n", i + 1, curve[i]);
    os << buf;
  }
}

std::string model_name_of_checkpoint(const std::string& kind) {
  if (kind == "lstm_regression") return "lstm";
  if (kind == "gan_generator") return "gan";
  throw std::runtime_error("pipeline: checkpoint kind '" + kind +
                           "' is not an enhancement model");
}

}  // namespace

synth::CorpusManifest cmd_synth(const SynthOptions& options) {
  if (options.out_dir.empty()) {
    throw std::invalid_argument("cmd_synth: output directory is required");
  }
  synth::CorpusBuildSpec spec = synth::corpus_preset(options.preset);
  if (options.n_train_utterances) spec.n_train_utterances = *options.n_train_utterances;
  if (options.n_test_utterances) spec.n_test_utterances = *options.n_test_utterances;
  if (options.duration_s) spec.params.duration_s = *options.duration_s;
  if (options.noise_level_db) spec.test_noise_level_db = *options.noise_level_db;
  return synth::build_corpus(spec, options.out_dir, options.seed);
}

void cmd_extract(const ExperimentConfig& config) {
  validate(config);
  const synth::CorpusManifest manifest = synth::load_manifest(config.manifest_path);
  ensure_dir(features_dir(config));
  ensure_dir(models_dir(config));

  // Pass 1: cepstra and 155-dim features per utterance, truncated to the
  // shorter frame count so downstream pairs stay aligned.
  struct Extracted {
    std::string id;
    std::string split;
  };
  std::vector<Extracted> index(manifest.utterances.size());
  parallel_for(manifest.utterances.size(), config.threads, [&](std::size_t i) {
    const synth::UtteranceRecord& u = manifest.utterances[i];
    try {
      const std::string wav_rel = u.split == "test" ? u.noisy_wav : u.clean_wav;
      const dsp::Waveform wav = dsp::read_wav(manifest.resolve(wav_rel));
      const dsp::MfccSequence mfcc = dsp::mfcc(wav);

      const eeg::EegRecording raw = io::read_eeg_file(manifest.resolve(u.eeg));
      const eeg::EegRecording clean = eeg::preprocess_eeg(raw);
      const eeg::EegFeatureSequence feats = eeg::extract_eeg_features(clean);

      const std::size_t frames = std::min(mfcc.frames(), feats.frames());
      Matrix mfcc_t(frames, mfcc.coeffs.cols());
      Matrix eeg_t(frames, feats.features.cols());
      for (std::size_t r = 0; r < frames; ++r) {
        std::copy(mfcc.coeffs.row(r).begin(), mfcc.coeffs.row(r).end(),
                  mfcc_t.row(r).begin());
        std::copy(feats.features.row(r).begin(), feats.features.row(r).end(),
                  eeg_t.row(r).begin());
      }
      io::write_feature_file(feature_path(config, u.id, "mfcc13"), "mfcc13", 100, mfcc_t);
      io::write_feature_file(feature_path(config, u.id, "eeg155"), "eeg155", 100, eeg_t);
      index[i] = {u.id, u.split};
    } catch (const std::exception& e) {
      throw std::runtime_error("cmd_extract: utterance '" + u.id + "': " + e.what());
    }
  });

  // Collect the train-split feature rows (seeded subsample when over the cap).
  std::vector<const Extracted*> train_items;
  for (const Extracted& e : index) {
    if (e.split == "train") train_items.push_back(&e);
  }
  if (train_items.empty()) throw std::runtime_error("cmd_extract: no train split");

  std::size_t total_rows = 0;
  std::vector<std::size_t> per_item_rows(train_items.size());
  for (std::size_t i = 0; i < train_items.size(); ++i) {
    const auto f = io::read_feature_file(feature_path(config, train_items[i]->id, "eeg155"),
                                         "eeg155");
    per_item_rows[i] = f.data.rows();
    total_rows += f.data.rows();
  }

  std::vector<std::uint8_t> selected(total_rows, 1);
  std::size_t n_selected = total_rows;
  if (total_rows > config.kpca.params.max_train_points) {
    std::vector<std::size_t> order(total_rows);
    for (std::size_t i = 0; i < total_rows; ++i) order[i] = i;
    Rng rng(derive_seed(config.master_seed, kSeedTagKpca));
    rng.shuffle(order);
    std::fill(selected.begin(), selected.end(), 0);
    for (std::size_t i = 0; i < config.kpca.params.max_train_points; ++i) {
      selected[order[i]] = 1;
    }
    n_selected = config.kpca.params.max_train_points;
  }

  Matrix sample(n_selected, eeg::kFeatureWidth);
  std::size_t global_row = 0, out_row = 0;
  for (std::size_t i = 0; i < train_items.size(); ++i) {
    const auto f = io::read_feature_file(feature_path(config, train_items[i]->id, "eeg155"),
                                         "eeg155");
    for (std::size_t r = 0; r < f.data.rows(); ++r, ++global_row) {
      if (selected[global_row] != 0) {
        std::copy(f.data.row(r).begin(), f.data.row(r).end(), sample.row(out_row).begin());
        ++out_row;
      }
    }
  }

  // The explained-variance curve comes from plain PCA on the same sample; the
  // reduction itself is kernel PCA.
  write_explained_variance_csv(dimred::pca_explained_variance(sample),
                               (fs::path(config.out_dir) / "explained_variance.csv").string());
  const dimred::KpcaModel kpca = dimred::kpca_fit(sample, config.kpca.k, config.kpca.params);
  io::save_checkpoint(kpca_path(config),
                      io::checkpoint_from_kpca(kpca, config.master_seed, config_hash(config)));

  // Pass 2: reduced features for every split.
  parallel_for(manifest.utterances.size(), config.threads, [&](std::size_t i) {
    const synth::UtteranceRecord& u = manifest.utterances[i];
    const auto f = io::read_feature_file(feature_path(config, u.id, "eeg155"), "eeg155");
    const Matrix reduced = dimred::kpca_transform(kpca, f.data);
    io::write_feature_file(feature_path(config, u.id, "eeg30"), "eeg30", 100, reduced);
  });
}

TrainOutcome cmd_train(const ExperimentConfig& config) {
  validate(config);
  const synth::CorpusManifest manifest = synth::load_manifest(config.manifest_path);
  ensure_dir(models_dir(config));
  ensure_dir(logs_dir(config));

  // Models train in z-scored feature space; the scaler rides along in the
  // checkpoint so enhance can undo it.
  models::TrainingSet data = load_training_set(config, manifest);
  const models::FeatureScaler scaler = models::FeatureScaler::fit(data);
  scaler.apply(data);
  const std::uint64_t hash = config_hash(config);

  models::TrainConfig train_config = config.train;
  if (train_config.loss_log_path.empty()) {
    train_config.loss_log_path =
        (fs::path(logs_dir(config)) / (config.model + "_loss.csv")).string();
  }
  train_config.seed = derive_seed(config.master_seed, train_config.seed);

  TrainOutcome outcome;
  const std::string last_path =
      (fs::path(models_dir(config)) / (config.model + ".last.nvck")).string();

  if (config.model == "lstm") {
    models::LstmRegressionModel model(data.mfcc_dim, data.eeg_dim);
    neural::AdamState adam(model.params(), {.learning_rate = train_config.learning_rate});
    int start_epoch = 0;
    if (fs::exists(last_path)) {
      const io::Checkpoint cp = io::load_checkpoint(last_path);
      if (cp.config_hash != hash) {
        throw std::runtime_error("cmd_train: existing checkpoint " + last_path +
                                 " was produced by a different config");
      }
      auto restored = io::lstm_from_checkpoint(
          cp, &adam, {.learning_rate = train_config.learning_rate});
      model = std::move(*restored);
      start_epoch = static_cast<int>(cp.epoch) + 1;
    } else {
      model.init(derive_seed(config.master_seed, kSeedTagInitLstm));
    }

    outcome.lstm_history = models::train_lstm_regression(
        model, adam, data, train_config, start_epoch, [&](int epoch_done) {
          io::Checkpoint cp = io::checkpoint_from_lstm(model, &adam, config.master_seed,
                                                       epoch_done, hash);
          io::attach_scaler(cp, scaler);
          io::save_checkpoint(last_path, cp);
        });

    outcome.checkpoint_path = (fs::path(models_dir(config)) / "lstm.nvck").string();
    io::Checkpoint final_cp = io::checkpoint_from_lstm(model, &adam, config.master_seed,
                                                       config.train.epochs - 1, hash);
    io::attach_scaler(final_cp, scaler);
    io::save_checkpoint(outcome.checkpoint_path, final_cp);
    return outcome;
  }

  // GAN: generator and discriminator checkpoints travel as a pair of files.
  models::Generator generator(data.mfcc_dim, data.eeg_dim);
  models::Discriminator discriminator(data.mfcc_dim, data.eeg_dim);
  const double lr_d = train_config.learning_rate_d > 0.0 ? train_config.learning_rate_d
                                                         : train_config.learning_rate;
  neural::AdamState adam_g(generator.params(), {.learning_rate = train_config.learning_rate});
  neural::AdamState adam_d(discriminator.params(), {.learning_rate = lr_d});
  const std::string last_disc_path =
      (fs::path(models_dir(config)) / "gan_disc.last.nvck").string();
  int start_epoch = 0;
  if (fs::exists(last_path) && fs::exists(last_disc_path)) {
    const io::Checkpoint cp_g = io::load_checkpoint(last_path);
    const io::Checkpoint cp_d = io::load_checkpoint(last_disc_path);
    if (cp_g.config_hash != hash || cp_d.config_hash != hash) {
      throw std::runtime_error("cmd_train: existing checkpoint pair was produced by a "
                               "different config");
    }
    auto g = io::generator_from_checkpoint(cp_g, &adam_g,
                                           {.learning_rate = train_config.learning_rate});
    auto d = io::discriminator_from_checkpoint(cp_d, &adam_d, {.learning_rate = lr_d});
    generator = std::move(*g);
    discriminator = std::move(*d);
    start_epoch = static_cast<int>(cp_g.epoch) + 1;
  } else {
    generator.init(derive_seed(config.master_seed, kSeedTagInitGen));
    discriminator.init(derive_seed(config.master_seed, kSeedTagInitDisc));
  }

  outcome.gan_history = models::train_gan(
      generator, discriminator, adam_g, adam_d, data, train_config, start_epoch,
      [&](int epoch_done) {
        io::Checkpoint cp_g = io::checkpoint_from_generator(generator, &adam_g,
                                                            config.master_seed, epoch_done,
                                                            hash);
        io::attach_scaler(cp_g, scaler);
        io::save_checkpoint(last_path, cp_g);
        io::save_checkpoint(last_disc_path,
                            io::checkpoint_from_discriminator(discriminator, &adam_d,
                                                              config.master_seed, epoch_done,
                                                              hash));
      });

  outcome.checkpoint_path = (fs::path(models_dir(config)) / "gan.nvck").string();
  outcome.discriminator_checkpoint_path =
      (fs::path(models_dir(config)) / "gan_disc.nvck").string();
  io::Checkpoint final_g = io::checkpoint_from_generator(generator, &adam_g,
                                                         config.master_seed,
                                                         config.train.epochs - 1, hash);
  io::attach_scaler(final_g, scaler);
  io::save_checkpoint(outcome.checkpoint_path, final_g);
  io::save_checkpoint(outcome.discriminator_checkpoint_path,
                      io::checkpoint_from_discriminator(discriminator, &adam_d,
                                                        config.master_seed,
                                                        config.train.epochs - 1, hash));
  return outcome;
}

std::vector<std::string> cmd_enhance(const ExperimentConfig& config,
                                     const std::string& checkpoint_path,
                                     const std::string& split) {
  validate(config);
  const synth::CorpusManifest manifest = synth::load_manifest(config.manifest_path);
  const io::Checkpoint cp = io::load_checkpoint(checkpoint_path);
  const std::string model_name = model_name_of_checkpoint(cp.kind);
  if (cp.config_hash != config_hash(config)) {
    throw std::runtime_error(
        "cmd_enhance: checkpoint/config hash mismatch (the checkpoint was trained under a "
        "different configuration)");
  }

  std::unique_ptr<models::LstmRegressionModel> lstm;
  std::unique_ptr<models::Generator> generator;
  if (cp.kind == "lstm_regression") {
    lstm = io::lstm_from_checkpoint(cp);
  } else {
    generator = io::generator_from_checkpoint(cp);
  }
  if (!io::has_scaler(cp)) {
    throw std::runtime_error("cmd_enhance: checkpoint carries no feature scaler");
  }
  const models::FeatureScaler scaler = io::scaler_from_checkpoint(cp);

  const auto utterances = manifest.split(split);
  if (utterances.empty()) {
    throw std::runtime_error("cmd_enhance: split '" + split + "' is empty");
  }
  ensure_dir(enhanced_dir(config, model_name));

  std::vector<std::string> written(utterances.size());
  parallel_for(utterances.size(), config.threads, [&](std::size_t i) {
    const synth::UtteranceRecord& u = *utterances[i];
    const UtteranceFeatures f = load_features(config, u.id);
    const Matrix mfcc_in = scaler.standardize_mfcc(f.mfcc);
    const Matrix eeg_in = scaler.standardize_eeg(f.eeg);
    const Matrix enhanced_scaled = lstm ? models::enhance(*lstm, mfcc_in, eeg_in)
                                        : models::enhance(*generator, mfcc_in, eeg_in);
    dsp::MfccSequence seq;
    seq.coeffs = scaler.restore_mfcc(enhanced_scaled);
    const dsp::Spectrogram spec = dsp::mfcc_invert(seq);
    dsp::Waveform wave = dsp::griffin_lim(spec, 60);
    // The EEG feature windows stop a few frames short of the cepstral ones,
    // so the reconstruction covers slightly less than the input; pad with
    // silence to keep the output on the input timeline.
    const std::string input_rel = u.split == "test" ? u.noisy_wav : u.clean_wav;
    const dsp::Waveform input = dsp::read_wav(manifest.resolve(input_rel));
    if (wave.samples.size() < input.samples.size()) {
      wave.samples.resize(input.samples.size(), 0.0);
    }
    const std::string path =
        (fs::path(enhanced_dir(config, model_name)) / (u.id + ".wav")).string();
    dsp::write_wav(path, wave);
    written[i] = path;
  });
  return written;
}

std::vector<metrics::MetricReport> cmd_evaluate(const ExperimentConfig& config,
                                                const std::vector<std::string>& checkpoints) {
  validate(config);
  if (checkpoints.empty()) {
    throw std::invalid_argument("cmd_evaluate: at least one checkpoint required");
  }
  const synth::CorpusManifest manifest = synth::load_manifest(config.manifest_path);
  const auto test = manifest.split("test");
  if (test.empty()) throw std::runtime_error("cmd_evaluate: manifest has no test split");
  ensure_dir(reports_dir(config));

  std::vector<metrics::MetricReport> reports;
  for (const std::string& checkpoint_path : checkpoints) {
    const io::Checkpoint cp = io::load_checkpoint(checkpoint_path);
    const std::string model_name = model_name_of_checkpoint(cp.kind);

    metrics::MetricReport report;
    report.model = model_name;
    report.pesq_configured = !config.pesq_command.empty();
    report.note =
        "synthetic corpus: clean references exist for every test utterance, so metrics "
        "cover the full test split";

    struct Row {
      bool ok = false;
      metrics::UtteranceMetrics m;
      std::string skip_reason;
    };
    std::vector<Row> rows(test.size());
    parallel_for(test.size(), config.threads, [&](std::size_t i) {
      const synth::UtteranceRecord& u = *test[i];
      Row& row = rows[i];
      const std::string enhanced_path =
          (fs::path(enhanced_dir(config, model_name)) / (u.id + ".wav")).string();
      if (!fs::exists(enhanced_path)) {
        row.skip_reason = u.id + ": missing enhanced audio " + enhanced_path;
        return;
      }
      try {
        const dsp::Waveform clean = dsp::read_wav(manifest.resolve(u.clean_wav));
        const dsp::Waveform noisy = dsp::read_wav(manifest.resolve(u.noisy_wav));
        const dsp::Waveform enhanced = dsp::read_wav(enhanced_path);
        row.m.id = u.id;
        row.m.snr_noisy = metrics::snr_mean_std(noisy);
        row.m.snr_enhanced = metrics::snr_mean_std(enhanced);
        row.m.stoi_noisy = metrics::stoi(clean, noisy);
        row.m.stoi_enhanced = metrics::stoi(clean, enhanced);
        row.m.spectral_convergence = metrics::spectral_convergence(clean, enhanced);
        if (report.pesq_configured) {
          const auto pn = metrics::pesq_external(manifest.resolve(u.clean_wav),
                                                 manifest.resolve(u.noisy_wav),
                                                 config.pesq_command);
          const auto pe = metrics::pesq_external(manifest.resolve(u.clean_wav),
                                                 enhanced_path, config.pesq_command);
          row.m.pesq_noisy = pn.score;
          row.m.pesq_enhanced = pe.score;
        }
        row.ok = true;
      } catch (const std::exception& e) {
        row.skip_reason = u.id + ": " + e.what();
      }
    });
    for (const Row& row : rows) {
      if (row.ok) {
        report.records.push_back(row.m);
      } else {
        report.skipped.push_back(row.skip_reason);
      }
    }

    metrics::write_report_files(
        report, (fs::path(reports_dir(config)) / ("report_" + model_name + ".csv")).string(),
        (fs::path(reports_dir(config)) / ("report_" + model_name + ".json")).string());
    reports.push_back(std::move(report));
  }

  if (reports.size() > 1) {
    std::ofstream os((fs::path(reports_dir(config)) / "comparison.csv").string());
    os << "model,snr_noisy,snr_enhanced,stoi_noisy,stoi_enhanced,spectral_convergence\n";
    for (const metrics::MetricReport& r : reports) {
      const metrics::MetricMeans m = r.means();
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%s,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.model.c_str(),
                    m.snr_noisy, m.snr_enhanced, m.stoi_noisy, m.stoi_enhanced,
                    m.spectral_convergence);
      os << buf;
    }
  }
  return reports;
}

}  // namespace neurovox::pipeline

// Copyright 2026 The pvq Authors. All Rights Reserved.
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

// Command-line front end: encode, decode, simulate, sweep, metrics and
// gen-corpus. Exit codes: 0 success, 1 usage error, 2 I/O error, 3 corrupt
// bitstream.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvq/codec.h"
#include "pvq/errors.h"
#include "pvq/image.h"
#include "pvq/metrics.h"
#include "pvq/simulate.h"
#include "pvq/sweep.h"
#include "pvq/synthetic.h"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kCorrupt = 3 };

const std::map<std::string, pvq::QuantizerMode> kModes = {
    {"pvq", pvq::QuantizerMode::kPvq}, {"scalar", pvq::QuantizerMode::kScalar}};

std::optional<pvq::Image> LoadReference(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return pvq::ReadImage(path);
}

const pvq::Image* AsPointer(const std::optional<pvq::Image>& image) {
  return image ? &*image : nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gain-shape PVQ image codec"};
  app.require_subcommand(1);

  std::string input, output, ref_path;
  double qg = 8.0;
  int block = 8;
  bool robust = false;
  bool no_masking = false;
  std::string mode_name = "pvq";
  double lambda = 0.0;

  auto* encode = app.add_subcommand("encode", "Encode a PGM/Y4M frame");
  encode->add_option("--input", input, "Input PGM or Y4M")->required();
  encode->add_option("--output", output, "Output bitstream")->required();
  encode->add_option("--qg", qg, "Master gain resolution Qg")
      ->required()
      ->check(CLI::Range(1.0, 4095.0));
  encode->add_option("--block", block, "Block size")
      ->check(CLI::IsMember({4, 8, 16}));
  encode->add_option("--ref", ref_path, "Reference frame");
  encode->add_flag("--robust", robust, "Derive K from the angle index only");
  encode->add_flag("--no-masking", no_masking, "Disable activity masking");
  encode->add_option("--mode", mode_name, "Quantizer")
      ->check(CLI::IsMember({"pvq", "scalar"}));
  encode->add_option("--lambda", lambda, "Rate-distortion lambda")
      ->check(CLI::NonNegativeNumber);

  auto* decode = app.add_subcommand("decode", "Decode a bitstream to PGM");
  decode->add_option("--input", input, "Input bitstream")->required();
  decode->add_option("--output", output, "Output PGM")->required();
  decode->add_option("--ref", ref_path, "Reference frame");

  int sim_n = 0, sim_k = 0;
  int64_t trials = 10000;
  uint64_t seed = 1;
  auto* simulate =
      app.add_subcommand("simulate", "Measure PVQ distortion on Laplace data");
  simulate->add_option("--n", sim_n, "Dimension")
      ->required()
      ->check(CLI::Range(2, 1 << 16));
  simulate->add_option("--k", sim_k, "Pulses")
      ->required()
      ->check(CLI::Range(1, 1 << 16));
  simulate->add_option("--trials", trials, "Trials")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "PRNG seed");

  std::string corpus, ref_policy = "none";
  std::vector<double> qgs;
  std::vector<std::string> modes;
  auto* sweep = app.add_subcommand("sweep", "Rate-distortion sweep to CSV");
  sweep->add_option("--corpus", corpus, "Directory of PGM/Y4M files")
      ->required();
  sweep->add_option("--qg", qgs, "Comma-separated Qg values")
      ->delimiter(',')
      ->check(CLI::Range(1.0, 4095.0));
  sweep->add_option("--modes", modes, "Comma-separated modes")
      ->delimiter(',')
      ->check(CLI::IsMember({"pvq", "scalar"}));
  sweep->add_option("--out", output, "CSV output path")->required();
  sweep->add_option("--block", block, "Block size")
      ->check(CLI::IsMember({4, 8, 16}));
  sweep->add_option("--ref", ref_policy, "Reference policy")
      ->check(CLI::IsMember({"none", "self"}));
  sweep->add_flag("--no-masking", no_masking, "Disable activity masking");
  sweep->add_flag("--robust", robust, "Robust K derivation");

  std::string a_path, b_path;
  auto* metrics = app.add_subcommand("metrics", "PSNR and SSIM of two frames");
  metrics->add_option("--a", a_path, "First frame")->required();
  metrics->add_option("--b", b_path, "Second frame")->required();

  std::string corpus_out;
  auto* gen = app.add_subcommand("gen-corpus", "Write the synthetic corpus");
  gen->add_option("--out", corpus_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*encode) {
      const pvq::Image frame = pvq::ReadImage(input);
      const auto reference = LoadReference(ref_path);
      pvq::EncoderConfig cfg;
      cfg.qg = qg;
      cfg.block_size = block;
      cfg.robust = robust;
      cfg.masking = !no_masking;
      cfg.mode = kModes.at(mode_name);
      cfg.lambda = lambda;
      const pvq::EncodeResult result =
          pvq::EncodeImage(frame, AsPointer(reference), cfg);
      pvq::WriteFileBytes(output, result.bitstream);
    } else if (*decode) {
      const std::vector<uint8_t> bytes = pvq::ReadFileBytes(input);
      const auto reference = LoadReference(ref_path);
      pvq::WritePgm(output, pvq::DecodeImage(bytes, AsPointer(reference)));
    } else if (*simulate) {
      const pvq::SimResult r =
          pvq::SimulatePvqDistortion(sim_n, sim_k, trials, seed);
      std::printf("%d,%d,%lld,%llu,%.9g,%.9g,%.6f\n", r.n, r.k,
                  static_cast<long long>(r.trials),
                  static_cast<unsigned long long>(r.seed), r.measured_mse,
                  r.predicted_mse, r.ratio);
    } else if (*sweep) {
      pvq::SweepOptions options;
      options.qgs = qgs;
      for (const std::string& m : modes) options.modes.push_back(kModes.at(m));
      options.reference = ref_policy == "self" ? pvq::ReferencePolicy::kSelf
                                               : pvq::ReferencePolicy::kNone;
      options.block_size = block;
      options.masking = !no_masking;
      options.robust = robust;
      const pvq::SweepResult result = pvq::RdSweepDirectory(corpus, options);
      for (const std::string& w : result.warnings) {
        std::cerr << "warning: " << w << "\n";
      }
      const std::string csv = pvq::FormatRdCsv(result.points);
      pvq::WriteFileBytes(
          output,
          std::span(reinterpret_cast<const uint8_t*>(csv.data()), csv.size()));
    } else if (*metrics) {
      const pvq::Image a = pvq::ReadImage(a_path);
      const pvq::Image b = pvq::ReadImage(b_path);
      std::printf("psnr=%.4f,ssim=%.6f\n", pvq::Psnr(a, b), pvq::Ssim(a, b));
    } else if (*gen) {
      std::filesystem::create_directories(corpus_out);
      for (const pvq::NamedImage& img : pvq::SyntheticCorpus()) {
        pvq::WritePgm(std::filesystem::path(corpus_out) / (img.name + ".pgm"),
                      img.image);
      }
    }
  } catch (const pvq::CorruptStreamError& e) {
    std::cerr << "corrupt bitstream: " << e.what() << "\n";
    return kCorrupt;
  } catch (const pvq::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

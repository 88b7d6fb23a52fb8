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

#include "pvq/sweep.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <string_view>
#include <tuple>

#include "pvq/errors.h"
#include "pvq/metrics.h"

namespace pvq {
namespace {

bool IsImageFile(const std::filesystem::path& p) {
  const std::string ext = p.extension().string();
  return ext == ".pgm" || ext == ".y4m";
}

RdPoint MeasurePoint(const NamedImage& named, QuantizerMode mode, double qg,
                     const SweepOptions& options) {
  const Image& frame = named.image;
  EncoderConfig cfg;
  cfg.qg = qg;
  cfg.block_size = options.block_size;
  cfg.masking = options.masking;
  cfg.robust = options.robust;
  cfg.mode = mode;
  cfg.lambda = options.lambda;
  const Image* reference =
      options.reference == ReferencePolicy::kSelf ? &frame : nullptr;
  const EncodeResult enc = EncodeImage(frame, reference, cfg);
  const Image decoded = DecodeImage(enc.bitstream, reference);

  RdPoint p;
  p.image = named.name;
  p.mode = mode;
  p.qg = qg;
  p.bpp = 8.0 * enc.bitstream.size() /
          (static_cast<double>(frame.width) * frame.height);
  p.psnr = Psnr(frame, decoded);
  p.ssim = Ssim(frame, decoded);
  return p;
}

}  // namespace

SweepResult RdSweep(const std::vector<NamedImage>& images,
                    const SweepOptions& options) {
  struct Job {
    size_t image;
    QuantizerMode mode;
    double qg;
  };
  std::vector<Job> jobs;
  for (size_t i = 0; i < images.size(); ++i) {
    for (QuantizerMode mode : options.modes) {
      for (double qg : options.qgs) jobs.push_back({i, mode, qg});
    }
  }

  SweepResult result;
  result.points.resize(jobs.size());
  const int count = static_cast<int>(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < count; ++j) {
    try {
      result.points[j] = MeasurePoint(images[jobs[j].image], jobs[j].mode,
                                      jobs[j].qg, options);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  const auto key = [](const RdPoint& p) {
    return std::tuple(std::string_view(p.image),
                      std::string_view(ModeName(p.mode)), p.qg);
  };
  std::stable_sort(
      result.points.begin(), result.points.end(),
      [&](const RdPoint& a, const RdPoint& b) { return key(a) < key(b); });
  return result;
}

SweepResult RdSweepDirectory(const std::filesystem::path& corpus,
                             const SweepOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(corpus, ec)) {
    throw IoError("corpus is not a directory: " + corpus.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (entry.is_regular_file() && IsImageFile(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<NamedImage> images;
  std::vector<std::string> warnings;
  for (const auto& file : files) {
    try {
      images.push_back({file.stem().string(), ReadImage(file)});
    } catch (const IoError& e) {
      warnings.push_back("skipped " + file.string() + ": " + e.what());
    }
  }
  SweepResult result = RdSweep(images, options);
  result.warnings = std::move(warnings);
  return result;
}

std::string FormatRdCsv(const std::vector<RdPoint>& points) {
  std::string out = "image,mode,qg,bpp,psnr,ssim\n";
  char line[256];
  for (const RdPoint& p : points) {
    std::snprintf(line, sizeof(line), "%s,%s,%g,%.6f,%.4f,%.6f\n",
                  p.image.c_str(), ModeName(p.mode), p.qg, p.bpp, p.psnr,
                  p.ssim);
    out += line;
  }
  return out;
}

double MeanGainStep(const StreamHeader& header,
                    const std::vector<BlockTrace>& blocks) {
  const MaskingParams params = header.masking_params();
  double sum = 0;
  int count = 0;
  for (const BlockTrace& block : blocks) {
    for (const BandRecord& band : block.bands) {
      if (!band.vector_quantized || band.gamma <= 0) continue;
      sum += GainStep(band.gamma, params);
      ++count;
    }
  }
  return count > 0 ? sum / count : 0.0;
}

}  // namespace pvq

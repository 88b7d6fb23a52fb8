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

#ifndef PVQ_SYNTHETIC_H_
#define PVQ_SYNTHETIC_H_

#include <string>
#include <vector>

#include "pvq/image.h"

namespace pvq {

struct NamedImage {
  std::string name;
  Image image;
};

// Eight small deterministic test frames: low-contrast gradient, radial
// gradient, high-contrast texture, checkerboard, shapes, white noise,
// smoothed noise and diagonal stripes (the last has a size that is not a
// multiple of 8 or 16).
std::vector<NamedImage> SyntheticCorpus();

}  // namespace pvq

#endif  // PVQ_SYNTHETIC_H_

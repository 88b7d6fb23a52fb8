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

#ifndef PVQ_TRANSFORM_H_
#define PVQ_TRANSFORM_H_

#include <span>
#include <vector>

namespace pvq {

// Orthonormal separable 2-D DCT-II of a size x size block, row-major.
// Supported sizes are 4, 8 and 16; others throw std::invalid_argument.
void ForwardDct2(int size, std::span<const double> block,
                 std::span<double> coeffs);
void InverseDct2(int size, std::span<const double> coeffs,
                 std::span<double> block);

std::vector<double> ForwardDct2(int size, std::span<const double> block);
std::vector<double> InverseDct2(int size, std::span<const double> coeffs);

}  // namespace pvq

#endif  // PVQ_TRANSFORM_H_

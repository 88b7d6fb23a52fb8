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

#ifndef PVQ_ERRORS_H_
#define PVQ_ERRORS_H_

#include <stdexcept>

namespace pvq {

// File missing, unreadable or not in a supported format.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bitstream fails validation: bad magic, truncation, or undecodable payload.
class CorruptStreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pvq

#endif  // PVQ_ERRORS_H_

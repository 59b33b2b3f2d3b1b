// Copyright 2026 The privnet-cpd Authors.
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

#ifndef PRIVNET_SEQUENCE_IO_H_
#define PRIVNET_SEQUENCE_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privnet/network_sequence.h"

namespace privnet {

// On-disk layout: a directory holding manifest.json (length, n1, n2,
// domain, scale, symmetric) and one gzip-compressed dense CSV per time step
// named frame_000001.csv.gz, frame_000002.csv.gz, ...
absl::Status WriteSequence(const NetworkSequence& seq, const std::string& dir);
absl::StatusOr<NetworkSequence> ReadSequence(const std::string& dir);

}  // namespace privnet

#endif  // PRIVNET_SEQUENCE_IO_H_

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

#ifndef PRIVNET_SPEC_IO_H_
#define PRIVNET_SPEC_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privnet/model_spec.h"
#include "privnet/toml_lite.h"

namespace privnet {

// Model spec config, e.g.
//
//   T = 100
//   n1 = 50
//   n2 = 50
//   symmetric = true
//   dependence = "independent"
//   change_points = [50]
//   theta = [0.1, "post.csv"]
//
// Each theta entry is a constant probability or the path of a dense CSV
// matrix, resolved relative to `base_dir`. The keys may also live under a
// table named by `prefix` (e.g. "model").
absl::StatusOr<ModelSpec> ModelSpecFromToml(const TomlDocument& doc,
                                            const std::string& base_dir,
                                            const std::string& prefix = "");
absl::StatusOr<ModelSpec> LoadModelSpec(const std::string& path);

// Writes the spec as a config at `path`; non-constant segment means are
// written next to it as theta_<k>.csv.
absl::Status WriteModelSpec(const ModelSpec& spec, const std::string& path);

absl::StatusOr<ProbMatrix> ReadMatrixCsv(const std::string& path,
                                         bool symmetric);
absl::Status WriteMatrixCsv(const ProbMatrix& matrix, const std::string& path);

}  // namespace privnet

#endif  // PRIVNET_SPEC_IO_H_

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

#ifndef PRIVNET_TOML_LITE_H_
#define PRIVNET_TOML_LITE_H_

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include "absl/strings/string_view.h"
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace privnet {

using TomlScalar = std::variant<bool, int64_t, double, std::string>;
using TomlArray = std::vector<TomlScalar>;
using TomlValue = std::variant<bool, int64_t, double, std::string, TomlArray>;

// Reader for the TOML subset used by model and experiment configs:
// [table] headers, dotted and bare keys, strings, integers, floats,
// booleans and (possibly multi-line) arrays of scalars. Values are stored
// under their full dotted key path, e.g. "grid.alpha".
class TomlDocument {
 public:
  static absl::StatusOr<TomlDocument> Parse(absl::string_view text);
  static absl::StatusOr<TomlDocument> Load(const std::string& path);

  bool Has(absl::string_view key) const;
  const TomlValue* Find(absl::string_view key) const;

  // Typed getters. Errors name the key path. GetDouble accepts integers.
  absl::StatusOr<int64_t> GetInt(absl::string_view key) const;
  absl::StatusOr<double> GetDouble(absl::string_view key) const;
  absl::StatusOr<std::string> GetString(absl::string_view key) const;
  absl::StatusOr<bool> GetBool(absl::string_view key) const;
  absl::StatusOr<std::vector<int64_t>> GetIntArray(absl::string_view key) const;
  absl::StatusOr<std::vector<double>> GetDoubleArray(
      absl::string_view key) const;
  absl::StatusOr<std::vector<std::string>> GetStringArray(
      absl::string_view key) const;
  absl::StatusOr<TomlArray> GetArray(absl::string_view key) const;

  // Rejects any key not in `allowed`, naming the first offender.
  absl::Status CheckKeys(std::initializer_list<absl::string_view> allowed) const;

  const std::map<std::string, TomlValue, std::less<>>& values() const {
    return values_;
  }

 private:
  std::map<std::string, TomlValue, std::less<>> values_;
};

}  // namespace privnet

#endif  // PRIVNET_TOML_LITE_H_

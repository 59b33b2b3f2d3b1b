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

#include "privnet/spec_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/numbers.h"
#include "absl/strings/strip.h"
#include "privnet/status_macros.h"

namespace privnet {
namespace {

namespace fs = std::filesystem;

absl::Status Prefixed(absl::string_view key, const absl::Status& status) {
  return absl::Status(status.code(), absl::StrCat(key, ": ", status.message()));
}

}  // namespace

absl::StatusOr<ProbMatrix> ReadMatrixCsv(const std::string& path,
                                         bool symmetric) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open matrix '", path, "'"));
  }
  std::vector<double> values;
  int64_t rows = 0;
  int64_t cols = -1;
  std::string line;
  while (std::getline(in, line)) {
    absl::string_view view = absl::StripAsciiWhitespace(line);
    if (view.empty()) continue;
    int64_t count = 0;
    for (absl::string_view field : absl::StrSplit(view, ',')) {
      double v = 0.0;
      if (!absl::SimpleAtod(absl::StripAsciiWhitespace(field), &v)) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "%s: row %d has non-numeric field '%s'", path, rows + 1, field));
      }
      values.push_back(v);
      ++count;
    }
    if (cols >= 0 && count != cols) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "%s: row %d has %d fields, expected %d", path, rows + 1, count, cols));
    }
    cols = count;
    ++rows;
  }
  if (rows == 0) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": empty matrix"));
  }
  auto matrix = ProbMatrix::Create(rows, cols, std::move(values), symmetric);
  if (!matrix.ok()) return Prefixed(path, matrix.status());
  return matrix;
}

absl::Status WriteMatrixCsv(const ProbMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write matrix '", path, "'"));
  }
  for (int64_t i = 0; i < matrix.rows(); ++i) {
    for (int64_t j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      out << absl::StrFormat("%.17g", matrix(i, j));
    }
    out << '\n';
  }
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

absl::StatusOr<ModelSpec> ModelSpecFromToml(const TomlDocument& doc,
                                            const std::string& base_dir,
                                            const std::string& prefix) {
  const auto key = [&](absl::string_view name) {
    return prefix.empty() ? std::string(name) : absl::StrCat(prefix, ".", name);
  };
  ModelSpec spec;
  PRIVNET_ASSIGN_OR_RETURN(spec.horizon, doc.GetInt(key("T")));
  PRIVNET_ASSIGN_OR_RETURN(spec.n1, doc.GetInt(key("n1")));
  PRIVNET_ASSIGN_OR_RETURN(spec.n2, doc.GetInt(key("n2")));
  if (doc.Has(key("symmetric"))) {
    PRIVNET_ASSIGN_OR_RETURN(spec.symmetric, doc.GetBool(key("symmetric")));
  }
  if (doc.Has(key("dependence"))) {
    PRIVNET_ASSIGN_OR_RETURN(std::string name, doc.GetString(key("dependence")));
    auto dependence = ParseDependence(name);
    if (!dependence.ok()) return Prefixed(key("dependence"), dependence.status());
    spec.dependence = *dependence;
  }
  if (doc.Has(key("change_points"))) {
    PRIVNET_ASSIGN_OR_RETURN(spec.change_points,
                             doc.GetIntArray(key("change_points")));
  }
  if (spec.n1 < 1 || spec.n2 < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat(key(spec.n1 < 1 ? "n1" : "n2"), ": must be positive"));
  }
  PRIVNET_ASSIGN_OR_RETURN(TomlArray thetas, doc.GetArray(key("theta")));
  for (size_t k = 0; k < thetas.size(); ++k) {
    const std::string item_key = absl::StrCat(key("theta"), "[", k, "]");
    absl::StatusOr<ProbMatrix> theta;
    if (const auto* path = std::get_if<std::string>(&thetas[k])) {
      fs::path p(*path);
      if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
      theta = ReadMatrixCsv(p.string(), spec.symmetric);
    } else {
      double value = 0.0;
      if (const auto* i = std::get_if<int64_t>(&thetas[k])) {
        value = static_cast<double>(*i);
      } else if (const auto* d = std::get_if<double>(&thetas[k])) {
        value = *d;
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat(item_key, ": expected a probability or a CSV path"));
      }
      theta = ProbMatrix::Constant(spec.n1, spec.n2, value, spec.symmetric);
    }
    if (!theta.ok()) return Prefixed(item_key, theta.status());
    spec.segment_thetas.push_back(std::move(*theta));
  }
  const auto params = ValidateSpec(spec);
  if (!params.ok()) return Prefixed(prefix.empty() ? "spec" : prefix, params.status());
  return spec;
}

absl::StatusOr<ModelSpec> LoadModelSpec(const std::string& path) {
  PRIVNET_ASSIGN_OR_RETURN(TomlDocument doc, TomlDocument::Load(path));
  PRIVNET_RETURN_IF_ERROR(doc.CheckKeys({"T", "n1", "n2", "symmetric",
                                         "dependence", "change_points",
                                         "theta"}));
  return ModelSpecFromToml(doc, fs::path(path).parent_path().string());
}

absl::Status WriteModelSpec(const ModelSpec& spec, const std::string& path) {
  PRIVNET_RETURN_IF_ERROR(ValidateSpec(spec).status());
  const fs::path dir = fs::path(path).parent_path();
  std::vector<std::string> theta_items;
  for (size_t k = 0; k < spec.segment_thetas.size(); ++k) {
    double constant = 0.0;
    if (spec.segment_thetas[k].IsConstant(&constant)) {
      theta_items.push_back(absl::StrFormat("%.17g", constant));
    } else {
      const std::string name = absl::StrCat("theta_", k, ".csv");
      PRIVNET_RETURN_IF_ERROR(
          WriteMatrixCsv(spec.segment_thetas[k], (dir / name).string()));
      theta_items.push_back(absl::StrCat("\"", name, "\""));
    }
  }
  std::ofstream out(path);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write spec '", path, "'"));
  }
  out << "T = " << spec.horizon << "\n";
  out << "n1 = " << spec.n1 << "\n";
  out << "n2 = " << spec.n2 << "\n";
  out << "symmetric = " << (spec.symmetric ? "true" : "false") << "\n";
  out << "dependence = \"" << DependenceName(spec.dependence) << "\"\n";
  out << "change_points = [" << absl::StrJoin(spec.change_points, ", ")
      << "]\n";
  out << "theta = [" << absl::StrJoin(theta_items, ", ") << "]\n";
  return out ? absl::OkStatus()
             : absl::DataLossError(absl::StrCat("write failed: ", path));
}

}  // namespace privnet

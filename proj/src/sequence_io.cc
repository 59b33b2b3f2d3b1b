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

#include "privnet/sequence_io.h"

#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"

namespace privnet {
namespace {

namespace fs = std::filesystem;

std::string FrameName(int64_t t) {
  return absl::StrFormat("frame_%06d.csv.gz", t);
}

absl::StatusOr<std::string> ReadGzip(const std::string& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  std::string out;
  char buffer[1 << 14];
  int n = 0;
  while ((n = gzread(file, buffer, sizeof(buffer))) > 0) out.append(buffer, n);
  const bool failed = n < 0;
  gzclose(file);
  if (failed) return absl::DataLossError(absl::StrCat("corrupt gzip '", path, "'"));
  return out;
}

}  // namespace

absl::Status WriteSequence(const NetworkSequence& seq, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create directory '", dir, "': ", ec.message()));
  }
  nlohmann::json manifest = {
      {"length", seq.length()},
      {"n1", seq.rows()},
      {"n2", seq.cols()},
      {"domain", std::string(EntryDomainName(seq.domain()))},
      {"scale", seq.scale()},
      {"symmetric", seq.symmetric()},
  };
  {
    std::ofstream out(fs::path(dir) / "manifest.json");
    if (!out) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot write manifest in '", dir, "'"));
    }
    out << manifest.dump(2) << "\n";
  }
  const std::string scale = absl::StrFormat("%.17g", seq.scale());
  const std::string neg_scale = absl::StrFormat("%.17g", -seq.scale());
  for (int64_t t = 1; t <= seq.length(); ++t) {
    std::string text;
    const auto frame = seq.frame(t);
    for (int64_t i = 0; i < seq.rows(); ++i) {
      for (int64_t j = 0; j < seq.cols(); ++j) {
        if (j > 0) text.push_back(',');
        const int8_t c = frame[i * seq.cols() + j];
        if (seq.domain() == EntryDomain::kBinary01) {
          text.push_back(c == 1 ? '1' : '0');
        } else {
          text += c > 0 ? scale : neg_scale;
        }
      }
      text.push_back('\n');
    }
    const std::string path = (fs::path(dir) / FrameName(t)).string();
    gzFile file = gzopen(path.c_str(), "wb");
    if (file == nullptr) {
      return absl::PermissionDeniedError(absl::StrCat("cannot write '", path, "'"));
    }
    const int written = gzwrite(file, text.data(), static_cast<unsigned>(text.size()));
    gzclose(file);
    if (written != static_cast<int>(text.size())) {
      return absl::DataLossError(absl::StrCat("short write to '", path, "'"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<NetworkSequence> ReadSequence(const std::string& dir) {
  const fs::path manifest_path = fs::path(dir) / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("no manifest.json in '", dir, "'"));
  }
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(manifest_path.string(), ": ", e.what()));
  }
  int64_t length = 0, rows = 0, cols = 0;
  std::string domain;
  double scale = 1.0;
  bool symmetric = false;
  try {
    length = manifest.at("length").get<int64_t>();
    rows = manifest.at("n1").get<int64_t>();
    cols = manifest.at("n2").get<int64_t>();
    domain = manifest.at("domain").get<std::string>();
    scale = manifest.at("scale").get<double>();
    symmetric = manifest.at("symmetric").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat(manifest_path.string(), ": ", e.what()));
  }
  if (length < 1 || rows < 1 || cols < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat(manifest_path.string(), ": non-positive shape"));
  }
  NetworkSequence seq;
  if (domain == EntryDomainName(EntryDomain::kBinary01)) {
    seq = NetworkSequence::Binary(length, rows, cols, symmetric);
  } else if (domain == EntryDomainName(EntryDomain::kPlusMinusB)) {
    if (!(scale > 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat(manifest_path.string(), ": scale must be positive"));
    }
    seq = NetworkSequence::PlusMinus(length, rows, cols, scale);
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        manifest_path.string(), ": unknown domain '", domain, "'"));
  }
  for (int64_t t = 1; t <= length; ++t) {
    const std::string path = (fs::path(dir) / FrameName(t)).string();
    auto text = ReadGzip(path);
    if (!text.ok()) return text.status();
    auto frame = seq.mutable_frame(t);
    int64_t i = 0;
    for (absl::string_view line : absl::StrSplit(*text, '\n', absl::SkipEmpty())) {
      if (i >= rows) {
        return absl::InvalidArgumentError(absl::StrCat(path, ": too many rows"));
      }
      int64_t j = 0;
      for (absl::string_view field : absl::StrSplit(line, ',')) {
        double v = 0.0;
        if (j >= cols ||
            !absl::SimpleAtod(absl::StripAsciiWhitespace(field), &v)) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "%s: bad field at row %d column %d", path, i + 1, j + 1));
        }
        int8_t code = 0;
        if (seq.domain() == EntryDomain::kBinary01) {
          if (v != 0.0 && v != 1.0) {
            return absl::InvalidArgumentError(absl::StrFormat(
                "%s: entry (%d,%d) = %g is not binary", path, i + 1, j + 1, v));
          }
          code = v == 1.0 ? 1 : 0;
        } else {
          if (v != scale && v != -scale) {
            return absl::InvalidArgumentError(absl::StrFormat(
                "%s: entry (%d,%d) = %g is not +-%g", path, i + 1, j + 1, v,
                scale));
          }
          code = v > 0 ? 1 : -1;
        }
        frame[i * cols + j] = code;
        ++j;
      }
      if (j != cols) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "%s: row %d has %d fields, expected %d", path, i + 1, j, cols));
      }
      ++i;
    }
    if (i != rows) {
      return absl::InvalidArgumentError(
          absl::StrFormat("%s: %d rows, expected %d", path, i, rows));
    }
  }
  const absl::Status invariants = seq.CheckInvariants();
  if (!invariants.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(dir, ": ", invariants.message()));
  }
  return seq;
}

}  // namespace privnet

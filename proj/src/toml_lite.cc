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

#include "privnet/toml_lite.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace privnet {
namespace {

class Parser {
 public:
  explicit Parser(absl::string_view text) : text_(text) {}

  absl::Status Run(std::map<std::string, TomlValue, std::less<>>& out) {
    std::string table;
    while (true) {
      SkipBlank();
      if (AtEnd()) return absl::OkStatus();
      if (Peek() == '[') {
        ++pos_;
        if (!AtEnd() && Peek() == '[') {
          return Error("arrays of tables are not supported");
        }
        auto key = ParseKey();
        if (!key.ok()) return key.status();
        SkipSpaces();
        if (!Consume(']')) return Error("expected ']' after table name");
        table = *key;
        if (!EndOfLine()) return Error("unexpected text after table header");
        continue;
      }
      auto key = ParseKey();
      if (!key.ok()) return key.status();
      SkipSpaces();
      if (!Consume('=')) return Error("expected '=' after key");
      SkipSpaces();
      auto value = ParseValue();
      if (!value.ok()) return value.status();
      const std::string full = table.empty() ? *key : table + "." + *key;
      if (out.count(full) > 0) {
        return Error(absl::StrCat("duplicate key '", full, "'"));
      }
      out.emplace(full, std::move(*value));
      if (!EndOfLine()) return Error("unexpected text after value");
    }
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool Consume(char c) {
    if (!AtEnd() && Peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int Line() const {
    int line = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line;
    }
    return line;
  }

  absl::Status Error(absl::string_view message) const {
    return absl::InvalidArgumentError(
        absl::StrFormat("toml line %d: %s", Line(), message));
  }

  void SkipSpaces() {
    while (!AtEnd() && (Peek() == ' ' || Peek() == '\t')) ++pos_;
  }

  void SkipComment() {
    if (!AtEnd() && Peek() == '#') {
      while (!AtEnd() && Peek() != '\n') ++pos_;
    }
  }

  // Whitespace, newlines and comments.
  void SkipBlank() {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos_;
      } else if (c == '#') {
        SkipComment();
      } else {
        break;
      }
    }
  }

  bool EndOfLine() {
    SkipSpaces();
    SkipComment();
    if (AtEnd()) return true;
    if (Peek() == '\r') ++pos_;
    return Consume('\n');
  }

  absl::StatusOr<std::string> ParseKey() {
    std::string key;
    while (true) {
      SkipSpaces();
      std::string part;
      if (!AtEnd() && (Peek() == '"' || Peek() == '\'')) {
        auto s = ParseString();
        if (!s.ok()) return s.status();
        part = *s;
      } else {
        while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                            Peek() == '_' || Peek() == '-')) {
          part.push_back(text_[pos_++]);
        }
        if (part.empty()) return Error("expected a key");
      }
      key += part;
      SkipSpaces();
      if (!Consume('.')) break;
      key.push_back('.');
    }
    return key;
  }

  absl::StatusOr<std::string> ParseString() {
    const char quote = text_[pos_++];
    std::string out;
    while (true) {
      if (AtEnd() || Peek() == '\n') return Error("unterminated string");
      const char c = text_[pos_++];
      if (c == quote) break;
      if (c == '\\' && quote == '"') {
        if (AtEnd()) return Error("unterminated escape");
        const char e = text_[pos_++];
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          default:
            return Error(absl::StrCat("unsupported escape '\\", std::string(1, e), "'"));
        }
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  absl::StatusOr<TomlScalar> ParseScalar() {
    if (AtEnd()) return Error("expected a value");
    const char c = Peek();
    if (c == '"' || c == '\'') {
      auto s = ParseString();
      if (!s.ok()) return s.status();
      return TomlScalar(*s);
    }
    std::string token;
    while (!AtEnd()) {
      const char d = Peek();
      if (std::isalnum(static_cast<unsigned char>(d)) || d == '+' || d == '-' ||
          d == '.' || d == '_') {
        token.push_back(d);
        ++pos_;
      } else {
        break;
      }
    }
    if (token.empty()) return Error("expected a value");
    if (token == "true") return TomlScalar(true);
    if (token == "false") return TomlScalar(false);
    std::string digits;
    for (char d : token) {
      if (d != '_') digits.push_back(d);
    }
    if (digits == "inf" || digits == "+inf") {
      return TomlScalar(std::numeric_limits<double>::infinity());
    }
    if (digits == "-inf") {
      return TomlScalar(-std::numeric_limits<double>::infinity());
    }
    if (digits == "nan" || digits == "+nan" || digits == "-nan") {
      return TomlScalar(std::numeric_limits<double>::quiet_NaN());
    }
    const bool is_float = digits.find_first_of(".eE") != std::string::npos;
    size_t used = 0;
    try {
      if (is_float) {
        const double v = std::stod(digits, &used);
        if (used == digits.size()) return TomlScalar(v);
      } else {
        const long long v = std::stoll(digits, &used);
        if (used == digits.size()) return TomlScalar(static_cast<int64_t>(v));
      }
    } catch (const std::exception&) {
    }
    return Error(absl::StrCat("invalid value '", token, "'"));
  }

  absl::StatusOr<TomlValue> ParseValue() {
    if (!AtEnd() && Peek() == '[') {
      ++pos_;
      TomlArray array;
      while (true) {
        SkipBlank();
        if (Consume(']')) break;
        if (!AtEnd() && Peek() == '[') {
          return Error("nested arrays are not supported");
        }
        auto item = ParseScalar();
        if (!item.ok()) return item.status();
        array.push_back(std::move(*item));
        SkipBlank();
        if (Consume(',')) continue;
        SkipBlank();
        if (Consume(']')) break;
        return Error("expected ',' or ']' in array");
      }
      return TomlValue(std::move(array));
    }
    auto scalar = ParseScalar();
    if (!scalar.ok()) return scalar.status();
    return std::visit([](auto&& v) { return TomlValue(v); }, *scalar);
  }

  absl::string_view text_;
  size_t pos_ = 0;
};

absl::Status TypeError(absl::string_view key, absl::string_view expected) {
  return absl::InvalidArgumentError(
      absl::StrCat(key, ": expected ", expected));
}

absl::StatusOr<double> ScalarToDouble(absl::string_view key,
                                      const TomlScalar& s) {
  if (const auto* i = std::get_if<int64_t>(&s)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&s)) return *d;
  return TypeError(key, "a number");
}

}  // namespace

absl::StatusOr<TomlDocument> TomlDocument::Parse(absl::string_view text) {
  TomlDocument doc;
  Parser parser(text);
  const absl::Status status = parser.Run(doc.values_);
  if (!status.ok()) return status;
  return doc;
}

absl::StatusOr<TomlDocument> TomlDocument::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open config '", path, "'"));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

bool TomlDocument::Has(absl::string_view key) const {
  return values_.find(key) != values_.end();
}

const TomlValue* TomlDocument::Find(absl::string_view key) const {
  const auto it = values_.find(key);
  return it == values_.end() ? nullptr : &it->second;
}

absl::StatusOr<int64_t> TomlDocument::GetInt(absl::string_view key) const {
  const TomlValue* v = Find(key);
  if (v == nullptr) return absl::InvalidArgumentError(absl::StrCat(key, ": missing"));
  if (const auto* i = std::get_if<int64_t>(v)) return *i;
  return TypeError(key, "an integer");
}

absl::StatusOr<double> TomlDocument::GetDouble(absl::string_view key) const {
  const TomlValue* v = Find(key);
  if (v == nullptr) return absl::InvalidArgumentError(absl::StrCat(key, ": missing"));
  if (const auto* i = std::get_if<int64_t>(v)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(v)) return *d;
  return TypeError(key, "a number");
}

absl::StatusOr<std::string> TomlDocument::GetString(
    absl::string_view key) const {
  const TomlValue* v = Find(key);
  if (v == nullptr) return absl::InvalidArgumentError(absl::StrCat(key, ": missing"));
  if (const auto* s = std::get_if<std::string>(v)) return *s;
  return TypeError(key, "a string");
}

absl::StatusOr<bool> TomlDocument::GetBool(absl::string_view key) const {
  const TomlValue* v = Find(key);
  if (v == nullptr) return absl::InvalidArgumentError(absl::StrCat(key, ": missing"));
  if (const auto* b = std::get_if<bool>(v)) return *b;
  return TypeError(key, "a boolean");
}

absl::StatusOr<TomlArray> TomlDocument::GetArray(absl::string_view key) const {
  const TomlValue* v = Find(key);
  if (v == nullptr) return absl::InvalidArgumentError(absl::StrCat(key, ": missing"));
  if (const auto* a = std::get_if<TomlArray>(v)) return *a;
  return TypeError(key, "an array");
}

absl::StatusOr<std::vector<int64_t>> TomlDocument::GetIntArray(
    absl::string_view key) const {
  auto array = GetArray(key);
  if (!array.ok()) return array.status();
  std::vector<int64_t> out;
  for (size_t k = 0; k < array->size(); ++k) {
    const auto* i = std::get_if<int64_t>(&(*array)[k]);
    if (i == nullptr) {
      return TypeError(absl::StrCat(key, "[", k, "]"), "an integer");
    }
    out.push_back(*i);
  }
  return out;
}

absl::StatusOr<std::vector<double>> TomlDocument::GetDoubleArray(
    absl::string_view key) const {
  auto array = GetArray(key);
  if (!array.ok()) return array.status();
  std::vector<double> out;
  for (size_t k = 0; k < array->size(); ++k) {
    auto d = ScalarToDouble(absl::StrCat(key, "[", k, "]"), (*array)[k]);
    if (!d.ok()) return d.status();
    out.push_back(*d);
  }
  return out;
}

absl::StatusOr<std::vector<std::string>> TomlDocument::GetStringArray(
    absl::string_view key) const {
  auto array = GetArray(key);
  if (!array.ok()) return array.status();
  std::vector<std::string> out;
  for (size_t k = 0; k < array->size(); ++k) {
    const auto* s = std::get_if<std::string>(&(*array)[k]);
    if (s == nullptr) {
      return TypeError(absl::StrCat(key, "[", k, "]"), "a string");
    }
    out.push_back(*s);
  }
  return out;
}

absl::Status TomlDocument::CheckKeys(
    std::initializer_list<absl::string_view> allowed) const {
  for (const auto& [key, value] : values_) {
    bool known = false;
    for (absl::string_view a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      return absl::InvalidArgumentError(absl::StrCat(key, ": unknown key"));
    }
  }
  return absl::OkStatus();
}

}  // namespace privnet

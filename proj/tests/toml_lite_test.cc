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

#include <cmath>

#include "gtest/gtest.h"

namespace privnet {
namespace {

TEST(TomlDocumentTest, ParsesTablesAndScalars) {
  auto doc = TomlDocument::Parse(R"(
seed = 7  # master seed
[model]
n1 = 50
theta_pre = 0.1
name = "fig \"1\""
[grid]
alpha = [1.0, 0.5,
         0.1]
scenarios = ["none", "edge"]
[detector.tau]
edge = "paper-edge"
flag = true
)");
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_EQ(*doc->GetInt("seed"), 7);
  EXPECT_EQ(*doc->GetInt("model.n1"), 50);
  EXPECT_DOUBLE_EQ(*doc->GetDouble("model.theta_pre"), 0.1);
  EXPECT_DOUBLE_EQ(*doc->GetDouble("model.n1"), 50.0);
  EXPECT_EQ(*doc->GetString("model.name"), "fig \"1\"");
  EXPECT_EQ(*doc->GetDoubleArray("grid.alpha"),
            (std::vector<double>{1.0, 0.5, 0.1}));
  EXPECT_EQ(*doc->GetStringArray("grid.scenarios"),
            (std::vector<std::string>{"none", "edge"}));
  EXPECT_EQ(*doc->GetString("detector.tau.edge"), "paper-edge");
  EXPECT_TRUE(*doc->GetBool("detector.tau.flag"));
  EXPECT_FALSE(doc->Has("model.n2"));
}

TEST(TomlDocumentTest, ParsesSpecialFloats) {
  auto doc = TomlDocument::Parse("a = inf\nb = -inf\nc = 1e-3\n");
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_TRUE(std::isinf(*doc->GetDouble("a")));
  EXPECT_LT(*doc->GetDouble("b"), 0.0);
  EXPECT_DOUBLE_EQ(*doc->GetDouble("c"), 1e-3);
}

TEST(TomlDocumentTest, TypeErrorsNameTheKey) {
  auto doc = TomlDocument::Parse("[model]\nn1 = \"fifty\"\n");
  ASSERT_TRUE(doc.ok());
  auto n1 = doc->GetInt("model.n1");
  ASSERT_FALSE(n1.ok());
  EXPECT_NE(n1.status().message().find("model.n1"), absl::string_view::npos);
  auto missing = doc->GetInt("model.n2");
  ASSERT_FALSE(missing.ok());
  EXPECT_NE(missing.status().message().find("model.n2"),
            absl::string_view::npos);
}

TEST(TomlDocumentTest, RejectsMalformedInput) {
  EXPECT_FALSE(TomlDocument::Parse("a = \n").ok());
  EXPECT_FALSE(TomlDocument::Parse("a = 1\na = 2\n").ok());
  EXPECT_FALSE(TomlDocument::Parse("[t\n").ok());
  EXPECT_FALSE(TomlDocument::Parse("a = [1, [2]]\n").ok());
  EXPECT_FALSE(TomlDocument::Parse("a = \"open\n").ok());
}

TEST(TomlDocumentTest, CheckKeysNamesUnknownKey) {
  auto doc = TomlDocument::Parse("[grid]\ndelta = [1]\ndelat = [2]\n");
  ASSERT_TRUE(doc.ok());
  absl::Status st = doc->CheckKeys({"grid.delta"});
  ASSERT_FALSE(st.ok());
  EXPECT_NE(st.message().find("grid.delat"), absl::string_view::npos);
  EXPECT_TRUE(doc->CheckKeys({"grid.delta", "grid.delat"}).ok());
}

}  // namespace
}  // namespace privnet

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

#ifndef PRIVNET_STATUS_MACROS_H_
#define PRIVNET_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define PRIVNET_CONCAT_INNER_(a, b) a##b
#define PRIVNET_CONCAT_(a, b) PRIVNET_CONCAT_INNER_(a, b)

#define PRIVNET_RETURN_IF_ERROR(expr)        \
  do {                                       \
    const absl::Status privnet_status_ = (expr); \
    if (!privnet_status_.ok()) return privnet_status_; \
  } while (0)

#define PRIVNET_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                  \
  if (!tmp.ok()) return tmp.status();                  \
  lhs = std::move(tmp).value()

#define PRIVNET_ASSIGN_OR_RETURN(lhs, rexpr) \
  PRIVNET_ASSIGN_OR_RETURN_IMPL_(            \
      PRIVNET_CONCAT_(privnet_statusor_, __LINE__), lhs, rexpr)

#endif  // PRIVNET_STATUS_MACROS_H_

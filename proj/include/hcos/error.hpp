// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hcos {

enum class ErrorCode {
  invalid_argument,
  domain,
  dimension_mismatch,
  degenerate,
  parse,
  config,
  io,
};

/// Library exception. Every failure raised by the C++ core carries a code that
/// the C API maps one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hcos

// Copyright 2026 The spinshift authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace spinshift {

// Error categories map 1:1 onto CLI exit codes: 2 parse, 3 validation,
// 4 numeric. ParseError covers malformed files; ValidationError covers
// well-formed but inadmissible inputs (bad preconditions, missing coverage);
// NumericError covers runtime numerical failures (zero denominators,
// enumeration budget overflow).
class Error : public std::runtime_error {
public:
  Error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

private:
  int exit_code_;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg, 2) {}
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg) : Error(msg, 3) {}
};

class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg) : Error(msg, 4) {}
};

} // namespace spinshift

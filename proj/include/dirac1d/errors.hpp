// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dirac1d {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation outside the admissible domain (e.g. x <= 0 with a Coulomb term).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Invalid run configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Component recovery requested at E = -m (from upper) or E = +m (from lower),
/// where the first-order relation degenerates; use the isolated construction.
class ThresholdEnergyError : public Error {
 public:
  explicit ThresholdEnergyError(const std::string& what) : Error(what) {}
};

class ZeroSpinorError : public Error {
 public:
  explicit ZeroSpinorError(const std::string& what) : Error(what) {}
};

class GridTooCoarseError : public Error {
 public:
  explicit GridTooCoarseError(const std::string& what) : Error(what) {}
};

/// Successive grids disagree beyond tolerance (CLI exit code 3).
class NonConvergedError : public Error {
 public:
  explicit NonConvergedError(const std::string& what) : Error(what) {}
};

class NotPurePseudoscalarError : public Error {
 public:
  explicit NotPurePseudoscalarError(const std::string& what) : Error(what) {}
};

class DivergentIntegralError : public Error {
 public:
  explicit DivergentIntegralError(const std::string& what) : Error(what) {}
};

class NotNormalizableError : public Error {
 public:
  explicit NotNormalizableError(const std::string& what) : Error(what) {}
};

}  // namespace dirac1d

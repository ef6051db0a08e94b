// SPDX-License-Identifier: Apache-2.0
//
// csit-dof: link-level simulator and DoF outer-bound toolkit for MISO
// broadcast channels with intermittent perfect CSIT
// Copyright (C) 2026 the csit-dof authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CSITDOF_ERRORS_HPP
#define CSITDOF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace csitdof {

/// Matrix (or constraint subsystem) too ill-conditioned to invert.
class SingularMatrixError : public std::runtime_error {
  public:
    explicit SingularMatrixError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Schedule length incompatible with a generator's block structure.
class BadLengthError : public std::invalid_argument {
  public:
    explicit BadLengthError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Malformed schedule file (bad character, ragged rows).
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Schedule file contained no rows or no slots.
class EmptyScheduleError : public std::runtime_error {
  public:
    explicit EmptyScheduleError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Too few (or coincident) SNR points for a slope fit.
class DegenerateGridError : public std::invalid_argument {
  public:
    explicit DegenerateGridError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Linear program has no feasible vertex.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Invalid experiment configuration.
class ConfigError : public std::invalid_argument {
  public:
    explicit ConfigError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// Schedule exceeds the configured per-user perfect-CSIT fraction cap.
class AuditFailureError : public std::runtime_error {
  public:
    explicit AuditFailureError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace csitdof

#endif // CSITDOF_ERRORS_HPP

// asrbench -- speech benchmark curation and evaluation toolkit
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef ASRBENCH_ERRORS_HPP
#define ASRBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asrbench {

// Base of all toolkit errors. CLI maps ConfigError/SchemaError to exit 1,
// everything else to exit 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration: malformed config files, invalid ratios, bad patterns.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Schema violations in input files: unknown enum tokens, missing columns.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Undecodable or out-of-contract audio (rate below 8 kHz, bad container).
class AudioError : public Error {
 public:
  using Error::Error;
};

// Time-alignment intervals out of range, inverted or overlapping.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

// Metric requested on inputs where it is undefined (e.g. empty reference).
class MetricError : public Error {
 public:
  using Error::Error;
};

// Curation-level failures: orphan transcripts, encoding conversion failure.
class CurationError : public Error {
 public:
  using Error::Error;
};

// Adapter could not produce a hypothesis after the configured retries.
class TransportError : public Error {
 public:
  using Error::Error;
};

// Cache-only policy and the key is absent.
class CacheMissError : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace asrbench

#endif  // ASRBENCH_ERRORS_HPP

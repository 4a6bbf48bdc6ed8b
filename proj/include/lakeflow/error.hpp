// Copyright 2026 The Lakeflow Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lakeflow {

enum class ErrorCode {
  // catalog
  DuplicateRse,
  DuplicateDid,
  DuplicateReplica,
  UnknownDid,
  UnknownRse,
  UnknownRun,
  UnknownReplica,
  InvalidCopies,
  InvalidDid,
  InvalidChecksumSet,
  MissingSourceFile,
  SizeMismatch,
  // checksums
  MissingFile,
  StreamReadError,
  ChecksumMismatch,
  // replay
  NonPositiveRate,
  WriteError,
  // ingest / transport
  WatchDirUnreadable,
  ChecksumError,
  CatalogUnreachable,
  ConnectionRefused,
  // transfer
  NoProtocol,
  TokenExpired,
  ProtocolUnsupported,
  Unclassified,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateRse: return "DuplicateRSE";
    case ErrorCode::DuplicateDid: return "DuplicateDID";
    case ErrorCode::DuplicateReplica: return "DuplicateReplica";
    case ErrorCode::UnknownDid: return "UnknownDID";
    case ErrorCode::UnknownRse: return "UnknownRSE";
    case ErrorCode::UnknownRun: return "UnknownRun";
    case ErrorCode::UnknownReplica: return "UnknownReplica";
    case ErrorCode::InvalidCopies: return "InvalidCopies";
    case ErrorCode::InvalidDid: return "InvalidDID";
    case ErrorCode::InvalidChecksumSet: return "InvalidChecksumSet";
    case ErrorCode::MissingSourceFile: return "MissingSourceFile";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::StreamReadError: return "StreamReadError";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::NonPositiveRate: return "NonPositiveRate";
    case ErrorCode::WriteError: return "WriteError";
    case ErrorCode::WatchDirUnreadable: return "WatchDirUnreadable";
    case ErrorCode::ChecksumError: return "ChecksumError";
    case ErrorCode::CatalogUnreachable: return "CatalogUnreachable";
    case ErrorCode::ConnectionRefused: return "ConnectionRefused";
    case ErrorCode::NoProtocol: return "NoProtocol";
    case ErrorCode::TokenExpired: return "TokenExpired";
    case ErrorCode::ProtocolUnsupported: return "ProtocolUnsupported";
    case ErrorCode::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

// Parses the wire name ("DuplicateDID", "UnknownRSE", ...); returns
// Unclassified for anything unrecognised.
inline ErrorCode error_code_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::Unclassified); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (to_string(code) == name) return code;
  }
  return ErrorCode::Unclassified;
}

// HTTP status for the catalog's JSON error envelope:
// 409 duplicates, 404 unknown, 422 everything else client-side.
inline int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateRse:
    case ErrorCode::DuplicateDid:
    case ErrorCode::DuplicateReplica:
      return 409;
    case ErrorCode::UnknownDid:
    case ErrorCode::UnknownRse:
    case ErrorCode::UnknownRun:
    case ErrorCode::UnknownReplica:
      return 404;
    default:
      return 422;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace lakeflow

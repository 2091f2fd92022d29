#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lode {

enum class ErrorCode {
  MalformedLine,
  MalformedRecord,
  InvalidIri,
  InvalidConfig,
  NoSearchTerms,
  EmptyTerm,
  EmptyQuery,
  UnknownAlgorithm,
  UnknownLinkType,
  LinkTypeConflict,
  UnknownLocalEntity,
  EmptyAnchorSet,
  ZeroDenominator,
  EmptyRepository,
  UnknownSubject,
  UnknownSourceEntity,
  PropertyAlreadyExists,
  TripleNotFound,
  InvalidOperation,
  NoLinkEstablished,
  EmptyInput,
  DuplicateGoldEntry,
  RemoteFailure,
  Io,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::NoSearchTerms: return "NoSearchTerms";
    case ErrorCode::EmptyTerm: return "EmptyTerm";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorCode::UnknownLinkType: return "UnknownLinkType";
    case ErrorCode::LinkTypeConflict: return "LinkTypeConflict";
    case ErrorCode::UnknownLocalEntity: return "UnknownLocalEntity";
    case ErrorCode::EmptyAnchorSet: return "EmptyAnchorSet";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::EmptyRepository: return "EmptyRepository";
    case ErrorCode::UnknownSubject: return "UnknownSubject";
    case ErrorCode::UnknownSourceEntity: return "UnknownSourceEntity";
    case ErrorCode::PropertyAlreadyExists: return "PropertyAlreadyExists";
    case ErrorCode::TripleNotFound: return "TripleNotFound";
    case ErrorCode::InvalidOperation: return "InvalidOperation";
    case ErrorCode::NoLinkEstablished: return "NoLinkEstablished";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DuplicateGoldEntry: return "DuplicateGoldEntry";
    case ErrorCode::RemoteFailure: return "RemoteFailure";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

// All engine failures are reported as Error; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure that carries the 1-based line (or record) position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t position, const std::string& reason)
      : Error(code, "line " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace lode

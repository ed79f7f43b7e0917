#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace syllnet {

/// Broad failure class; the CLI maps each to its own exit code.
enum class ErrorCategory {
  kUsage = 1,
  kIo = 2,
  kAnalysis = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorCategory::kUsage, what) {}
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(ErrorCategory::kIo, path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed UTF-8; offset is the byte index of the first bad sequence.
class DecodeError : public IoError {
 public:
  DecodeError(const std::string& path, std::size_t offset)
      : IoError(path, "invalid UTF-8 at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Graph file that does not parse; `context` names the line or element.
class ParseError : public IoError {
 public:
  ParseError(const std::string& path, const std::string& context, const std::string& what)
      : IoError(path, context + ": " + what) {}
};

class AnalysisError : public Error {
 public:
  explicit AnalysisError(const std::string& what) : Error(ErrorCategory::kAnalysis, what) {}
};

class NoNucleusError : public AnalysisError {
 public:
  explicit NoNucleusError(const std::string& token)
      : AnalysisError("NoNucleus: token '" + token + "' has no syllable nucleus") {}
};

class VariantMismatchError : public AnalysisError {
 public:
  explicit VariantMismatchError(const std::string& what)
      : AnalysisError("VariantMismatch: " + what) {}
};

class EmptyNetworkError : public AnalysisError {
 public:
  explicit EmptyNetworkError(const std::string& op)
      : AnalysisError("EmptyNetwork: " + op + " requires at least one node") {}
};

class NodeNotFoundError : public AnalysisError {
 public:
  explicit NodeNotFoundError(const std::string& label)
      : AnalysisError("NodeNotFound: '" + label + "'") {}
};

class UndefinedMetricError : public AnalysisError {
 public:
  explicit UndefinedMetricError(const std::string& what)
      : AnalysisError("Undefined: " + what) {}
};

class RequiresUndirectedError : public AnalysisError {
 public:
  explicit RequiresUndirectedError(const std::string& op)
      : AnalysisError("RequiresUndirected: " + op +
                      " needs an undirected network; apply to_undirected_unweighted first") {}
};

class TooManyEdgesError : public AnalysisError {
 public:
  TooManyEdgesError(std::uint64_t nodes, std::uint64_t edges)
      : AnalysisError("TooManyEdges: " + std::to_string(edges) + " edges exceed the " +
                      std::to_string(nodes) + "-node simple-graph maximum") {}
};

class MissingInputError : public Error {
 public:
  explicit MissingInputError(const std::string& field)
      : Error(ErrorCategory::kUsage, "MissingInput: " + field), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace syllnet

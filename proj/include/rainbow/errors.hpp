#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rainbow {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// colored_graph
struct LoopEdge : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct ImproperColoring : Error { using Error::Error; };

// generators
struct DimensionTooLarge : Error { using Error::Error; };
struct ElementOutOfRange : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct TooManyEdges : Error { using Error::Error; };

// detect / harness
struct InstanceTooLarge : Error { using Error::Error; };

// level_tree
struct NonPositiveEpsilon : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct RetriesExhausted : Error { using Error::Error; };
struct SubsetTooLarge : Error { using Error::Error; };
struct ClassOutOfRange : Error { using Error::Error; };
struct EmptyAfterPeeling : Error { using Error::Error; };

// harness
struct SpecParseError : Error {
  SpecParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace rainbow

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sparsemap {

enum class Errc {
  InvalidSimplex,
  EmptyInput,
  VertexOutOfRange,
  ZeroDimensional,
  NotAGraph,
  AxisOutOfRange,
  PieceNotInHyperplane,
  ApexNotOnPiece,
  DimensionMismatch,
  MEqualsN,
  PlacementExhausted,
  SizePreconditionViolated,
  LabelRangeExhausted,
  SparsityViolated,
  RecursionBaseMissing,
  UnsatisfiableParameters,
  RetryBudgetExhausted,
  DegenerateHeights,
  ChunkTooLarge,
  BoxTooLarge,
  ParseError,
  UnsupportedDimension,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sparsemap

#pragma once

#include <stdexcept>
#include <string>

namespace fedlab {

enum class ErrorCode {
  invalid_params,
  invalid_graph,
  parse_error,
  size_limit_exceeded,
  insufficient_connectivity,
  not_a_tree,
  invalid_partition,
  dimension_mismatch,
  total_weight_mismatch,
  illegal_move,
  wrong_shape,
  invalid_initial,
  unknown_fixture,
};

const char* to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fedlab

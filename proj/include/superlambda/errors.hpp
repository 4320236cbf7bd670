#pragma once

#include <stdexcept>
#include <string>

namespace sl {

enum class ErrorKind {
  parse,
  arc_invalid,
  same_vertex,
  shape_unsupported,
  no_crossing,
  not_internal,
  non_monomial_inverse,
  non_exact_division,
  iso_failure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sl

// Error hierarchy for the diamone library.
//
// Every failure the library can signal derives from diamone::error, so
// callers may catch the base class or discriminate on the concrete type.
// The command-line tool maps each concrete type to a distinct exit code.
#pragma once

#include <stdexcept>
#include <string>

namespace diamone {

/// Base class of all diamone exceptions.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: unparseable JSON/tuple text, schema violations, or a
/// resolution that fails structural validation (negative ranks, wrong
/// alternating rank sum, syzygy support below generator support, ...).
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

/// The table is neither ACM nor of diameter-one shape (third syzygies in
/// more than one degree, or the Koszul block at c+3 is too small).
class not_diameter_one_error : public error {
 public:
  explicit not_diameter_one_error(const std::string& what) : error(what) {}
};

/// A deformation move was requested whose precondition fails (nothing to
/// cancel in that degree, protected Koszul block, count out of range, ...).
class not_applicable_error : public error {
 public:
  explicit not_applicable_error(const std::string& what) : error(what) {}
};

/// Liaison was requested through a complete intersection that does not
/// contain the curve (degrees below the generators available), or on a
/// table without the required diameter-one profile.
class no_such_ci_error : public error {
 public:
  explicit no_such_ci_error(const std::string& what) : error(what) {}
};

/// A lattice/enumeration walk exceeded its node budget.
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

/// Exact integer arithmetic left the representable range.
class arithmetic_error : public error {
 public:
  explicit arithmetic_error(const std::string& what) : error(what) {}
};

}  // namespace diamone

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ltab {

/// 1-based French coordinates: rows counted from the bottom, columns from the left.
struct BoxCoord {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

enum class ErrorKind {
  dimension,   // object does not fit the requested box
  alphabet,    // entry outside the allowed alphabet
  parameter,   // numeric parameters outside an operation's domain
  validation,  // input object violates a named invariant
  invariant,   // internal consistency failure (should be unreachable)
};

const char* to_string(ErrorKind kind) noexcept;

/// Raised by every operation in the library. `invariant()` names the violated
/// rule (stable identifiers such as "red.rows_strict"); `cell()` pinpoints the
/// offending box when there is one.
class TableauError : public std::runtime_error {
 public:
  TableauError(ErrorKind kind, std::string invariant, std::string detail,
               std::optional<BoxCoord> cell = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& invariant() const noexcept { return invariant_; }
  const std::optional<BoxCoord>& cell() const noexcept { return cell_; }

 private:
  ErrorKind kind_;
  std::string invariant_;
  std::optional<BoxCoord> cell_;
};

}  // namespace ltab

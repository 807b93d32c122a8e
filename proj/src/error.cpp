#include "ltab/error.hpp"

#include <utility>

namespace ltab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::alphabet: return "alphabet";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::validation: return "validation";
    case ErrorKind::invariant: return "invariant";
  }
  return "unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& invariant, const std::string& detail,
                    const std::optional<BoxCoord>& cell) {
  std::string msg = std::string(to_string(kind)) + " error [" + invariant + "]";
  if (cell) msg += " at (row " + std::to_string(cell->row) + ", col " + std::to_string(cell->col) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

TableauError::TableauError(ErrorKind kind, std::string invariant, std::string detail,
                           std::optional<BoxCoord> cell)
    : std::runtime_error(compose(kind, invariant, detail, cell)),
      kind_(kind),
      invariant_(std::move(invariant)),
      cell_(cell) {}

}  // namespace ltab

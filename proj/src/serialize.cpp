#include "ltab/serialize.hpp"

#include <sstream>

namespace ltab {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& detail) {
  throw TableauError(ErrorKind::validation, "json." + field, detail);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(key, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<int>();
}

std::vector<int> as_ints(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of integers");
  std::vector<int> out;
  for (const Json& v : j) out.push_back(as_int(v, field));
  return out;
}

Json grid_json(const GridTableau& grid) {
  Json rows = Json::array();
  for (int r = 1; r <= grid.rows(); ++r) {
    Json row = Json::array();
    for (const Cell& cell : grid.row(r)) {
      Json c = {{"kind", to_string(cell.kind)}};
      if (cell.kind != CellKind::gray) c["value"] = cell.value;
      row.push_back(std::move(c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

GridTableau grid_from_json(const Json& j) {
  if (!j.is_array()) bad("grid", "expected an array of rows");
  std::vector<std::vector<Cell>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) bad("grid", "expected each row to be an array");
    std::vector<Cell> cells;
    for (const Json& c : row) {
      const Json& kind = member(c, "kind");
      if (kind == "gray") {
        if (c.contains("value")) bad("grid.value", "gray cells carry no value");
        cells.push_back(Cell::gray());
        continue;
      }
      const int value = as_int(member(c, "value"), "grid.value");
      if (kind == "red")
        cells.push_back(Cell::red(value));
      else if (kind == "blue")
        cells.push_back(Cell::blue(value));
      else
        bad("grid.kind", "unknown cell kind " + kind.dump());
    }
    rows.push_back(std::move(cells));
  }
  return GridTableau::from_rows(rows);
}

}  // namespace

Json to_json(const Filling& f) {
  Json j;
  j["shape"] = f.shape().outer().parts();
  if (!f.shape().inner().empty()) j["inner"] = f.shape().inner().parts();
  j["rows"] = f.rows();
  j["orientation"] = f.orientation() == Orientation::standard ? "standard" : "rotated180";
  if (f.orientation() == Orientation::rotated180) j["box"] = {f.box().rows, f.box().cols};
  return j;
}

Json to_json(const Word& w) { return Json{{"r", w.r}, {"letters", w.letters}}; }

Json to_json(const RskPair& pair) { return Json{{"P", to_json(pair.p)}, {"Q", to_json(pair.q)}}; }

Json to_json(const LTableau& t) {
  return Json{{"family", "l"}, {"params", {{"g", t.g}, {"r", t.r}, {"d", t.d}}}, {"grid", grid_json(t.grid)}};
}

Json to_json_restricted(const LTableau& t, int i) {
  return Json{{"family", "restricted"},
              {"params", {{"g", t.g}, {"r", t.r}, {"d", t.d}, {"i", i}}},
              {"grid", grid_json(t.grid)}};
}

Json to_json(const LPrimeTableau& t) {
  return Json{{"family", "lprime"},
              {"params", {{"g", t.g}, {"d", t.d}, {"k", t.k}, {"sign", to_string(t.sign)}}},
              {"grid", grid_json(t.grid)}};
}

Filling filling_from_json(const Json& j) {
  const Partition outer(as_ints(member(j, "shape"), "shape"));
  const Partition inner(j.contains("inner") ? as_ints(j.at("inner"), "inner") : std::vector<int>{});
  const Json& rows_json = member(j, "rows");
  if (!rows_json.is_array()) bad("rows", "expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& row : rows_json) rows.push_back(as_ints(row, "rows"));
  Orientation orientation = Orientation::standard;
  if (j.contains("orientation")) {
    const Json& o = j.at("orientation");
    if (o == "rotated180")
      orientation = Orientation::rotated180;
    else if (o != "standard")
      bad("orientation", "expected \"standard\" or \"rotated180\"");
  }
  std::optional<Box> box;
  if (j.contains("box")) {
    const auto dims = as_ints(j.at("box"), "box");
    if (dims.size() != 2) bad("box", "expected [rows, cols]");
    box = Box{dims[0], dims[1]};
  }
  return Filling(SkewShape(outer, inner), std::move(rows), orientation, box);
}

Word word_from_json(const Json& j) {
  Word w{as_int(member(j, "r"), "r"), as_ints(member(j, "letters"), "letters")};
  w.validate();
  return w;
}

RskPair rsk_pair_from_json(const Json& j) {
  return RskPair{filling_from_json(member(j, "P")), filling_from_json(member(j, "Q"))};
}

LTableau l_tableau_from_json(const Json& j) {
  const Json& family = member(j, "family");
  if (family != "l" && family != "restricted") bad("family", "expected an L-tableau, got " + family.dump());
  const Json& params = member(j, "params");
  LTableau t{as_int(member(params, "g"), "params.g"), as_int(member(params, "r"), "params.r"),
             as_int(member(params, "d"), "params.d"), grid_from_json(member(j, "grid"))};
  validate(t);
  return t;
}

LPrimeTableau lprime_from_json(const Json& j) {
  if (member(j, "family") != "lprime") bad("family", "expected an L'-tableau");
  const Json& params = member(j, "params");
  const Json& sign = member(params, "sign");
  if (sign != "positive" && sign != "negative") bad("params.sign", "expected positive or negative");
  LPrimeTableau t{sign == "positive" ? Sign::positive : Sign::negative, as_int(member(params, "g"), "params.g"),
                  as_int(member(params, "d"), "params.d"), as_int(member(params, "k"), "params.k"),
                  grid_from_json(member(j, "grid"))};
  validate(t);
  return t;
}

std::string to_ascii(const Filling& f) {
  std::string out = f.to_string();
  if (f.orientation() == Orientation::rotated180) out += "(rotated 180 in " + std::to_string(f.box().rows) + "x" +
                                                         std::to_string(f.box().cols) + ")\n";
  return out;
}

std::string to_ascii(const LTableau& t) {
  std::ostringstream os;
  os << "L-tableau g=" << t.g << " r=" << t.r << " d=" << t.d << '\n' << t.grid.to_string();
  return os.str();
}

std::string to_ascii(const LPrimeTableau& t) {
  std::ostringstream os;
  os << to_string(t.sign) << " L'-tableau g=" << t.g << " d=" << t.d << " k=" << t.k << '\n' << t.grid.to_string();
  return os.str();
}

namespace {

std::string latex_cell(const Cell& cell) {
  switch (cell.kind) {
    case CellKind::red: return "*(white!80!red) \\color{black} " + std::to_string(cell.value);
    case CellKind::blue: return "\\color{blue} " + std::to_string(cell.value);
    case CellKind::gray: return "*(white!80!black)";
  }
  return {};
}

std::string latex_grid(const GridTableau& grid) {
  std::ostringstream os;
  os << "\\begin{ytableau}\n";
  for (int r = grid.rows(); r >= 1; --r) {
    os << ' ';
    for (int c = 1; c <= grid.cols(); ++c) os << (c > 1 ? " & " : "") << latex_cell(grid.at({r, c}));
    os << (r > 1 ? " \\\\\n" : "\n");
  }
  os << "\\end{ytableau}\n";
  return os.str();
}

}  // namespace

std::string to_latex(const Filling& f) {
  std::ostringstream os;
  os << "\\begin{ytableau}\n";
  const SkewShape& s = f.shape();
  for (int r = s.height(); r >= 1; --r) {
    os << ' ';
    for (int c = 1; c <= s.outer().row(r); ++c) {
      if (c > 1) os << " & ";
      if (c <= s.inner().row(r))
        os << "\\none";
      else
        os << f.at({r, c});
    }
    os << (r > 1 ? " \\\\\n" : "\n");
  }
  os << "\\end{ytableau}\n";
  return os.str();
}

std::string to_latex(const LTableau& t) { return latex_grid(t.grid); }
std::string to_latex(const LPrimeTableau& t) { return latex_grid(t.grid); }

}  // namespace ltab

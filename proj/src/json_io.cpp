#include "tabtype/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "tabtype/error.hpp"

namespace tabtype {

Json to_json(const Diagram& d) {
  Json boxes = Json::array();
  for (const Box& b : d.boxes()) boxes.push_back({b.row, b.col});
  return Json{{"boxes", boxes}};
}

Json to_json(const TypeFilling& t) {
  Json boxes = Json::array();
  for (std::size_t i = 0; i < t.shape().size(); ++i) {
    const Box& b = t.shape().boxes()[i];
    boxes.push_back({b.row, b.col, t.theta()[i]});
  }
  return Json{{"boxes", boxes}};
}

Json to_json(const Tableau& t) {
  Json boxes = Json::array();
  for (std::size_t i = 0; i < t.shape().size(); ++i) {
    const Box& b = t.shape().boxes()[i];
    boxes.push_back({b.row, b.col, t.entries()[i]});
  }
  return Json{{"boxes", boxes}};
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Permutation& p) { return Json(p.one_line()); }

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [exps, coef] : p.terms())
    terms.push_back({{"exps", exps}, {"coef", coef.convert_to<long long>()}});
  return Json{{"m", p.vars()}, {"terms", terms}};
}

namespace {

// Dig the row-of-rows out of the accepted wrapper layouts.
const Json& unwrap(const Json& j) {
  if (j.is_object()) {
    for (const char* key : {"boxes", "type", "s_lambda", "shape", "tableau"})
      if (j.contains(key)) return unwrap(j.at(key));
    throw error("malformed-input", "no boxes in JSON object");
  }
  return j;
}

std::vector<std::vector<int>> rows_of_ints(const Json& j, std::size_t min_len) {
  if (!j.is_array()) throw error("malformed-input", "expected a JSON array");
  std::vector<std::vector<int>> out;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() < min_len)
      throw error("malformed-input", "expected arrays of at least " + std::to_string(min_len) +
                                         " integers");
    std::vector<int> vals;
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw error("malformed-input", "expected integers");
      vals.push_back(v.get<int>());
    }
    out.push_back(std::move(vals));
  }
  return out;
}

}  // namespace

Diagram diagram_from_json(const Json& j) {
  std::vector<Box> boxes;
  for (const auto& row : rows_of_ints(unwrap(j), 2)) boxes.push_back({row[0], row[1]});
  return Diagram(std::move(boxes));
}

TypeFilling type_filling_from_json(const Json& j) {
  std::vector<std::pair<Box, int>> cells;
  for (const auto& row : rows_of_ints(unwrap(j), 3)) cells.emplace_back(Box{row[0], row[1]}, row[2]);
  std::sort(cells.begin(), cells.end());
  std::vector<Box> boxes;
  std::vector<int> theta;
  for (auto& [b, th] : cells) {
    boxes.push_back(b);
    theta.push_back(th);
  }
  return TypeFilling(Diagram(std::move(boxes)), std::move(theta));
}

Tableau tableau_from_json(const Json& j) {
  std::vector<std::pair<Box, int>> cells;
  for (const auto& row : rows_of_ints(unwrap(j), 3)) cells.emplace_back(Box{row[0], row[1]}, row[2]);
  std::sort(cells.begin(), cells.end());
  std::vector<Box> boxes;
  std::vector<int> entries;
  for (auto& [b, e] : cells) {
    boxes.push_back(b);
    entries.push_back(e);
  }
  return Tableau(Diagram(std::move(boxes)), std::move(entries));
}

Partition partition_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object() && j.contains("parts")) arr = &j.at("parts");
  if (!arr->is_array()) throw error("malformed-input", "expected an array of parts");
  std::vector<int> parts;
  for (const Json& v : *arr) {
    if (!v.is_number_integer()) throw error("malformed-input", "expected integer parts");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

Permutation permutation_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    for (const char* key : {"sigma", "perm"})
      if (j.contains(key)) {
        arr = &j.at(key);
        break;
      }
  }
  if (!arr->is_array()) throw error("malformed-input", "expected one-line notation array");
  std::vector<int> word;
  for (const Json& v : *arr) {
    if (!v.is_number_integer()) throw error("malformed-input", "expected integers");
    word.push_back(v.get<int>());
  }
  return Permutation(std::move(word));
}

namespace {

std::string render_grid(const Diagram& d, const std::vector<std::string>& cells) {
  if (d.empty()) return "(empty)\n";
  std::size_t width = 1;
  for (const auto& s : cells) width = std::max(width, s.size());
  std::ostringstream out;
  for (int r = 1; r <= d.max_row(); ++r) {
    for (int c = 1; c <= d.max_col(); ++c) {
      if (c > 1) out << ' ';
      std::string cell = ".";
      if (d.contains({r, c})) cell = cells[d.index_of({r, c})];
      out << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_diagram(const Diagram& d) {
  return render_grid(d, std::vector<std::string>(d.size(), "#"));
}

std::string render_type(const TypeFilling& t) {
  std::vector<std::string> cells;
  cells.reserve(t.theta().size());
  for (int th : t.theta()) cells.push_back(std::to_string(th));
  return render_grid(t.shape(), cells);
}

std::string render_tableau(const Tableau& t) {
  std::vector<std::string> cells;
  cells.reserve(t.entries().size());
  for (int e : t.entries()) cells.push_back(std::to_string(e));
  return render_grid(t.shape(), cells);
}

}  // namespace tabtype

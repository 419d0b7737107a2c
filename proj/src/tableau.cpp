#include "tabtype/tableau.hpp"

#include <algorithm>
#include <string>

#include "tabtype/error.hpp"

namespace tabtype {

Tableau::Tableau(Diagram shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_.size())
    throw error("invalid-tableau", "entry count mismatch");
  std::vector<bool> seen(entries_.size(), false);
  for (int e : entries_) {
    if (e < 1 || static_cast<std::size_t>(e) > entries_.size())
      throw error("invalid-tableau", "entry " + std::to_string(e) + " out of range");
    if (seen[static_cast<std::size_t>(e - 1)])
      throw error("invalid-tableau", "entry " + std::to_string(e) + " repeated");
    seen[static_cast<std::size_t>(e - 1)] = true;
  }
}

int Tableau::entry_at(const Box& b) const { return entries_[shape_.index_of(b)]; }

Box Tableau::box_of(int entry) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] == entry) return shape_.boxes()[i];
  throw error("invalid-tableau", "no entry " + std::to_string(entry));
}

TypeFilling type_of(const Tableau& t) {
  const Diagram& d = t.shape();
  std::vector<int> theta;
  theta.reserve(d.size());
  for (const Box& b : d.boxes()) {
    int mine = t.entry_at(b);
    int smaller = 0;
    for (const Box& h : hook_cells(d, b).hook)
      if (t.entry_at(h) < mine) ++smaller;
    theta.push_back(smaller);
  }
  return TypeFilling(d, std::move(theta));
}

std::vector<Box> filling_sequence_of(const Tableau& t) {
  std::vector<Box> seq(t.shape().size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    seq[static_cast<std::size_t>(t.entries()[i] - 1)] = t.shape().boxes()[i];
  return seq;
}

Tableau tableau_from_filling_sequence(const std::vector<Box>& seq) {
  Diagram shape{std::vector<Box>(seq.begin(), seq.end())};
  std::vector<int> entries(seq.size(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i)
    entries[shape.index_of(seq[i])] = static_cast<int>(i) + 1;
  return Tableau(std::move(shape), std::move(entries));
}

}  // namespace tabtype

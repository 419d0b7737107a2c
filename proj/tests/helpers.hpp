#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tabtype/error.hpp"
#include "tabtype/tableau.hpp"
#include "tabtype/type_filling.hpp"

// True when fn throws tabtype::error carrying the given code.
inline bool throws_code(const std::function<void()>& fn, const std::string& code) {
  try {
    fn();
  } catch (const tabtype::error& e) {
    return std::string(e.what()).find(code) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

// Type and tableau literals: parallel (box, value) rows, any order.
inline tabtype::TypeFilling make_type(
    const std::vector<std::pair<tabtype::Box, int>>& cells) {
  std::vector<tabtype::Box> boxes;
  for (const auto& [b, v] : cells) boxes.push_back(b);
  tabtype::Diagram d(boxes);
  std::vector<int> theta(d.size());
  for (const auto& [b, v] : cells) theta[d.index_of(b)] = v;
  return tabtype::TypeFilling(d, theta);
}

inline tabtype::Tableau make_tableau(
    const std::vector<std::pair<tabtype::Box, int>>& cells) {
  std::vector<tabtype::Box> boxes;
  for (const auto& [b, v] : cells) boxes.push_back(b);
  tabtype::Diagram d(boxes);
  std::vector<int> entries(d.size());
  for (const auto& [b, v] : cells) entries[d.index_of(b)] = v;
  return tabtype::Tableau(d, entries);
}

#pragma once

#include <initializer_list>
#include <string>

#include "hccourant/rational.hpp"
#include "hccourant/qmatrix.hpp"

namespace testing_helpers {

inline hcc::QVector qv(std::initializer_list<const char*> entries) {
  hcc::QVector v;
  for (const char* e : entries) v.push_back(hcc::parse_rational(e));
  return v;
}

inline hcc::QMatrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<hcc::QVector> r;
  for (auto row : rows) r.push_back(qv(row));
  return hcc::QMatrix::from_rows(r, r.empty() ? 0 : r.front().size());
}

}  // namespace testing_helpers

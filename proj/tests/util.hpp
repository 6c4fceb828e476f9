#pragma once

// Small shared helpers for the test suites.

#include <vector>

#include "kmroot/cartan.hpp"

namespace kmtest {

inline kmroot::SquareMat mat(const std::vector<std::vector<kmroot::Int>>& rows) {
  kmroot::SquareMat m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

inline kmroot::Gcm gcm(const std::vector<std::vector<kmroot::Int>>& rows) {
  return kmroot::Gcm::validate(mat(rows));
}

}  // namespace kmtest

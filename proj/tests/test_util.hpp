#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pellfrac/poly.hpp"
#include "pellfrac/qfield.hpp"

namespace pellfrac::testing {

inline QuadElem q(const std::string& text, std::int64_t d = 1) { return parse_quad(text, FieldTag::of(d)); }

/// Polynomial from coefficient strings written highest degree first.
inline Poly poly(std::initializer_list<const char*> high_first, std::int64_t d = 1) {
  std::vector<QuadElem> c;
  for (auto it = std::rbegin(high_first); it != std::rend(high_first); ++it) c.push_back(q(*it, d));
  return Poly(std::move(c), FieldTag::of(d));
}

}  // namespace pellfrac::testing

#define EXPECT_ERRC(stmt, expected_code)                                             \
  do {                                                                               \
    try {                                                                            \
      stmt;                                                                          \
      ADD_FAILURE() << "expected pellfrac::error(" << ::pellfrac::to_string(expected_code) << ")"; \
    } catch (const ::pellfrac::error& e__) {                                         \
      EXPECT_EQ(e__.code(), expected_code) << e__.what();                            \
    }                                                                                \
  } while (0)

#pragma once

// The 19 elements of D^2_4 at lambda = 2 with their preimages under theta
// (k = 3), eta (k = 2, n = 4), zeta1 (k = 2) and zeta2 (k = 2). Bracketed
// positions carry colour 2.

#include <optional>
#include <vector>

#include "derange/euler_tables.hpp"
#include "oracles.hpp"

namespace oracle {

struct TableRow {
  const char* word;
  derange::euler::BranchArg theta;
  derange::euler::BranchArg eta;
  std::vector<derange::euler::Zeta1Arg> zeta1;
  std::optional<derange::euler::Zeta2Arg> zeta2;
};

inline derange::euler::IndexArg idx(int i, const char* w, int k) { return {i, bold_word(w, k)}; }
inline derange::euler::ColourArg col(int c, const char* w, int k) { return {c, bold_word(w, k)}; }

inline std::vector<TableRow> worked_table() {
  return {
      {"2134", idx(1, "3214", 3), idx(3, "213", 2), {{3, 1, bold_word("213", 2)}}, std::nullopt},
      {"21[3]4", col(2, "213", 2), idx(4, "21[3]", 2),
       {{3, 2, bold_word("213", 2)}, {4, 1, bold_word("21[3]", 2)}}, derange::euler::Zeta2Arg{2, 4, bold_word("21", 2)}},
      {"213[4]", idx(1, "321[4]", 3), idx(3, "21[3]", 2), {{3, 1, bold_word("21[3]", 2)}}, std::nullopt},
      {"21[34]", col(2, "21[3]", 2), col(2, "1[2]", 1), {{3, 2, bold_word("21[3]", 2)}}, std::nullopt},
      {"2143", idx(1, "4213", 3), idx(4, "213", 2), {{4, 1, bold_word("213", 2)}}, std::nullopt},
      {"3124", idx(2, "3214", 3), idx(2, "213", 2), {{2, 1, bold_word("213", 2)}}, std::nullopt},
      {"312[4]", idx(2, "321[4]", 3), idx(2, "21[3]", 2), {{2, 1, bold_word("21[3]", 2)}}, std::nullopt},
      {"3142", idx(1, "4312", 3), idx(4, "312", 2), {{4, 1, bold_word("312", 2)}}, std::nullopt},
      {"3214", idx(3, "3214", 3), idx(1, "213", 2), {{1, 1, bold_word("213", 2)}}, std::nullopt},
      {"321[4]", idx(3, "321[4]", 3), idx(1, "21[3]", 2), {{1, 1, bold_word("21[3]", 2)}}, std::nullopt},
      {"3241", idx(1, "4321", 3), idx(4, "321", 2), {{4, 1, bold_word("321", 2)}}, std::nullopt},
      {"4123", idx(2, "4213", 3), idx(2, "312", 2), {{2, 1, bold_word("312", 2)}}, std::nullopt},
      {"4132", idx(2, "4312", 3), idx(3, "312", 2), {{3, 1, bold_word("312", 2)}}, std::nullopt},
      {"41[3]2", col(2, "312", 2), col(2, "12", 1), {{3, 2, bold_word("312", 2)}}, std::nullopt},
      {"4213", idx(3, "4213", 3), idx(1, "312", 2), {{1, 1, bold_word("312", 2)}}, std::nullopt},
      {"4231", idx(2, "4321", 3), idx(3, "321", 2), {{3, 1, bold_word("321", 2)}}, std::nullopt},
      {"42[3]1", col(2, "321", 2), col(2, "21", 1), {{3, 2, bold_word("321", 2)}}, std::nullopt},
      {"4312", idx(3, "4312", 3), idx(1, "321", 2), {{1, 1, bold_word("321", 2)}}, std::nullopt},
      {"4321", idx(3, "4321", 3), idx(2, "321", 2), {{2, 1, bold_word("321", 2)}}, std::nullopt},
  };
}

}  // namespace oracle

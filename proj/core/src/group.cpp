#include "hopfcat/group.hpp"

#include <algorithm>
#include <array>

#include "hopfcat/error.hpp"

namespace hopfcat {

std::vector<int> GroupTable::conjugacy_class(int g) const {
  std::vector<int> cls;
  for (int x = 0; x < order; ++x) {
    int c = conj(x, g);
    if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(c);
  }
  std::sort(cls.begin(), cls.end());
  return cls;
}

GroupTable make_group(std::vector<std::vector<int>> mult, std::vector<std::string> names) {
  GroupTable g;
  g.order = static_cast<int>(mult.size());
  if (g.order == 0) throw BadGroupTable("empty table");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != g.order) throw BadGroupTable("ragged table");
    for (int v : row)
      if (v < 0 || v >= g.order) throw BadGroupTable("index out of range");
  }
  g.mult = std::move(mult);

  // identity
  g.identity = -1;
  for (int e = 0; e < g.order; ++e) {
    bool ok = true;
    for (int i = 0; i < g.order && ok; ++i)
      ok = g.mult[e][i] == i && g.mult[i][e] == i;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw BadGroupTable("no identity");

  // inverses
  g.inverse.assign(g.order, -1);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j)
      if (g.mult[i][j] == g.identity && g.mult[j][i] == g.identity) {
        g.inverse[i] = j;
        break;
      }
    if (g.inverse[i] < 0) throw BadGroupTable("missing inverse");
  }

  // associativity
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      for (int k = 0; k < g.order; ++k)
        if (g.mult[g.mult[i][j]][k] != g.mult[i][g.mult[j][k]])
          throw BadGroupTable("not associative");

  if (names.empty()) {
    for (int i = 0; i < g.order; ++i) names.push_back("g" + std::to_string(i));
    names[g.identity] = "e";
  } else if (static_cast<int>(names.size()) != g.order) {
    throw BadGroupTable("name count");
  }
  g.names = std::move(names);
  return g;
}

GroupTable cyclic_group(int n) {
  if (n <= 0) throw BadGroupTable("cyclic order " + std::to_string(n));
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult[i][j] = (i + j) % n;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "g^" + std::to_string(i));
  return make_group(std::move(mult), std::move(names));
}

GroupTable symmetric_group_3() {
  // permutations of {0,1,2}: e, (01), (02), (12), (012), (021)
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
  }};
  auto compose_perm = [&](int a, int b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
    for (int k = 0; k < 6; ++k)
      if (perms[k] == c) return k;
    return -1;
  };
  std::vector<std::vector<int>> mult(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) mult[i][j] = compose_perm(i, j);
  return make_group(std::move(mult), {"e", "(01)", "(02)", "(12)", "(012)", "(021)"});
}

}  // namespace hopfcat

#include "stern/speyer.hpp"

#include <deque>
#include <string>

#include "stern/error.hpp"
#include "stern/mpoly.hpp"

namespace stern {

Matrix speyer_matrix(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "speyer_matrix needs r >= 1");
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  const MPoly sum = x + y;
  Matrix m(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) {
    const auto a = static_cast<unsigned>(i);
    const auto b = static_cast<unsigned>(r - i);
    const MPoly image = sum.pow(a) * y.pow(b) + x.pow(a) * sum.pow(b);
    for (const auto& [e, c] : image.terms()) m(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(i)) = c;
  }
  return m;
}

std::vector<Rational> diagonal_symmetrize(const Matrix& b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((b(i, j) == 0) != (b(j, i) == 0)) {
        throw Error(ErrorKind::NotSymmetrizable,
                    "zero pattern not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }

  std::vector<Rational> s(n);
  std::vector<bool> reached(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (reached[root]) continue;
    s[root] = 1;
    reached[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || reached[j] || b(i, j) == 0) continue;
        s[j] = s[i] * b(i, j) / b(j, i);
        if (s[j] <= 0) {
          throw Error(ErrorKind::NotSymmetrizable,
                      "edge (" + std::to_string(i) + "," + std::to_string(j) + ") forces a non-positive scale");
        }
        reached[j] = true;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s[i] * b(i, j) != s[j] * b(j, i)) {
        throw Error(ErrorKind::NotSymmetrizable,
                    "edge (" + std::to_string(i) + "," + std::to_string(j) + ") violates the propagated scales");
      }
  return s;
}

}  // namespace stern

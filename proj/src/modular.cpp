#include "formation/modular.hpp"

namespace formation::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

void RowSpace::reduce(Row& row) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::uint64_t c = row[pivots_[i]];
    if (c == 0) continue;
    const Row& b = basis_[i];
    for (std::size_t j = 0; j < columns_; ++j)
      if (b[j]) row[j] = sub(row[j], mul(c, b[j]));
  }
}

bool RowSpace::independent(Row row) const {
  reduce(row);
  for (std::uint64_t x : row)
    if (x) return true;
  return false;
}

bool RowSpace::insert(Row row) {
  reduce(row);
  std::size_t pivot = 0;
  while (pivot < columns_ && row[pivot] == 0) ++pivot;
  if (pivot == columns_) return false;
  std::uint64_t inv = inverse(row[pivot]);
  for (auto& x : row) x = mul(x, inv);
  basis_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::size_t rank(const std::vector<Row>& rows, std::size_t columns) {
  RowSpace space(columns);
  for (const Row& r : rows) space.insert(r);
  return space.rank();
}

}  // namespace formation::modp

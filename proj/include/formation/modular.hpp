#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace formation::modp {

// 2^62 - 57.
inline constexpr std::uint64_t kPrime = 4611686018427387847ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);
inline std::uint64_t inverse(std::uint64_t a) { return pow(a, kPrime - 2); }
inline std::uint64_t fromSigned(std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
}

using Row = std::vector<std::uint64_t>;

// Row space kept in echelon form with unit pivots; rows are inserted one at a time.
class RowSpace {
 public:
  explicit RowSpace(std::size_t columns) : columns_(columns) {}

  // Reduces `row` against the basis. Returns true (and keeps it) when independent.
  bool insert(Row row);
  bool independent(Row row) const;
  std::size_t rank() const { return basis_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  void reduce(Row& row) const;

  std::size_t columns_;
  std::vector<Row> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const std::vector<Row>& rows, std::size_t columns);

}  // namespace formation::modp

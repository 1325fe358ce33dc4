#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ocl {

// Signed arbitrary-precision integer, base 1e9 limbs. Only what profile
// arithmetic needs: +, -, *, pow, comparisons.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator-() const;
  BigInt pow(unsigned long long e) const;

  bool operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator<=(const BigInt& o) const { return *this < o || *this == o; }
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator>=(const BigInt& o) const { return o <= *this; }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }

  // nullopt-style conversion: true and stores into out iff the value fits.
  bool to_i64(long long& out) const;
  std::string to_string() const;

 private:
  static constexpr uint32_t kBase = 1000000000;
  bool neg_ = false;
  std::vector<uint32_t> limbs_;  // little-endian, no trailing zeros; empty = 0

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);  // a >= b
  void trim();
};

}  // namespace ocl

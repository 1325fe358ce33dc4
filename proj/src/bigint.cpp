#include "ocl/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocl {

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  unsigned long long mag = neg_ ? -static_cast<unsigned long long>(v) : v;
  while (mag != 0) {
    limbs_.push_back(static_cast<uint32_t>(mag % kBase));
    mag /= kBase;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint32_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back(static_cast<uint32_t>(s % kBase));
    carry = static_cast<uint32_t>(s / kBase);
  }
  if (carry) out.push_back(carry);
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<uint32_t>(s));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt out;
  if (neg_ == o.neg_) {
    out.neg_ = neg_;
    out.limbs_ = add_mag(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.neg_ = neg_;
      out.limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
      out.neg_ = o.neg_;
      out.limbs_ = sub_mag(o.limbs_, limbs_);
    }
  }
  out.trim();
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.neg_ = !out.neg_;
  return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt out;
  out.neg_ = neg_ != o.neg_;
  out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size() || carry; ++j) {
      uint64_t cur = out.limbs_[i + j] + carry;
      if (j < o.limbs_.size()) cur += static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
      out.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
  }
  out.trim();
  return out;
}

BigInt BigInt::pow(unsigned long long e) const {
  BigInt base = *this;
  BigInt out(1);
  while (e) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

bool BigInt::operator<(const BigInt& o) const {
  if (neg_ != o.neg_) return neg_;
  int c = cmp_mag(limbs_, o.limbs_);
  return neg_ ? c > 0 : c < 0;
}

bool BigInt::to_i64(long long& out) const {
  unsigned long long mag = 0;
  const unsigned long long limit =
      neg_ ? 9223372036854775808ull : 9223372036854775807ull;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (mag > (limit - limbs_[i]) / kBase) return false;
    mag = mag * kBase + limbs_[i];
  }
  out = neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
  return true;
}

std::string BigInt::to_string() const {
  if (limbs_.empty()) return "0";
  std::string out = neg_ ? "-" : "";
  out += std::to_string(limbs_.back());
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace ocl

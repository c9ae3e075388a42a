#include "gapdist/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gapdist {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  std::uint64_t mag = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1;
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xFFFFFFFFu));
    mag >>= 32;
  }
}

BigInt BigInt::pow(std::uint32_t base, unsigned exp) {
  BigInt r(1);
  BigInt b(static_cast<long long>(base));
  while (exp != 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  const auto& lo = a.size() >= b.size() ? b : a;
  const auto& hi = a.size() >= b.size() ? a : b;
  std::vector<std::uint32_t> r(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    r[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  r[hi.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                       (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (cur < 0) {
      cur += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(cur);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = rhs;
    return *this;
  }
  if (sign_ == rhs.sign_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
  } else {
    int c = compare_mag(limbs_, rhs.limbs_);
    if (c == 0) {
      limbs_.clear();
      sign_ = 0;
    } else if (c > 0) {
      limbs_ = sub_mag(limbs_, rhs.limbs_);
    } else {
      limbs_ = sub_mag(rhs.limbs_, limbs_);
      sign_ = rhs.sign_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    limbs_.clear();
    sign_ = 0;
    return *this;
  }
  const auto& a = limbs_;
  const auto& b = rhs.limbs_;
  std::vector<std::uint32_t> r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = ai * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  limbs_ = std::move(r);
  sign_ *= rhs.sign_;
  trim();
  return *this;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  if (a.sign_ == 0) return 0;
  int c = compare_mag(a.limbs_, b.limbs_);
  return a.sign_ > 0 ? c : -c;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

double BigInt::frexp2(long& exp2_out) const {
  exp2_out = 0;
  if (sign_ == 0) return 0.0;
  // Assemble the top <= 96 bits into a double, remember the shift.
  double m = 0.0;
  const std::size_t n = limbs_.size();
  const std::size_t take = std::min<std::size_t>(n, 3);
  for (std::size_t i = 0; i < take; ++i) {
    m = m * 4294967296.0 + static_cast<double>(limbs_[n - 1 - i]);
  }
  long shift = static_cast<long>((n - take) * 32);
  int e = 0;
  m = std::frexp(m, &e);
  exp2_out = shift + e;
  return sign_ > 0 ? m : -m;
}

double BigInt::to_double() const {
  long e = 0;
  double m = frexp2(e);
  return std::ldexp(m, static_cast<int>(e));
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::vector<std::uint32_t> chunks;  // base 10^9, little-endian
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    chunks.push_back(static_cast<std::uint32_t>(rem));
    while (!work.empty() && work.back() == 0) work.pop_back();
  }
  std::string out = sign_ < 0 ? "-" : "";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%u", chunks.back());
  out += buf;
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", chunks[i]);
    out += buf;
  }
  return out;
}

}  // namespace gapdist

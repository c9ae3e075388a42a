#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gapdist {

/// Signed arbitrary-precision integer, little-endian base 2^32 magnitude.
/// Supports exactly what exact q-expansion arithmetic needs: ring
/// operations, comparisons, decimal conversion and lossy export to double.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT(google-explicit-constructor)

  static BigInt pow(std::uint32_t base, unsigned exp);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

  /// Three-way comparison, -1/0/+1.
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  /// Nearest double; +-inf when the value exceeds the double range.
  double to_double() const;

  /// Splits |x| as m * 2^e with m in [0.5, 1); returns m (signed) and sets e.
  /// Zero yields (0, 0).
  double frexp2(long& exp2_out) const;

  std::string to_string() const;

  std::size_t bit_length() const;

 private:
  void trim();
  static int compare_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // Requires |a| >= |b|.
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);

  int sign_ = 0;
  std::vector<std::uint32_t> limbs_;
};

}  // namespace gapdist

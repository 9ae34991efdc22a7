#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lines {

// Prime field element. Every element carries its modulus so that values stay
// self-describing; p == 0 marks a "bare" constant (result of default
// construction) that adopts the modulus of its partner in arithmetic.
class GFp {
 public:
  GFp() : v_(0), p_(0) {}
  GFp(int64_t v, uint64_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("GFp modulus must be positive");
    int64_t m = v % static_cast<int64_t>(p);
    if (m < 0) m += static_cast<int64_t>(p);
    v_ = static_cast<uint64_t>(m);
  }

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }

  friend GFp operator+(const GFp& a, const GFp& b) {
    uint64_t p = join(a, b);
    if (p == 0) return GFp();
    return GFp::raw((a.v_ + b.v_) % p, p);
  }
  friend GFp operator-(const GFp& a, const GFp& b) {
    uint64_t p = join(a, b);
    if (p == 0) return GFp();
    return GFp::raw((a.v_ + p - b.v_) % p, p);
  }
  friend GFp operator*(const GFp& a, const GFp& b) {
    uint64_t p = join(a, b);
    if (p == 0) return GFp();
    return GFp::raw(mulmod(a.v_, b.v_, p), p);
  }
  friend GFp operator/(const GFp& a, const GFp& b) { return a * b.inverse(); }
  GFp operator-() const { return p_ == 0 ? GFp() : GFp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

  GFp& operator+=(const GFp& b) { return *this = *this + b; }
  GFp& operator-=(const GFp& b) { return *this = *this - b; }
  GFp& operator*=(const GFp& b) { return *this = *this * b; }
  GFp& operator/=(const GFp& b) { return *this = *this / b; }

  friend bool operator==(const GFp& a, const GFp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
      throw std::domain_error("GFp modulus mismatch");
    return a.v_ == b.v_;
  }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }
  // Total order for canonical term maps and sorting only.
  friend bool operator<(const GFp& a, const GFp& b) { return a.v_ < b.v_; }

  GFp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
    return pow(*this, p_ - 2);
  }

  static GFp pow(GFp b, uint64_t e) {
    GFp r = GFp::raw(1 % b.p_, b.p_);
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  static GFp raw(uint64_t v, uint64_t p) {
    GFp x;
    x.v_ = v;
    x.p_ = p;
    return x;
  }
  static uint64_t join(const GFp& a, const GFp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw std::domain_error("GFp modulus mismatch");
    return a.p_;
  }
  static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
  }

  uint64_t v_;
  uint64_t p_;
};

inline bool is_zero(const GFp& a) { return a.value() == 0; }
inline bool is_one(const GFp& a) { return a.modulus() != 0 && a.value() == 1; }
inline GFp inv(const GFp& a) { return a.inverse(); }
inline GFp zero_like(const GFp& a) {
  return a.modulus() == 0 ? GFp() : GFp(0, a.modulus());
}
inline GFp one_like(const GFp& a) {
  if (a.modulus() == 0) throw std::domain_error("one_like on bare GFp");
  return GFp(1, a.modulus());
}
inline GFp scalar_of_int(long v, const GFp& ctx) {
  if (ctx.modulus() == 0) throw std::domain_error("scalar_of_int on bare GFp");
  return GFp(v, ctx.modulus());
}
inline std::string to_string(const GFp& a) { return std::to_string(a.value()); }
inline GFp exact_div(const GFp& a, const GFp& b) { return a / b; }

}  // namespace lines

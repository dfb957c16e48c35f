#pragma once

#include <cstdint>
#include <string>

#include "genchar/errors.hpp"

namespace genchar {

// Variable families, in canonical display order.
//   X(i)   main variables x_i, i >= 1 (Laurent: negative exponents allowed)
//   Y(i)   half-power bookkeeping y_i with y_i^2 = x_i (Laurent)
//   U(i)   dual series variables u_i
//   V(i)   double-dual series variables v_i
//   T      generating-function variable t
//   C(m)   parameter sequence entries c_m, m ranges over all of Z
//   H(r,s) abstract one-row indeterminates h_{r,s}, r >= 1, s in Z
enum class Family : uint8_t { X = 0, Y = 1, U = 2, V = 3, T = 4, C = 5, H = 6 };

// A VarId packs (family, index) into one 64-bit key whose unsigned order
// matches the canonical variable order: family-major, index-ascending
// (for H: (r, s) lexicographic).
class VarId {
  public:
    constexpr VarId() : key_(0) {}

    static VarId x(int i) { return indexed(Family::X, i); }
    static VarId y(int i) { return indexed(Family::Y, i); }
    static VarId u(int i) { return indexed(Family::U, i); }
    static VarId v(int i) { return indexed(Family::V, i); }
    static VarId t() { return VarId((uint64_t(Family::T) << 61)); }

    static VarId c(int m) {
        return VarId((uint64_t(Family::C) << 61) | bias32(m));
    }

    static VarId h(int r, int s) {
        if (r < 1) fail(Errc::BadInput, "h variable needs r >= 1");
        return VarId((uint64_t(Family::H) << 61) | (uint64_t(uint32_t(r)) << 32) | bias32(s));
    }

    Family family() const { return Family(key_ >> 61); }

    // Index for X/Y/U/V (>= 1), m for C; for T returns 0.
    int index() const {
        switch (family()) {
            case Family::C: return unbias32(uint32_t(key_ & 0xffffffffu));
            case Family::T: return 0;
            case Family::H: fail(Errc::BadInput, "h variable has a (r,s) index pair");
            default: return int(key_ & 0xffffffffu);
        }
    }

    int h_r() const { return int(uint32_t((key_ >> 32) & 0x1fffffffu)); }
    int h_s() const { return unbias32(uint32_t(key_ & 0xffffffffu)); }

    uint64_t key() const { return key_; }

    bool operator==(const VarId& o) const { return key_ == o.key_; }
    bool operator!=(const VarId& o) const { return key_ != o.key_; }
    bool operator<(const VarId& o) const { return key_ < o.key_; }

    // Wire names: "x1", "y2", "u1", "v3", "t", "c-3", "c5", "h:2:-1".
    std::string name() const;
    static VarId parse(const std::string& name);

  private:
    explicit constexpr VarId(uint64_t k) : key_(k) {}

    static VarId indexed(Family f, int i) {
        if (i < 1) fail(Errc::BadInput, "variable index must be >= 1");
        return VarId((uint64_t(f) << 61) | uint32_t(i));
    }

    // Order-preserving map Z -> [0, 2^32).
    static uint64_t bias32(int v) { return uint64_t(int64_t(v) - INT32_MIN) & 0xffffffffu; }
    static int unbias32(uint32_t u) { return int(int64_t(u) + INT32_MIN); }

    uint64_t key_;
};

} // namespace genchar

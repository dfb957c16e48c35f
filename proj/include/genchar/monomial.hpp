#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "genchar/varid.hpp"

namespace genchar {

// Bitmask over Family values; used to select variable subsets for degrees,
// truncation and substitution.
using FamilyMask = uint32_t;

constexpr FamilyMask fam_mask(Family f) { return FamilyMask(1) << int(f); }
constexpr FamilyMask FAM_NONE = 0;
constexpr FamilyMask FAM_ALL = 0x7f;

// A monomial is a finite exponent map VarId -> int, stored as a sorted
// vector without zero exponents. Negative exponents are allowed for the
// Laurent families X and Y only; callers enforce that at construction time
// (Poly::var / arithmetic keeps the invariant).
class Monomial {
  public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries); // sorts, drops zeros

    static Monomial one() { return Monomial(); }
    static Monomial var(VarId v, int exp = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    int exponent(VarId v) const;

    // Sum of exponents over the selected families.
    long degree(FamilyMask families = FAM_ALL) const;
    bool has_family(FamilyMask families) const;
    bool has_negative_exponent(FamilyMask families = FAM_ALL) const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const; // negates all exponents

    bool operator==(const Monomial& o) const { return entries_ == o.entries_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    uint64_t hash() const { return hash_; }

    // Canonical order: total degree descending, then lexicographic on the
    // variable list (family order X<Y<U<V<T<C<H, index ascending), higher
    // exponent first. Returns true if *this precedes o in canonical listing.
    bool precedes(const Monomial& o) const;

  private:
    void rehash();

    std::vector<Entry> entries_;
    uint64_t hash_ = 1469598103934665603ull;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return size_t(m.hash()); }
};

} // namespace genchar

#pragma once

#include <map>

#include "genchar/json_io.hpp"
#include "genchar/poly.hpp"

namespace genchar {

enum class CKind { Symbolic, Zeros, Explicit };

// A doubly infinite parameter sequence (c_m). Lookups go through an
// accumulated shift (tau), an optional reversal (c~_m = c_{-m-1}), an
// optional cut (c_m = 0 below index 0), and finally the kind rule:
// symbolic c_m indeterminates (with optional pinned values), all zeros, or
// an explicit table defaulting to 0.
class CSpec {
  public:
    static CSpec symbolic() { return CSpec(CKind::Symbolic); }
    static CSpec zeros() { return CSpec(CKind::Zeros); }
    static CSpec explicit_values(std::map<int, Rational> values);

    CSpec with_cut(bool cut = true) const;
    // Pin one index to a rational (applied to the underlying index); used
    // for hypotheses like c_0 = 0 on an otherwise symbolic sequence.
    CSpec with_value(int underlying_index, const Rational& v) const;

    CSpec tau(int r) const;
    CSpec reversed() const;

    CKind kind() const { return kind_; }
    bool cut() const { return cut_; }

    // Index into the base sequence that lookup(m) resolves to.
    int underlying_index(int m) const;

    Poly lookup(int m) const;
    bool is_zero_at(int m) const { return lookup(m).is_zero(); }

    Json to_json() const;
    static CSpec from_json(const Json& j);

  private:
    explicit CSpec(CKind k) : kind_(k) {}

    CKind kind_;
    std::map<int, Rational> values_; // explicit table, or pinned symbolic entries
    bool cut_ = false;
    bool reversed_ = false;
    int offset_ = 0;
};

} // namespace genchar

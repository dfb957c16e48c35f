#include "genchar/frac.hpp"

#include <algorithm>

#include "genchar/errors.hpp"

namespace genchar {

Frac::Frac(Poly num, Factors den) : num_(std::move(num)) {
    for (auto& [f, e] : den) {
        if (e <= 0) continue;
        if (f.is_zero()) fail(Errc::BadInput, "zero denominator factor");
        if (f.is_rational()) {
            Rational r = f.rational_value();
            for (int k = 0; k < e; ++k) num_ *= (1 / r);
            continue;
        }
        den_.push_back({std::move(f), e});
    }
    std::sort(den_.begin(), den_.end(),
              [](const auto& a, const auto& b) { return poly_cmp(a.first, b.first) < 0; });
    size_t w = 0;
    for (size_t r = 0; r < den_.size(); ++r) {
        if (w > 0 && poly_cmp(den_[w - 1].first, den_[r].first) == 0)
            den_[w - 1].second += den_[r].second;
        else
            den_[w++] = den_[r];
    }
    den_.resize(w);
    reduce();
}

void Frac::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    Factors kept;
    for (auto& [f, e] : den_) {
        while (e > 0) {
            auto q = try_exact_divide(num_, f);
            if (!q) break;
            num_ = std::move(*q);
            --e;
        }
        if (e > 0) kept.push_back({std::move(f), e});
    }
    den_ = std::move(kept);
}

Poly Frac::den_expanded() const {
    Poly d = Poly::one();
    for (const auto& [f, e] : den_) d *= f.pow(e);
    return d;
}

const Poly& Frac::as_poly() const {
    if (!den_.empty()) fail(Errc::BadInput, "fraction has a nontrivial denominator");
    return num_;
}

Frac Frac::operator-() const {
    Frac out = *this;
    out.num_ = -out.num_;
    return out;
}

Frac Frac::operator+(const Frac& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Union denominator with per-factor max multiplicity.
    Factors uni;
    size_t i = 0, j = 0;
    while (i < den_.size() || j < o.den_.size()) {
        if (j == o.den_.size() ||
            (i < den_.size() && poly_cmp(den_[i].first, o.den_[j].first) < 0)) {
            uni.push_back(den_[i++]);
        } else if (i == den_.size() || poly_cmp(o.den_[j].first, den_[i].first) < 0) {
            uni.push_back(o.den_[j++]);
        } else {
            uni.push_back({den_[i].first, std::max(den_[i].second, o.den_[j].second)});
            ++i;
            ++j;
        }
    }
    auto complement = [&](const Factors& own) {
        Poly m = Poly::one();
        size_t k = 0;
        for (const auto& [f, e] : uni) {
            int have = 0;
            while (k < own.size() && poly_cmp(own[k].first, f) < 0) ++k;
            if (k < own.size() && poly_cmp(own[k].first, f) == 0) have = own[k].second;
            if (e > have) m *= f.pow(e - have);
        }
        return m;
    };
    Poly new_num = num_ * complement(den_) + o.num_ * complement(o.den_);
    return Frac(std::move(new_num), std::move(uni));
}

Frac Frac::operator-(const Frac& o) const { return *this + (-o); }

Frac Frac::operator*(const Frac& o) const {
    if (is_zero() || o.is_zero()) return Frac();
    Factors den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return Frac(num_ * o.num_, std::move(den));
}

Frac Frac::operator*(const Rational& r) const {
    if (r == 0) return Frac();
    Frac out = *this;
    out.num_ *= r;
    return out;
}

Frac Frac::divided_by(const Poly& factor, int e) const {
    Factors den = den_;
    den.push_back({factor, e});
    return Frac(num_, std::move(den));
}

bool Frac::operator==(const Frac& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return num_ * o.den_expanded() == o.num_ * den_expanded();
}

Poly Frac::expand_inverse_x(long order) const {
    const FamilyMask xmask = fam_mask(Family::X);
    Poly acc = num_;
    // Denominator factors only lower the X-degree, so anything already below
    // the floor can be dropped between steps.
    auto clip = [&](const Poly& p) {
        Poly out;
        for (const auto& [m, c] : p.terms())
            if (m.degree(xmask) >= -order) out.add_term(m, c);
        return out;
    };
    for (const auto& [f, e] : den_) {
        // Expect x_i - r with r free of x_i.
        VarId xv;
        bool found = false;
        for (const auto& [m, c] : f.terms())
            for (const auto& [v, ex] : m.entries())
                if (v.family() == Family::X) {
                    if (found && !(v == xv))
                        fail(Errc::BadInput, "denominator factor mixes x variables");
                    xv = v;
                    found = true;
                }
        if (!found) fail(Errc::BadInput, "denominator factor without an x variable");
        Poly r = Poly::var(xv) - f;
        if (r.degree_in(xv) != 0 || r.has_negative_exponent(xmask) ||
            f.coeff(Monomial::var(xv)) != 1)
            fail(Errc::BadInput, "denominator factor is not x_i - r");
        for (int rep = 0; rep < e; ++rep) {
            long depth = order + std::max<long>(0, acc.max_degree(xmask));
            Poly inv;       // sum_j r^j xbar^{j+1} down to the useful depth
            Poly rpow = Poly::one();
            for (long j = 0; j + 1 <= depth; ++j) {
                inv += rpow * Poly::var(xv, int(-(j + 1)));
                if (j + 1 < depth) rpow *= r;
            }
            acc = clip(acc * inv);
        }
    }
    return clip(acc);
}

} // namespace genchar

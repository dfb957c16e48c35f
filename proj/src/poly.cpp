#include "genchar/poly.hpp"

#include <algorithm>
#include <sstream>

#include "genchar/errors.hpp"
#include "genchar/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genchar {

namespace {

// Work threshold (term-count product) above which multiplication goes
// through the OpenMP kernel.
constexpr size_t kParallelMulWork = 1 << 16;

struct MonomialPrecedes {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.precedes(b); }
};

using OrderedTerms = std::map<Monomial, Rational, MonomialPrecedes>;

} // namespace

Poly Poly::constant(const Rational& r) {
    Poly p;
    if (r != 0) p.terms_.emplace(Monomial::one(), r);
    return p;
}

Poly Poly::var(VarId v, int exp) {
    if (exp < 0 && v.family() != Family::X && v.family() != Family::Y)
        fail(Errc::NegativeSeriesExponent,
             "negative exponent on non-Laurent variable " + v.name());
    Poly p;
    p.terms_.emplace(Monomial::var(v, exp), rat(1));
    return p;
}

Poly Poly::term(const Monomial& m, const Rational& coeff) {
    Poly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool Poly::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::rational_value() const {
    if (terms_.empty()) return rat(0);
    if (!is_rational()) fail(Errc::BadInput, "polynomial is not a rational constant");
    return terms_.begin()->second;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(m, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly Poly::mul_serial(const Poly& a, const Poly& b) {
    Poly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.terms_.reserve(a.terms_.size() * 2);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly Poly::mul_parallel(const Poly& a, const Poly& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<const std::pair<const Monomial, Rational>*> at;
    at.reserve(a.terms_.size());
    for (const auto& t : a.terms_) at.push_back(&t);

    int nthreads = workers();
    std::vector<Poly> partial(nthreads);
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (long i = 0; i < long(at.size()); ++i) {
        Poly& local = partial[omp_get_thread_num()];
        for (const auto& [mb, cb] : b.terms_) local.add_term(at[i]->first * mb, at[i]->second * cb);
    }
    Poly out;
    for (auto& p : partial) out += p;
    return out;
#endif
}

Poly Poly::operator*(const Poly& o) const {
    if (parallel_enabled() && terms_.size() * o.terms_.size() >= kParallelMulWork)
        return mul_parallel(*this, o);
    return mul_serial(*this, o);
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::operator*(const Rational& r) const {
    if (r == 0) return Poly();
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c *= r;
    return out;
}

Poly& Poly::operator*=(const Rational& r) {
    *this = *this * r;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e == 0) return one();
    if (e < 0) {
        if (terms_.size() != 1) fail(Errc::NonInvertibleImage, "negative power of a sum");
        const auto& [m, c] = *terms_.begin();
        Monomial mi = m.inverse();
        if (mi.has_negative_exponent(~(fam_mask(Family::X) | fam_mask(Family::Y))))
            fail(Errc::NonInvertibleImage, "variable not invertible in the Laurent ring");
        Rational ci = 1 / c;
        Poly base = term(mi, ci);
        return base.pow(-e);
    }
    Poly acc = one();
    Poly base = *this;
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

bool Poly::has_family(FamilyMask families) const {
    for (const auto& [m, c] : terms_)
        if (m.has_family(families)) return true;
    return false;
}

bool Poly::has_negative_exponent(FamilyMask families) const {
    for (const auto& [m, c] : terms_)
        if (m.has_negative_exponent(families)) return true;
    return false;
}

long Poly::max_degree(FamilyMask families) const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long md = m.degree(families);
        if (first || md > d) d = md;
        first = false;
    }
    return d;
}

long Poly::min_degree(FamilyMask families) const {
    long d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long md = m.degree(families);
        if (first || md < d) d = md;
        first = false;
    }
    return d;
}

Poly Poly::slice(FamilyMask families, long d) const {
    Poly out;
    for (const auto& [m, c] : terms_)
        if (m.degree(families) == d) out.terms_.emplace(m, c);
    return out;
}

Poly Poly::coeff_of(VarId v, int k) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != k) continue;
        std::vector<Monomial::Entry> rest;
        for (const auto& e : m.entries())
            if (e.first != v) rest.push_back(e);
        out.add_term(Monomial(std::move(rest)), c);
    }
    return out;
}

int Poly::degree_in(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

std::vector<const std::pair<const Monomial, Rational>*> Poly::sorted_terms() const {
    std::vector<const std::pair<const Monomial, Rational>*> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(&t);
    std::sort(out.begin(), out.end(),
              [](const auto* a, const auto* b) { return a->first.precedes(b->first); });
    return out;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted_terms()) {
        Rational c = t->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool unit_coeff = (c == 1) && !t->first.is_one();
        if (!unit_coeff) os << rational_to_string(c);
        bool need_star = !unit_coeff;
        for (const auto& [v, e] : t->first.entries()) {
            if (need_star) os << "*";
            os << v.name();
            if (e != 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

std::optional<Poly> try_exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail(Errc::BadInput, "division by zero polynomial");
    if (num.is_zero()) return Poly::zero();
    if (den.is_rational()) return num * (1 / den.rational_value());

    // Strip the monomial content of both operands. Content divides exactly
    // in the Laurent ring (subject to the X/Y-only rule checked at the end),
    // and content-free operands have an honest polynomial quotient, so the
    // division below runs entirely over nonnegative exponents.
    auto content = [](const Poly& p) {
        std::map<VarId, int> mins; // per-variable min exponent, absent = 0
        for (const auto& [m, c] : p.terms())
            for (const auto& [v, e] : m.entries()) mins.emplace(v, e);
        for (auto& [v, e] : mins)
            for (const auto& [m, c] : p.terms()) e = std::min(e, m.exponent(v));
        std::vector<Monomial::Entry> es;
        for (const auto& [v, e] : mins)
            if (e != 0) es.push_back({v, e});
        return Monomial(std::move(es));
    };
    Monomial cn = content(num);
    Monomial cd = content(den);
    Monomial back = cn * cd.inverse();
    if (back.has_negative_exponent(~(fam_mask(Family::X) | fam_mask(Family::Y))))
        return std::nullopt; // content quotient leaves the ring

    OrderedTerms rem;
    Monomial cni = cn.inverse();
    for (const auto& [m, c] : num.terms()) rem.emplace(m * cni, c);
    OrderedTerms d;
    Monomial cdi = cd.inverse();
    for (const auto& [m, c] : den.terms()) d.emplace(m * cdi, c);

    const Monomial& lead_m = d.begin()->first;
    const Rational& lead_c = d.begin()->second;
    Monomial lead_inv = lead_m.inverse();

    Poly quotient;
    while (!rem.empty()) {
        Monomial rm = rem.begin()->first;
        Rational rc = rem.begin()->second;
        Monomial qm = rm * lead_inv;
        if (qm.has_negative_exponent()) return std::nullopt;
        Rational qc = rc / lead_c;
        quotient.add_term(qm, qc);
        for (const auto& [dm, dc] : d) {
            Monomial m = qm * dm;
            Rational delta = -qc * dc;
            auto [it, fresh] = rem.emplace(m, delta);
            if (!fresh) {
                it->second += delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    if (!back.is_one()) {
        Poly shifted;
        for (const auto& [m, c] : quotient.terms()) shifted.add_term(m * back, c);
        return shifted;
    }
    return quotient;
}

Poly exact_divide(const Poly& num, const Poly& den) {
    auto q = try_exact_divide(num, den);
    if (!q) fail(Errc::NotDivisible, "nonzero remainder in exact division");
    return std::move(*q);
}

Poly substitute(const Poly& p, const std::map<VarId, Poly>& bindings) {
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Poly factor = Poly::constant(c);
        std::vector<Monomial::Entry> untouched;
        for (const auto& [v, e] : m.entries()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                untouched.push_back({v, e});
                continue;
            }
            const Poly& img = it->second;
            if (e < 0 && img.terms().size() != 1)
                fail(Errc::NonInvertibleImage,
                     "negative power of " + v.name() + " bound to a non-monomial");
            factor *= img.pow(e);
        }
        if (!untouched.empty()) factor *= Poly::term(Monomial(std::move(untouched)), rat(1));
        out += factor;
    }
    return out;
}

Poly poly_sum_serial(const std::vector<Poly>& parts) {
    Poly acc;
    for (const auto& p : parts) acc += p;
    return acc;
}

int poly_cmp(const Poly& a, const Poly& b) {
    auto ta = a.sorted_terms();
    auto tb = b.sorted_terms();
    for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        const Monomial& ma = ta[i]->first;
        const Monomial& mb = tb[i]->first;
        if (ma != mb) return ma.precedes(mb) ? -1 : 1;
        if (ta[i]->second != tb[i]->second) return ta[i]->second < tb[i]->second ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    return 0;
}

Poly poly_sum(const std::vector<Poly>& parts) {
#ifdef _OPENMP
    if (parallel_enabled() && parts.size() >= 4) {
        size_t total = 0;
        for (const auto& p : parts) total += p.term_count();
        if (total >= 4096) {
            int nthreads = workers();
            std::vector<Poly> partial(nthreads);
#pragma omp parallel for schedule(static) num_threads(nthreads)
            for (long i = 0; i < long(parts.size()); ++i)
                partial[omp_get_thread_num()] += parts[i];
            return poly_sum_serial(partial);
        }
    }
#endif
    return poly_sum_serial(parts);
}

} // namespace genchar

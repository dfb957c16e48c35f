#include "genchar/monomial.hpp"

#include <algorithm>

#include "genchar/errors.hpp"

namespace genchar {

namespace {

void mix(uint64_t& h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

} // namespace

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t r = 0; r < entries_.size(); ++r) {
        if (w > 0 && entries_[w - 1].first == entries_[r].first) {
            entries_[w - 1].second += entries_[r].second;
            if (entries_[w - 1].second == 0) --w;
        } else if (entries_[r].second != 0) {
            entries_[w++] = entries_[r];
        }
    }
    entries_.resize(w);
    rehash();
}

Monomial Monomial::var(VarId v, int exp) {
    if (exp == 0) return Monomial();
    return Monomial({{v, exp}});
}

int Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, const VarId& id) { return e.first < id; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

long Monomial::degree(FamilyMask families) const {
    long d = 0;
    for (const auto& [v, e] : entries_)
        if (fam_mask(v.family()) & families) d += e;
    return d;
}

bool Monomial::has_family(FamilyMask families) const {
    for (const auto& [v, e] : entries_)
        if (fam_mask(v.family()) & families) return true;
    return false;
}

bool Monomial::has_negative_exponent(FamilyMask families) const {
    for (const auto& [v, e] : entries_)
        if (e < 0 && (fam_mask(v.family()) & families)) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), ae = entries_.end();
    auto b = o.entries_.begin(), be = o.entries_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            out.entries_.push_back(*a++);
        } else if (b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.entries_.push_back({a->first, e});
            ++a;
            ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, ae);
    out.entries_.insert(out.entries_.end(), b, be);
    out.rehash();
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out;
    out.entries_ = entries_;
    for (auto& [v, e] : out.entries_) e = -e;
    out.rehash();
    return out;
}

bool Monomial::precedes(const Monomial& o) const {
    long da = degree(), db = o.degree();
    if (da != db) return da > db;
    auto a = entries_.begin(), ae = entries_.end();
    auto b = o.entries_.begin(), be = o.entries_.end();
    while (a != ae || b != be) {
        // Missing variable counts as exponent 0 at its slot.
        if (b == be || (a != ae && a->first < b->first))
            return a->second > 0; // extra positive power on the earlier var leads
        if (a == ae || b->first < a->first) return b->second < 0;
        if (a->second != b->second) return a->second > b->second;
        ++a;
        ++b;
    }
    return false; // equal
}

void Monomial::rehash() {
    hash_ = 1469598103934665603ull;
    for (const auto& [v, e] : entries_) {
        mix(hash_, v.key());
        mix(hash_, uint64_t(int64_t(e)));
    }
}

} // namespace genchar

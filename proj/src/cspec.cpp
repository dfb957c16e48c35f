#include "genchar/cspec.hpp"

#include "genchar/errors.hpp"

namespace genchar {

CSpec CSpec::explicit_values(std::map<int, Rational> values) {
    CSpec c(CKind::Explicit);
    for (auto it = values.begin(); it != values.end();) {
        if (it->second == 0)
            it = values.erase(it);
        else
            ++it;
    }
    c.values_ = std::move(values);
    return c;
}

CSpec CSpec::with_cut(bool cut) const {
    CSpec c = *this;
    c.cut_ = cut;
    return c;
}

CSpec CSpec::with_value(int underlying_index, const Rational& v) const {
    CSpec c = *this;
    c.values_[underlying_index] = v;
    return c;
}

CSpec CSpec::tau(int r) const {
    CSpec c = *this;
    c.offset_ += r;
    return c;
}

CSpec CSpec::reversed() const {
    // lookup(m) of the result must be this->lookup(-m-1); composing with the
    // internal (reversed, offset) state flips the flag and negates offset.
    CSpec c = *this;
    c.reversed_ = !reversed_;
    c.offset_ = -offset_;
    return c;
}

int CSpec::underlying_index(int m) const {
    return reversed_ ? -(m + offset_) - 1 : m + offset_;
}

Poly CSpec::lookup(int m) const {
    int idx = underlying_index(m);
    if (cut_ && idx < 0) return Poly::zero();
    switch (kind_) {
        case CKind::Zeros: return Poly::zero();
        case CKind::Explicit: {
            auto it = values_.find(idx);
            return it == values_.end() ? Poly::zero() : Poly::constant(it->second);
        }
        case CKind::Symbolic: {
            auto it = values_.find(idx);
            if (it != values_.end()) return Poly::constant(it->second);
            return Poly::var(VarId::c(idx));
        }
    }
    fail(Errc::BadInput, "corrupt CSpec");
}

Json CSpec::to_json() const {
    Json j;
    switch (kind_) {
        case CKind::Symbolic: j["kind"] = "symbolic"; break;
        case CKind::Zeros: j["kind"] = "zeros"; break;
        case CKind::Explicit: j["kind"] = "explicit"; break;
    }
    if (!values_.empty()) {
        Json vals = Json::object();
        for (const auto& [k, v] : values_) vals[std::to_string(k)] = rational_to_string(v);
        j["values"] = vals;
    }
    j["negative_cut"] = cut_;
    if (offset_ != 0) j["offset"] = offset_;
    if (reversed_) j["reversed"] = true;
    return j;
}

CSpec CSpec::from_json(const Json& j) {
    std::string kind = j.value("kind", "symbolic");
    std::map<int, Rational> values;
    if (j.contains("values"))
        for (const auto& [k, v] : j["values"].items())
            values[std::stoi(k)] = rational_from_string(v.get<std::string>());

    CSpec c = CSpec::symbolic();
    if (kind == "symbolic") {
        c = CSpec::symbolic();
        for (const auto& [k, v] : values) c = c.with_value(k, v);
    } else if (kind == "zeros") {
        c = CSpec::zeros();
    } else if (kind == "explicit") {
        c = CSpec::explicit_values(values);
    } else {
        fail(Errc::BadInput, "unknown c kind '" + kind + "'");
    }
    if (j.value("negative_cut", false)) c = c.with_cut();
    // offset/reversed mirror the internal state directly.
    c.reversed_ = j.value("reversed", false);
    if (j.contains("offset")) c.offset_ = j["offset"].get<int>();
    return c;
}

} // namespace genchar

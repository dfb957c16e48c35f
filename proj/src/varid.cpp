#include "genchar/varid.hpp"

#include <cstdlib>

namespace genchar {

std::string VarId::name() const {
    switch (family()) {
        case Family::X: return "x" + std::to_string(index());
        case Family::Y: return "y" + std::to_string(index());
        case Family::U: return "u" + std::to_string(index());
        case Family::V: return "v" + std::to_string(index());
        case Family::T: return "t";
        case Family::C: return "c" + std::to_string(index());
        case Family::H: return "h:" + std::to_string(h_r()) + ":" + std::to_string(h_s());
    }
    fail(Errc::BadInput, "corrupt VarId");
}

VarId VarId::parse(const std::string& name) {
    if (name.empty()) fail(Errc::BadInput, "empty variable name");
    if (name == "t") return VarId::t();
    auto parse_int = [&](const std::string& s) {
        if (s.empty()) fail(Errc::BadInput, "bad variable name '" + name + "'");
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (...) {
            fail(Errc::BadInput, "bad variable name '" + name + "'");
        }
        if (pos != s.size()) fail(Errc::BadInput, "bad variable name '" + name + "'");
        return int(v);
    };
    char f = name[0];
    if (f == 'h') {
        auto p1 = name.find(':');
        auto p2 = name.rfind(':');
        if (p1 == std::string::npos || p2 == p1)
            fail(Errc::BadInput, "bad h variable '" + name + "'");
        return VarId::h(parse_int(name.substr(p1 + 1, p2 - p1 - 1)), parse_int(name.substr(p2 + 1)));
    }
    int idx = parse_int(name.substr(1));
    switch (f) {
        case 'x': return VarId::x(idx);
        case 'y': return VarId::y(idx);
        case 'u': return VarId::u(idx);
        case 'v': return VarId::v(idx);
        case 'c': return VarId::c(idx);
        default: fail(Errc::BadInput, "unknown variable family in '" + name + "'");
    }
}

} // namespace genchar

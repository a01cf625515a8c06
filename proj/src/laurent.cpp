#include "qasym/laurent.hpp"

namespace qasym {

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, v] : c_) {
        BigInt a = v;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1);
        if (e == 0) {
            out += a.get_str();
        } else {
            if (!unit) out += a.get_str() + "*";
            out += (e == 1) ? "z" : "z^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace qasym

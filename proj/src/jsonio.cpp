#include "qnum/jsonio.hpp"

namespace qnum {

namespace {

Json coeff_strings(const std::vector<Int>& cs) {
    Json a = Json::array();
    for (const Int& c : cs) a.push_back(c.get_str());
    return a;
}

Json laurent(int min_exp, const std::vector<Int>& cs) {
    return Json{{"min_exp", min_exp}, {"coeffs", coeff_strings(cs)}};
}

} // namespace

Json to_json(const IntPoly& p) { return to_json(LaurentPoly(p)); }

Json to_json(const LaurentPoly& p) {
    if (p.is_zero()) return laurent(0, {});
    return laurent(p.min_exp(), p.unit().coeffs());
}

Json to_json(const RationalFunc& f) {
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const LaurentSeries& s) {
    Json j = laurent(s.min_exp(), s.coeffs());
    j["order"] = s.order();
    return j;
}

Json to_json(const QRational& v) {
    return Json{{"x", v.x.str()},
                {"num", to_json(v.value.num())},
                {"den", to_json(v.value.den())}};
}

Json to_json(const ClassicalFrieze& f) {
    Json rows = Json::array();
    for (const auto& row : f.rows()) rows.push_back(coeff_strings(row));
    return Json{{"quiddity", f.quiddity().cycle}, {"rows", rows}};
}

Json to_json(const QFrieze& f) {
    Json rows = Json::array();
    for (const auto& row : f.rows()) {
        Json r = Json::array();
        for (const IntPoly& e : row) r.push_back(to_json(e));
        rows.push_back(r);
    }
    return Json{{"quiddity", f.quiddity().cycle}, {"rows", rows}};
}

Json to_json(const QReal& v) {
    return Json{{"series", to_json(v.series)},
                {"stabilized_upto", v.stabilized_upto}};
}

Json to_json(const CheckReport& rep) {
    return Json{{"name", rep.name},
                {"unit", rep.unit},
                {"cases", rep.cases},
                {"lines", rep.lines},
                {"violations", rep.violations}};
}

} // namespace qnum

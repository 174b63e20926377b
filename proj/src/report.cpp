#include "qlfun/report.hpp"

namespace qlfun {

Json to_json(const Rational& x) { return x.to_string(); }

Json to_json(const PadicNumber& x) {
    Json j;
    j["p"] = x.prime();
    if (x.is_exact_zero()) {
        j["valuation"] = nullptr;  // exact zero: valuation +infinity
    } else {
        j["valuation"] = x.valuation();
    }
    j["unit"] = x.is_zero() ? "0" : x.unit().str();
    j["precision"] = x.precision();
    return j;
}

Json to_json(const Complex& x) { return Json{{"re", x.real()}, {"im", x.imag()}}; }

Agreement Agreement::exact(bool equal) {
    Agreement a;
    a.kind = Kind::Exact;
    a.pass = equal;
    return a;
}

Agreement Agreement::abs_error(double err, double tol) {
    Agreement a;
    a.kind = Kind::AbsError;
    a.pass = err <= tol;
    a.error = err;
    a.tolerance = tol;
    return a;
}

Agreement Agreement::padic(long achieved, long required) {
    Agreement a;
    a.kind = Kind::PadicExponent;
    a.pass = achieved >= required;
    a.exponent = achieved;
    a.required = required;
    return a;
}

Agreement Agreement::padic_info(long achieved) {
    Agreement a;
    a.kind = Kind::PadicExponent;
    a.pass = true;
    a.exponent = achieved;
    a.informational = true;
    return a;
}

Json Agreement::to_json() const {
    switch (kind) {
        case Kind::Exact:
            return Json{{"kind", "exact"}, {"equal", pass}};
        case Kind::AbsError:
            return Json{{"kind", "abs_error"}, {"error", error}, {"tolerance", tolerance}};
        case Kind::PadicExponent: {
            Json j{{"kind", "p_adic_exponent"}, {"exponent", exponent}};
            if (informational) {
                j["informational"] = true;
            } else {
                j["required"] = required;
            }
            return j;
        }
    }
    return Json();
}

void VerificationReport::add_case(Json inputs, Json lhs, Json rhs, Agreement agreement) {
    Json c;
    c["inputs"] = std::move(inputs);
    c["lhs"] = std::move(lhs);
    c["rhs"] = std::move(rhs);
    c["agreement"] = agreement.to_json();
    c["pass"] = agreement.pass;
    ok_ = ok_ && agreement.pass;
    ++case_count_;
    case_list_.push_back(std::move(c));
}

Json VerificationReport::to_json() const {
    Json j;
    j["suite"] = suite_;
    j["params"] = params_;
    j["cases"] = case_list_;
    j["ok"] = ok_;
    j["runtime_ms"] = runtime_ms_;
    if (!notes_.empty()) j["notes"] = notes_;
    return j;
}

}  // namespace qlfun

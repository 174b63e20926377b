#pragma once

#include "qlfun/domain.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qlfun {

using Json = nlohmann::json;

// Serialization of domain values (shared by reports, the CLI and the
// python bindings): Rational as "num/den", PadicNumber as the record
// {p, valuation, unit, precision}, Complex as {re, im}.
Json to_json(const Rational& x);
Json to_json(const PadicNumber& x);
Json to_json(const Complex& x);

// How closely the two sides of an identity agreed for one case.
struct Agreement {
    enum class Kind { Exact, AbsError, PadicExponent };
    Kind kind;
    bool pass;
    double error = 0.0;      // AbsError
    double tolerance = 0.0;   // AbsError
    long exponent = 0;        // PadicExponent: achieved agreement exponent
    long required = 0;        // PadicExponent: demanded exponent

    bool informational = false;  // recorded measurement, never gates ok

    static Agreement exact(bool equal);
    static Agreement abs_error(double err, double tol);
    static Agreement padic(long achieved, long required);
    static Agreement padic_info(long achieved);

    Json to_json() const;
};

// Structured outcome of an identity suite: per-case inputs, both sides,
// the achieved agreement, and an overall verdict.  Deterministic given
// inputs, precision settings and seed (runtime_ms excluded).
class VerificationReport {
public:
    VerificationReport(std::string suite, Json params)
        : suite_(std::move(suite)), params_(std::move(params)) {}

    void add_case(Json inputs, Json lhs, Json rhs, Agreement agreement);
    void add_note(std::string note) { notes_.push_back(std::move(note)); }
    void set_runtime_ms(long ms) { runtime_ms_ = ms; }

    const std::string& suite() const { return suite_; }
    bool ok() const { return ok_; }
    long cases() const { return long(case_count_); }
    long runtime_ms() const { return runtime_ms_; }

    Json to_json() const;

private:
    std::string suite_;
    Json params_;
    Json case_list_ = Json::array();
    std::vector<std::string> notes_;
    std::size_t case_count_ = 0;
    bool ok_ = true;
    long runtime_ms_ = 0;
};

}  // namespace qlfun

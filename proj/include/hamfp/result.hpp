// Error reporting for operations that can reject their input. A Failure names
// the violated constraint and carries a structured witness; Result<T> is a
// value-or-failure sum type.
#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

#include "hamfp/numeric.hpp"

namespace hamfp {

enum class Errc {
    malformed_input,
    non_monotone_moment,
    wrong_edge_count,
    divisibility_violation,
    index_pattern_violation,
    inapplicable_k,
    non_integral_coefficient,
    duality_failure,
    non_integral_restriction,
    non_integral_chern_coefficient,
    cross_check_mismatch,
    non_vanishing_negative_degree,
    unknown_graph_shape,
    odd_b,
    unsupported_dimension,
};

const char* errc_name(Errc code);

struct Failure {
    Errc code;
    std::string message;
    json detail;  // optional structured witness, null if unused

    json to_json() const {
        json j{{"error", errc_name(code)}, {"message", message}};
        if (!detail.is_null()) j["detail"] = detail;
        return j;
    }
};

template <class T>
class Result {
  public:
    Result(T value) : v_(std::move(value)) {}
    Result(Failure f) : v_(std::move(f)) {}

    bool ok() const { return std::holds_alternative<T>(v_); }
    explicit operator bool() const { return ok(); }

    const T& value() const {
        assert(ok());
        return std::get<T>(v_);
    }
    T& value() {
        assert(ok());
        return std::get<T>(v_);
    }
    const Failure& error() const {
        assert(!ok());
        return std::get<Failure>(v_);
    }

  private:
    std::variant<T, Failure> v_;
};

}  // namespace hamfp

#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

namespace gpack {

/// Value-or-failure return used for retryable outcomes (a stuck embedding, a
/// graph without a perfect matching). Faults are thrown instead.
template <class T, class E>
class Result {
 public:
  Result(T value) : state_(std::in_place_index<0>, std::move(value)) {}
  Result(E failure) : state_(std::in_place_index<1>, std::move(failure)) {}

  bool ok() const noexcept { return state_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  T& value() & {
    if (!ok()) throw std::logic_error("Result::value() on a failure");
    return std::get<0>(state_);
  }
  const T& value() const& {
    if (!ok()) throw std::logic_error("Result::value() on a failure");
    return std::get<0>(state_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result::value() on a failure");
    return std::get<0>(std::move(state_));
  }
  const E& failure() const {
    if (ok()) throw std::logic_error("Result::failure() on a value");
    return std::get<1>(state_);
  }

 private:
  std::variant<T, E> state_;
};

}  // namespace gpack

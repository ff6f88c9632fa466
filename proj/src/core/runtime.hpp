#pragma once

#include <variant>

#include "core/multivector.hpp"

namespace garank {

enum class Mode { floating, exact };

using MvFloat = Multivector<FloatComplex>;
using MvExact = Multivector<GaussianRational>;

// Mode-erased multivector for the runtime boundary (JSON, C API, CLI). The
// kernel itself stays templated.
class AnyMultivector {
 public:
  explicit AnyMultivector(MvFloat m) : v_(std::move(m)) {}
  explicit AnyMultivector(MvExact m) : v_(std::move(m)) {}

  Mode mode() const { return std::holds_alternative<MvExact>(v_) ? Mode::exact : Mode::floating; }
  const Signature& signature() const {
    return std::visit([](const auto& m) -> const Signature& { return m.signature(); }, v_);
  }

  const MvFloat& as_float() const {
    if (mode() != Mode::floating) fail(errc::mode_mismatch, "expected a float-mode multivector");
    return std::get<MvFloat>(v_);
  }
  const MvExact& as_exact() const {
    if (mode() != Mode::exact) fail(errc::mode_mismatch, "expected an exact-mode multivector");
    return std::get<MvExact>(v_);
  }

  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), v_);
  }

 private:
  std::variant<MvFloat, MvExact> v_;
};

}  // namespace garank

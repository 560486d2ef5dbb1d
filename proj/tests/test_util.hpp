#pragma once

#include <doctest.h>

#include <functional>

#include "diamaug/error.hpp"

namespace testutil {

/// Runs f and returns the code of the diamaug::Error it throws.
inline diamaug::Errc error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const diamaug::Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return diamaug::Errc::InvalidArgument;
}

}  // namespace testutil

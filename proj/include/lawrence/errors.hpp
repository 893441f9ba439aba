#pragma once

#include <stdexcept>
#include <string>

namespace lawrence {

struct NotUnimodularError : std::runtime_error {
  explicit NotUnimodularError(const std::string& what)
      : std::runtime_error(what) {}
};

struct NonGenericWeightError : std::runtime_error {
  explicit NonGenericWeightError(const std::string& what)
      : std::runtime_error(what) {}
};

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lawrence

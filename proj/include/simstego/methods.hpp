#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "simstego/decomp.hpp"

namespace simstego {

enum class Method : std::uint8_t { EbSim, EbIwsim, FibIwsim, LIwsim, Lsbr, Lsbm, Lsbmr };

inline constexpr std::array<Method, 7> kAllMethods = {Method::EbSim, Method::EbIwsim,
                                                      Method::FibIwsim, Method::LIwsim,
                                                      Method::Lsbr, Method::Lsbm, Method::Lsbmr};
inline constexpr std::array<Method, 4> kMappingMethods = {Method::EbSim, Method::EbIwsim,
                                                          Method::FibIwsim, Method::LIwsim};

std::string_view method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

constexpr bool is_mapping(Method m) noexcept {
  return m == Method::EbSim || m == Method::EbIwsim || m == Method::FibIwsim ||
         m == Method::LIwsim;
}
constexpr bool uses_iwsim(Method m) noexcept {
  return m == Method::EbIwsim || m == Method::FibIwsim || m == Method::LIwsim;
}

// Cover decomposition of a mapping method; throws InvalidArgument for baselines.
const Scheme& method_scheme(Method m);

}  // namespace simstego

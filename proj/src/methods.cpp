#include "simstego/methods.hpp"

#include "simstego/error.hpp"

namespace simstego {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::EbSim: return "eb-sim";
    case Method::EbIwsim: return "eb-iwsim";
    case Method::FibIwsim: return "fib-iwsim";
    case Method::LIwsim: return "l-iwsim";
    case Method::Lsbr: return "lsbr";
    case Method::Lsbm: return "lsbm";
    case Method::Lsbmr: return "lsbmr";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (auto m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

const Scheme& method_scheme(Method m) {
  static const Scheme eb = Scheme::extended_binary(3);
  static const Scheme fib = Scheme::fibonacci();
  static const Scheme luc = Scheme::lucas();
  switch (m) {
    case Method::EbSim:
    case Method::EbIwsim: return eb;
    case Method::FibIwsim: return fib;
    case Method::LIwsim: return luc;
    default:
      throw Error(Errc::InvalidArgument,
                  std::string(method_name(m)) + " does not use a mapping table");
  }
}

}  // namespace simstego

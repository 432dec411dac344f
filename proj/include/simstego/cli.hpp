#pragma once

#include <iosfwd>

namespace simstego {

// Exit codes: 0 ok, 1 usage, 2 capacity, 3 parse/corruption, 4 I/O.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simstego

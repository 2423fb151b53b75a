#pragma once

#include <iosfwd>

namespace racgc {

// Entry point shared by the racgc executable and the tests.
// Exit codes: 0 ok, 1 negative verdict, 2 invalid input, 3 unsupported.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace racgc

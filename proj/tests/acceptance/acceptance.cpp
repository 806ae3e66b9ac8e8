// Acceptance run: one PASS/FAIL line per criterion. Usage: acceptance [A1 A5 ...]

#include <set>
#include <string>

#include "firegrid/acceptance.hpp"

int main(int argc, char** argv) {
    std::set<std::string> want(argv + 1, argv + argc);
    return firegrid::acceptance::runCriteria(want, stdout) == 0 ? 0 : 1;
}

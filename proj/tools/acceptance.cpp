// Prints one line per acceptance criterion and exits nonzero if any fails.

#include <iostream>

#include <intersect/acceptance.hpp>

int main() {
    bool all = true;
    for (const auto& r : intersect::run_acceptance()) {
        all = all && r.pass();
        std::cout << "criterion " << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.summary() << "]\n";
        for (const auto& c : r.checks)
            if (!c.pass) std::cout << "    failed: " << c.name << " expected " << c.expected << ", got " << c.got << "\n";
    }
    return all ? 0 : 1;
}

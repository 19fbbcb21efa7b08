// Prints one line per acceptance criterion; exits non-zero if any fails.

#include <iostream>

#include "radcube/acceptance.hpp"

int main() {
    bool all = true;
    for (const auto& c : radcube::acceptance::run_all()) {
        std::cout << radcube::acceptance::summary_line(c) << "\n";
        for (const auto& item : c.items)
            if (!item.ok) std::cout << "    failed: " << item.what << ": " << item.detail << "\n";
        for (const auto& n : c.notes) std::cout << "    note: " << n << "\n";
        all = all && c.passed();
    }
    return all ? 0 : 1;
}

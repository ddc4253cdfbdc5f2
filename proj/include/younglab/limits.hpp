#pragma once

#include <string_view>

namespace younglab {

// Upper bounds on the degree n accepted by the enumeration-heavy entry
// points. Defaults can be replaced process-wide with YOUNGLAB_MAX_N.
struct Limits {
    int combinatorics = 20;  // partitions, tableaux, flows
    int characters = 10;     // class functions, character tables
    int forms = 6;           // polynomial spaces (n! monomials at worst)
};

// Defaults, overridden by the environment variable if it parses as an int.
Limits limits_from_env();

// Throws Error{LimitExceeded} when n > cap.
void check_limit(int n, int cap, std::string_view what);

}  // namespace younglab

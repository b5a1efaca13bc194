#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace odyn {

// All identifiers are opaque, case-sensitive strings; canonical order is
// lexicographic string order throughout.
using Id = std::string;

using IdSet = std::set<Id>;

// Thrown on precondition violations (mismatched contexts, unknown ids, ...).
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed the configured size budget.
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

// Validators report problems as diagnostic strings instead of throwing.
using Diagnostics = std::vector<std::string>;

}  // namespace odyn

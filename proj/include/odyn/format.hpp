#pragma once

#include <iosfwd>
#include <optional>

#include "odyn/family.hpp"

namespace odyn {

// Parse failure with the 1-based line number it was detected on.
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what)
        : error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Parsed form of a ".odf" family description file.
struct FamilyDocument {
    struct RealDecl {
        Id component;
        Id param;
        Assignment assignment;
    };

    Id name;
    std::map<Id, Graph> graphs;
    std::map<Id, Clock> clocks;
    std::map<Id, Id> clock_motor;  // clock id -> graph id
    std::map<Id, OpenDynamics> odyns;
    std::map<Id, Id> odyn_motor;
    std::map<Id, Id> odyn_clock;
    std::map<Id, Id> components;  // family index -> odyn id
    std::optional<Id> sync_index;
    std::map<Id, Synchronization> syncs;
    std::map<Id, RealDecl> reals;
    // interaction tuples: index -> (realization id, parameter)
    std::vector<std::map<Id, std::pair<Id, Id>>> tuples;
};

FamilyDocument parse_family(const std::string& text);

// Builds the dynamic family, resolving realization references against the
// canonical enumeration and rejecting references to non-realizations.
DynamicFamily to_family(const FamilyDocument& doc);

// Canonical text for an open dynamics: one FAMILY/GRAPH/CLOCK/ODYN
// document with sorted states, transitions and parameters.
std::string serialize_open_dynamics(const OpenDynamics& d);

// Reads the single ODYN block of a parsed document back as a value.
OpenDynamics single_odyn(const FamilyDocument& doc);

}  // namespace odyn

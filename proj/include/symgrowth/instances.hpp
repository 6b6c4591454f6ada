#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "symgrowth/gset.hpp"
#include "symgrowth/set_arith.hpp"

namespace symgrowth {

struct ExplicitSet {
    std::vector<Element> elements;
};
struct SubgroupSet {
    std::vector<Element> generators;
};
/// Union of the left cosets rH, H generated by `generators`.
struct CosetUnion {
    std::vector<Element> generators;
    std::vector<Element> representatives;
};
/// {start, start+1, ..., start+length-1} in a cyclic group.
struct IntervalSet {
    std::uint64_t start = 0;
    std::uint64_t length = 0;
};
/// Words of length <= radius in the generators (no inverses added); radius 0 is {1}.
struct BallSet {
    std::vector<Element> generators;
    unsigned radius = 0;
};
struct RandomSet {
    std::uint64_t size = 0;
    std::uint64_t seed = 0;
};
/// A subgroup with `swaps` members exchanged for non-members.
struct PerturbedSubgroup {
    std::vector<Element> generators;
    std::uint64_t swaps = 0;
    std::uint64_t seed = 0;
};

using SetGenerator =
    std::variant<ExplicitSet, SubgroupSet, CosetUnion, IntervalSet, BallSet, RandomSet, PerturbedSubgroup>;

/// {"group": {...}, "set": {...}}.
struct InstanceSpec {
    GroupPtr group;
    SetGenerator set;

    json to_json() const;
    static InstanceSpec from_json(const json& value, const GroupOptions& options = {});
};

GSet generate(const InstanceSpec& spec);

GSet subgroup_closure(const GroupPtr& group, const std::vector<Element>& generators);
GSet cayley_ball(const GroupPtr& group, const std::vector<Element>& generators, unsigned radius);

/// `size` distinct elements from the counter-based stream of `seed`:
/// draw i is counter_draw(seed, i) mod |G|, duplicates skipped.
GSet random_set(const GroupPtr& group, std::uint64_t size, std::uint64_t seed);

/// One parameter varied over a list of values. `parameter` is a key of the
/// set spec ("length", "radius", "swaps", ...) or "group.<key>" for the group
/// spec (e.g. "group.n").
struct SweepGrid {
    std::string parameter;
    std::vector<std::int64_t> values;
};

struct SweepRow {
    InstanceSpec spec;
    DoublingStats stats;
};

std::vector<SweepRow> family_sweep(const json& base, const SweepGrid& grid, const GroupOptions& options = {});

}  // namespace symgrowth

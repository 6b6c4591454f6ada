#include "symgrowth/instances.hpp"

#include <algorithm>
#include <unordered_set>

#include "symgrowth/budget.hpp"
#include "symgrowth/error.hpp"
#include "symgrowth/prng.hpp"

namespace symgrowth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const json& need(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("set spec is missing '") + key + "'");
    return obj.at(key);
}

std::uint64_t need_uint(const json& obj, const char* key) {
    const auto& v = need(obj, key);
    if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        throw ParseError(std::string("set spec field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<Element> need_elements(const Group& g, const json& obj, const char* key) {
    const auto& v = need(obj, key);
    if (!v.is_array()) throw ParseError(std::string("set spec field '") + key + "' must be an array");
    std::vector<Element> out;
    for (const auto& e : v) out.push_back(g.element_from_json(e));
    return out;
}

json elements_json(const Group& g, const std::vector<Element>& elements) {
    json out = json::array();
    for (const auto e : elements) out.push_back(g.element_to_json(e));
    return out;
}

bool is_cyclic(const Group& g) { return g.spec().at("type") == "cyclic"; }

}  // namespace

GSet subgroup_closure(const GroupPtr& group, const std::vector<Element>& generators) {
    const auto& g = *group;
    for (const auto x : generators) g.check(x);
    // Right multiplication by generators from 1 reaches the generated
    // submonoid, which is the subgroup in a finite group.
    std::unordered_set<Element> seen{g.identity()};
    std::vector<Element> frontier{g.identity()};
    while (!frontier.empty()) {
        charge_pairs(saturating_mul(seen.size(), generators.size()), "subgroup_closure");
        std::vector<Element> next;
        for (const auto x : frontier) {
            for (const auto s : generators) {
                const auto y = g.multiply(x, s);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return GSet(group, std::vector<Element>(seen.begin(), seen.end()));
}

GSet cayley_ball(const GroupPtr& group, const std::vector<Element>& generators, unsigned radius) {
    const auto& g = *group;
    for (const auto x : generators) g.check(x);
    std::vector<Element> ball{g.identity()};
    std::vector<Element> frontier{g.identity()};
    for (unsigned r = 0; r < radius && !frontier.empty(); ++r) {
        charge_pairs(saturating_mul(frontier.size(), generators.size()), "cayley_ball");
        std::vector<Element> next;
        for (const auto x : frontier) {
            for (const auto s : generators) {
                const auto y = g.multiply(x, s);
                const auto it = std::lower_bound(ball.begin(), ball.end(), y);
                if (it == ball.end() || *it != y) {
                    ball.insert(it, y);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return GSet::from_sorted_unique(group, std::move(ball));
}

GSet random_set(const GroupPtr& group, std::uint64_t size, std::uint64_t seed) {
    if (size > group->order()) throw InvalidArgument("random set larger than the group");
    std::vector<Element> chosen;
    std::vector<Element> sorted;
    for (std::uint64_t i = 0; chosen.size() < size; ++i) {
        const Element x{counter_draw(seed, i) % group->order()};
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
        if (it != sorted.end() && *it == x) continue;
        sorted.insert(it, x);
        chosen.push_back(x);
    }
    return GSet::from_sorted_unique(group, std::move(sorted));
}

GSet generate(const InstanceSpec& spec) {
    const auto& group = spec.group;
    const auto& g = *group;
    return std::visit(
        overloaded{
            [&](const ExplicitSet& s) { return GSet(group, s.elements); },
            [&](const SubgroupSet& s) { return subgroup_closure(group, s.generators); },
            [&](const CosetUnion& s) {
                const auto h = subgroup_closure(group, s.generators);
                std::vector<Element> out;
                for (const auto r : s.representatives)
                    for (const auto x : h) out.push_back(g.multiply(r, x));
                return GSet(group, std::move(out));
            },
            [&](const IntervalSet& s) {
                if (!is_cyclic(g)) throw InvalidArgument("interval generator requires a cyclic group");
                if (s.length > g.order()) throw InvalidArgument("interval longer than the group");
                std::vector<Element> out;
                for (std::uint64_t j = 0; j < s.length; ++j) out.push_back(Element{(s.start + j) % g.order()});
                return GSet(group, std::move(out));
            },
            [&](const BallSet& s) { return cayley_ball(group, s.generators, s.radius); },
            [&](const RandomSet& s) { return random_set(group, s.size, s.seed); },
            [&](const PerturbedSubgroup& s) {
                const auto h = subgroup_closure(group, s.generators);
                std::vector<Element> current(h.begin(), h.end());
                // Stream draws alternate: one picks the member to drop, the
                // following ones pick a replacement outside the set.
                std::uint64_t counter = 0;
                for (std::uint64_t j = 0; j < s.swaps; ++j) {
                    if (current.size() > 1) {
                        const auto idx = counter_draw(s.seed, counter++) % current.size();
                        current.erase(current.begin() + static_cast<std::ptrdiff_t>(idx));
                    }
                    if (current.size() >= g.order()) continue;
                    for (;;) {
                        const Element x{counter_draw(s.seed, counter++) % g.order()};
                        const auto it = std::lower_bound(current.begin(), current.end(), x);
                        if (it != current.end() && *it == x) continue;
                        current.insert(it, x);
                        break;
                    }
                }
                return GSet::from_sorted_unique(group, std::move(current));
            },
        },
        spec.set);
}

json InstanceSpec::to_json() const {
    const auto& g = *group;
    json set_json = std::visit(
        overloaded{
            [&](const ExplicitSet& s) -> json {
                return {{"type", "explicit"}, {"elements", elements_json(g, s.elements)}};
            },
            [&](const SubgroupSet& s) -> json {
                return {{"type", "subgroup"}, {"generators", elements_json(g, s.generators)}};
            },
            [&](const CosetUnion& s) -> json {
                return {{"type", "coset_union"},
                        {"generators", elements_json(g, s.generators)},
                        {"representatives", elements_json(g, s.representatives)}};
            },
            [&](const IntervalSet& s) -> json {
                return {{"type", "interval"}, {"start", s.start}, {"length", s.length}};
            },
            [&](const BallSet& s) -> json {
                return {{"type", "ball"}, {"generators", elements_json(g, s.generators)}, {"radius", s.radius}};
            },
            [&](const RandomSet& s) -> json { return {{"type", "random"}, {"size", s.size}, {"seed", s.seed}}; },
            [&](const PerturbedSubgroup& s) -> json {
                return {{"type", "perturbed_subgroup"},
                        {"generators", elements_json(g, s.generators)},
                        {"swaps", s.swaps},
                        {"seed", s.seed}};
            },
        },
        set);
    return {{"group", g.spec()}, {"set", set_json}};
}

InstanceSpec InstanceSpec::from_json(const json& value, const GroupOptions& options) {
    if (!value.is_object() || !value.contains("group") || !value.contains("set")) {
        throw ParseError("instance must be an object with 'group' and 'set'");
    }
    auto group = group_from_json(value.at("group"), options);
    const auto& g = *group;
    const auto& s = value.at("set");
    if (!s.is_object() || !s.contains("type") || !s.at("type").is_string()) {
        throw ParseError("set spec must be an object with a string 'type'");
    }
    const auto type = s.at("type").get<std::string>();
    SetGenerator gen;
    if (type == "explicit") {
        gen = ExplicitSet{need_elements(g, s, "elements")};
    } else if (type == "subgroup") {
        gen = SubgroupSet{need_elements(g, s, "generators")};
    } else if (type == "coset_union") {
        gen = CosetUnion{need_elements(g, s, "generators"), need_elements(g, s, "representatives")};
    } else if (type == "interval") {
        if (!is_cyclic(g)) throw InvalidArgument("interval generator requires a cyclic group");
        gen = IntervalSet{need_uint(s, "start"), need_uint(s, "length")};
    } else if (type == "ball") {
        const auto radius = need_uint(s, "radius");
        if (radius > 1'000'000) throw InvalidArgument("ball radius too large");
        gen = BallSet{need_elements(g, s, "generators"), static_cast<unsigned>(radius)};
    } else if (type == "random") {
        gen = RandomSet{need_uint(s, "size"), need_uint(s, "seed")};
    } else if (type == "perturbed_subgroup") {
        gen = PerturbedSubgroup{need_elements(g, s, "generators"), need_uint(s, "swaps"), need_uint(s, "seed")};
    } else {
        throw ParseError("unknown set generator '" + type + "'");
    }
    return InstanceSpec{std::move(group), std::move(gen)};
}

std::vector<SweepRow> family_sweep(const json& base, const SweepGrid& grid, const GroupOptions& options) {
    if (grid.parameter.empty()) throw InvalidArgument("sweep parameter name is empty");
    std::vector<SweepRow> rows;
    for (const auto v : grid.values) {
        json spec = base;
        if (grid.parameter.rfind("group.", 0) == 0) {
            spec["group"][grid.parameter.substr(6)] = v;
        } else {
            const auto key = grid.parameter.rfind("set.", 0) == 0 ? grid.parameter.substr(4) : grid.parameter;
            spec["set"][key] = v;
        }
        auto instance = InstanceSpec::from_json(spec, options);
        auto stats = doubling_stats(generate(instance));
        rows.push_back(SweepRow{std::move(instance), std::move(stats)});
    }
    return rows;
}

}  // namespace symgrowth

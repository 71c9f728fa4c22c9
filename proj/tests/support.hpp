#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "mpg/arena.hpp"
#include "mpg/energy.hpp"
#include "mpg/potentials.hpp"

namespace mpg::test {

inline Arena data(const std::string& name)
{
    return load_arena(std::string(MPG_TEST_DATA) + "/" + name);
}

inline VertexId vid(const Arena& a, const std::string& name)
{
    return a.find_vertex(name).value();
}

/// Energy function from (name, level) pairs; unnamed vertices get 0 and a
/// negative level stands for Top.
inline EnergyFunction levels(const Arena& a, std::initializer_list<std::pair<const char*, Level>> xs)
{
    EnergyFunction f(a.num_vertices(), energy_cap(a));
    for (const auto& [n, l] : xs) f[vid(a, n)] = l < 0 ? EnergyValue::top() : EnergyValue::finite(l);
    return f;
}

/// Strategy from (vertex, successor) pairs.
inline PositionalStrategy strategy(const Arena& a, std::initializer_list<std::pair<const char*, const char*>> xs)
{
    PositionalStrategy s(a.num_vertices());
    for (const auto& [u, v] : xs) s.set(vid(a, u), vid(a, v));
    return s;
}

} // namespace mpg::test

#pragma once

#include <string>

#include "rotsys/graph.hpp"

namespace rotsys {

/// ceil(num / den) for den > 0, exact for negative numerators.
long long ceil_div(long long num, long long den);

/// Euler lower bound on the orientable (or nonorientable) genus of a simple
/// connected graph: ceil((E - 3V + 6) / 6), resp. / 3.
long long euler_lower_bound(const Graph& g, bool orientable);

enum class Family { complete, octahedral, ham_complement };

Family parse_family(const std::string& name);

/// Closed-form orientable Euler bound for a circulant family, indexed by
/// vertex count:
///   complete       ceil((n-3)(n-4)/12)
///   octahedral     ceil((h-1)(h-3)/3), h = n/2
///   ham_complement ceil((n^2-9n+12)/12)
long long closed_form_bound(Family family, int vertices);

/// The family member as a circulant graph.
Graph family_graph(Family family, int vertices);

}  // namespace rotsys

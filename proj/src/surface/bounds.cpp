#include "rotsys/bounds.hpp"

namespace rotsys {

long long ceil_div(long long num, long long den)
{
    long long q = num / den;
    if (num % den != 0 && num > 0)
        ++q;
    return q;
}

long long euler_lower_bound(const Graph& g, bool orientable)
{
    const long long excess = static_cast<long long>(g.edge_count()) - 3LL * g.vertex_count() + 6;
    return ceil_div(excess, orientable ? 6 : 3);
}

Family parse_family(const std::string& name)
{
    if (name == "complete")
        return Family::complete;
    if (name == "octahedral")
        return Family::octahedral;
    if (name == "ham_complement" || name == "hamcomp")
        return Family::ham_complement;
    throw InputError("unknown family '" + name + "'");
}

long long closed_form_bound(Family family, int vertices)
{
    const long long n = vertices;
    switch (family) {
    case Family::complete:
        if (n < 3)
            throw InputError("complete family needs n >= 3");
        return ceil_div((n - 3) * (n - 4), 12);
    case Family::octahedral: {
        if (n < 4 || n % 2 != 0)
            throw InputError("octahedral family needs an even vertex count >= 4");
        const long long h = n / 2;
        return ceil_div((h - 1) * (h - 3), 3);
    }
    case Family::ham_complement:
        if (n < 5)
            throw InputError("Hamiltonian cycle complement family needs n >= 5");
        return ceil_div(n * n - 9 * n + 12, 12);
    }
    return 0;
}

Graph family_graph(Family family, int vertices)
{
    switch (family) {
    case Family::complete:
        return complete_graph(vertices);
    case Family::octahedral:
        return octahedral_graph(vertices);
    case Family::ham_complement:
        return hamiltonian_complement(vertices);
    }
    return {};
}

}  // namespace rotsys

// Lines and conics on a generic sextic fourfold X in P^5 that meet a fixed
// P^3, then the genus-0 GW invariants they predict.

#include <iostream>

#include <intersect/counts.hpp>
#include <intersect/gwdt.hpp>

using namespace intersect;

int main() {
    const HypersurfaceProblem lines{5, 6, 1, 2};
    const HypersurfaceProblem conics{5, 6, 2, 2};

    const SpacePtr hilb = parameter_space(conics);
    std::cout << "conics in P^5 live on " << hilb->to_string() << ", dim " << hilb->dim() << "\n";
    std::cout << "incidence class: " << to_string(incidence_class(hilb, 2)) << "\n";
    std::cout << "  from the universal conic: " << to_string(incidence_via_universal_curve(2)) << "\n";

    const Rational n1 = count_lines(lines);
    const Rational n2 = count_conics(conics);
    std::cout << "lines meeting a P^3:  " << n1 << " (bott: " << count_lines(lines, Backend::Bott) << ")\n";
    std::cout << "conics meeting a P^3: " << n2 << " (bott: " << count_conics(conics, Backend::Bott) << ")\n";

    InvariantTable dt;
    dt.values = {{1, n1}, {2, n2}};
    const InvariantTable gw = gw_from_dt(dt);
    for (const auto& [d, v] : gw.values) std::cout << "GW degree " << d << ": " << v << "\n";
    std::cout << "multiple-cover share in degree 2: " << cover_component_contribution(n1) << "\n";
}

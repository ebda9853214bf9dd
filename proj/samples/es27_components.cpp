// Components of Z_8[ES27] and the unit generators of its 3x3 block.
#include <zng/group_library.hpp>
#include <zng/unit_synth.hpp>

#include <iostream>

int main() {
    using namespace zng;
    auto G = extraspecial27();
    ZGRing R(G, Zmod(2, 3));
    auto comps = decompose(R, strong_shoda_pairs(G));
    for (auto& comp : comps) {
        std::cout << "component " << comp.id << ": M_" << comp.matrix_size << "(" << comp.ring.describe() << ")\n";
        if (comp.matrix_size < 3) continue;
        attach_iso(comp, R);
        const auto kit = build_matrix_units(comp);
        for (const auto& g : diagonal_generators(comp, kit))
            std::cout << "  " << g.label << " order " << g.declared_order.value_or(-1) << "\n";
        std::cout << "  " << elementary_generators(comp, kit).size() << " elementary generators\n";
    }
}

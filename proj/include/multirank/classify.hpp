#pragma once

#include <vector>

#include "multirank/partition.hpp"
#include "multirank/profile.hpp"

namespace multirank {

// For a pure state: GME iff no flattening has rank 1; fully product iff every
// single-party flattening has rank 1.
struct EntanglementVerdict {
    bool gme = false;
    bool fully_product = false;
    // Cuts with rank 1, in profile order, each with |I| <= floor(n/2).
    std::vector<Bipartition> product_cuts;
    // Ranks came from random substitution: the verdict holds for parameter
    // values outside a measure-zero set, with the reported failure bound.
    bool generic = false;
};

bool is_gme(const MultirankProfile& profile);
bool is_fully_product(const MultirankProfile& profile);
EntanglementVerdict verdict(const MultirankProfile& profile);

// "GME", "fully product" or "biseparable".
const char* verdict_label(const EntanglementVerdict& v);

}  // namespace multirank

#pragma once

#include <vector>

#include "neighborly/subset.hpp"

namespace neighborly {

struct PdReg {
    int pd = 0;
    int reg = 0;
    bool operator==(const PdReg&) const = default;
};

struct FHFormula {
    std::vector<long long> f;
    std::vector<long long> h;
    long long euler = 1;
    long long reduced_euler = 0;
    long long top_faces = 0;
};

struct InvariantBundle {
    int n = 0;
    int height = 0;
    int bight = 0;
    int pd = 0;
    int reg = 0;
    int depth = 0;
    int dim = 0;
    bool is_cm = false;
    FHFormula fh;  // populated for n >= 7
};

// height(NI(P_n^2)) = ceil(n/5), n >= 3
int height_formula(int n);

// pd and reg of S/NI(P_n^2); closed case table on n = 6p + d for n >= 7,
// small-n lookup for 3 <= n <= 6
PdReg pdreg_formula(int n);

// pd and reg of S/I_t(P_n), n = p(t+1) + d
PdReg pdpath_formula(int n, int t);

// pd and reg of S/(I_5(P_{2..n-1}) + (x_1 x_2 x_3)), n >= 7
PdReg lemma_reg1_formula(int n);

// literal evaluation of the two-level mapping-cone recursion, n >= 7
PdReg mapping_cone_recursion(int n);

FHFormula fh_formula(int n);

bool cm_characterization(int n);

int bight_formula(int n);

InvariantBundle invariant_bundle(int n);

}  // namespace neighborly

#include "tiling/catalog.hpp"

namespace tiling {
namespace detail {

// 40 sporadic angle tuples that survive all three criteria.
const std::array<BuiltinRow, 40> kSporadic40 = {{
    {{{1, 4}, {1, 3}, {1, 3}, {1, 4}, {1, 2}, {2, 3}}},
    {{{5, 24}, {3, 8}, {1, 3}, {1, 4}, {13, 24}, {5, 8}}},
    {{{1, 4}, {1, 2}, {1, 2}, {1, 3}, {1, 3}, {1, 2}}},
    {{{7, 24}, {11, 24}, {13, 24}, {7, 24}, {1, 3}, {1, 2}}},
    {{{1, 5}, {1, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 3}}},
    {{{1, 5}, {1, 5}, {4, 15}, {4, 15}, {3, 5}, {11, 15}}},
    {{{1, 5}, {1, 5}, {1, 3}, {1, 3}, {3, 5}, {3, 5}}},
    {{{1, 3}, {1, 3}, {3, 5}, {1, 3}, {2, 5}, {2, 5}}},
    {{{4, 15}, {8, 15}, {1, 3}, {1, 3}, {7, 15}, {7, 15}}},
    {{{1, 7}, {3, 7}, {1, 3}, {1, 3}, {4, 7}, {4, 7}}},
    {{{2, 7}, {2, 7}, {1, 3}, {1, 3}, {3, 7}, {5, 7}}},
    {{{1, 5}, {2, 5}, {1, 2}, {1, 3}, {1, 3}, {2, 3}}},
    {{{2, 15}, {7, 15}, {1, 2}, {1, 3}, {2, 5}, {3, 5}}},
    {{{2, 15}, {7, 15}, {31, 60}, {19, 60}, {5, 12}, {7, 12}}},
    {{{1, 5}, {2, 5}, {7, 12}, {1, 4}, {5, 12}, {7, 12}}},
    {{{13, 60}, {23, 60}, {7, 12}, {1, 4}, {2, 5}, {3, 5}}},
    {{{1, 5}, {3, 5}, {1, 3}, {1, 3}, {1, 2}, {1, 2}}},
    {{{3, 10}, {7, 10}, {1, 3}, {1, 3}, {2, 5}, {2, 5}}},
    {{{1, 5}, {1, 5}, {2, 5}, {1, 3}, {1, 2}, {2, 3}}},
    {{{1, 6}, {7, 30}, {11, 30}, {11, 30}, {1, 2}, {2, 3}}},
    {{{1, 5}, {1, 5}, {9, 20}, {17, 60}, {11, 20}, {37, 60}}},
    {{{1, 5}, {1, 3}, {1, 2}, {1, 3}, {2, 5}, {3, 5}}},
    {{{1, 6}, {11, 30}, {1, 2}, {1, 3}, {13, 30}, {17, 30}}},
    {{{1, 6}, {11, 30}, {29, 60}, {7, 20}, {5, 12}, {7, 12}}},
    {{{1, 5}, {1, 3}, {1, 3}, {1, 5}, {1, 2}, {4, 5}}},
    {{{7, 60}, {5, 12}, {1, 3}, {1, 5}, {7, 12}, {43, 60}}},
    {{{1, 5}, {2, 5}, {2, 5}, {1, 5}, {1, 2}, {2, 3}}},
    {{{1, 5}, {2, 5}, {1, 3}, {1, 3}, {1, 2}, {3, 5}}},
    {{{7, 30}, {13, 30}, {3, 10}, {3, 10}, {1, 2}, {3, 5}}},
    {{{1, 4}, {7, 20}, {1, 3}, {1, 3}, {9, 20}, {13, 20}}},
    {{{1, 5}, {1, 2}, {3, 5}, {1, 5}, {1, 3}, {2, 3}}},
    {{{1, 5}, {1, 2}, {17, 30}, {7, 30}, {3, 10}, {7, 10}}},
    {{{3, 20}, {11, 20}, {17, 30}, {7, 30}, {7, 20}, {13, 20}}},
    {{{1, 5}, {1, 2}, {1, 2}, {1, 3}, {2, 5}, {1, 2}}},
    {{{1, 5}, {1, 2}, {7, 15}, {11, 30}, {11, 30}, {8, 15}}},
    {{{4, 15}, {13, 30}, {17, 30}, {4, 15}, {2, 5}, {1, 2}}},
    {{{4, 15}, {13, 30}, {3, 5}, {3, 10}, {11, 30}, {7, 15}}},
    {{{4, 15}, {17, 30}, {2, 5}, {3, 10}, {11, 30}, {8, 15}}},
    {{{3, 10}, {2, 5}, {3, 5}, {3, 10}, {1, 3}, {1, 2}}},
    {{{1, 3}, {2, 5}, {2, 5}, {1, 3}, {1, 2}, {2, 5}}},
}};

// The two sporadics ruled out only by a linear-program certificate.
const std::array<BuiltinRow, 2> kLpExtras = {{
    {{{3, 20}, {11, 20}, {11, 20}, {1, 4}, {1, 3}, {2, 3}}},
    {{{11, 60}, {31, 60}, {11, 20}, {1, 4}, {3, 10}, {7, 10}}},
}};

}  // namespace detail
}  // namespace tiling

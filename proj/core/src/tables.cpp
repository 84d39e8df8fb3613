#include "etaq/theta.hpp"

// Generated from the published 96-entry tables; do not edit by hand.
// Regenerate and update the checksum test together.

namespace etaq {

namespace {

constexpr std::array<std::pair<int, int>, 96> kOffsets = {{
    {-23, 2}, {-23, 4}, {-23, 12}, {-23, 14}, {-23, 22}, {-23, 24}, {-21, 2}, {-21, 4},
    {-21, 14}, {-21, 22}, {-13, 2}, {-13, 4}, {-13, 12}, {-13, 14}, {-13, 22}, {-13, 24},
    {-11, 2}, {-11, 4}, {-11, 12}, {-11, 14}, {-11, 22}, {-11, 24}, {-3, 2}, {-3, 4},
    {-3, 14}, {-3, 22}, {-1, 2}, {-1, 4}, {-1, 12}, {-1, 14}, {-1, 22}, {-1, 24},
    {1, 0}, {1, 2}, {1, 4}, {1, 10}, {1, 12}, {1, 14}, {1, 20}, {1, 22},
    {1, 24}, {3, 2}, {3, 4}, {3, 10}, {3, 14}, {3, 20}, {3, 22}, {5, 2},
    {5, 4}, {5, 12}, {5, 14}, {5, 22}, {5, 24}, {11, 0}, {11, 2}, {11, 4},
    {11, 10}, {11, 12}, {11, 14}, {11, 20}, {11, 22}, {11, 24}, {13, 0}, {13, 2},
    {13, 4}, {13, 10}, {13, 12}, {13, 14}, {13, 20}, {13, 22}, {13, 24}, {15, 2},
    {15, 4}, {15, 14}, {15, 22}, {21, 2}, {21, 4}, {21, 10}, {21, 14}, {21, 20},
    {21, 22}, {23, 0}, {23, 2}, {23, 4}, {23, 10}, {23, 12}, {23, 14}, {23, 20},
    {23, 22}, {23, 24}, {25, 2}, {25, 4}, {25, 12}, {25, 14}, {25, 22}, {25, 24},
}};

constexpr std::array<GaussUnit, 96> kAlpha = {{
    {0, 1}, {0, 1}, {-1, 0}, {0, -1}, {0, -1}, {1, 0}, {0, 0}, {-1, 0},
    {-1, 0}, {0, 0}, {0, -1}, {0, -1}, {-1, 0}, {0, 1}, {0, 1}, {1, 0},
    {0, 0}, {0, 1}, {0, 0}, {0, -1}, {0, 0}, {1, 0}, {1, 0}, {-1, 0},
    {-1, 0}, {1, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 1}, {0, 0}, {1, 0},
    {1, 0}, {0, 1}, {0, -1}, {0, 1}, {-1, 0}, {0, 1}, {0, -1}, {0, -1},
    {-1, 0}, {-1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {-1, 0}, {0, 1},
    {0, 1}, {1, 0}, {0, -1}, {0, -1}, {-1, 0}, {1, 0}, {0, -1}, {0, 1},
    {0, -1}, {-1, 0}, {0, -1}, {0, 1}, {0, 1}, {-1, 0}, {-1, 0}, {0, -1},
    {0, 0}, {0, -1}, {1, 0}, {0, 0}, {0, 1}, {0, 1}, {0, 0}, {-1, 0},
    {1, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {-1, 0}, {1, 0}, {-1, 0},
    {1, 0}, {-1, 0}, {0, 1}, {0, 0}, {0, 1}, {1, 0}, {0, 0}, {0, -1},
    {0, -1}, {0, 0}, {0, -1}, {0, -1}, {1, 0}, {0, 1}, {0, 1}, {-1, 0},
}};

constexpr std::array<GaussUnit, 96> kBeta = {{
    {0, -1}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0}, {1, 0}, {1, 0},
    {1, 0}, {1, 0}, {0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, -1}, {0, 0},
    {0, 1}, {0, -1}, {-1, 0}, {0, 1}, {0, -1}, {-1, 0}, {-1, 0}, {0, 0},
    {0, 0}, {-1, 0}, {0, -1}, {0, 1}, {-1, 0}, {0, -1}, {0, 1}, {-1, 0},
    {1, 0}, {0, 0}, {0, 1}, {0, 1}, {0, 0}, {0, -1}, {0, -1}, {0, 0},
    {1, 0}, {1, 0}, {-1, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {0, 1},
    {0, 1}, {1, 0}, {0, -1}, {0, -1}, {-1, 0}, {1, 0}, {0, 0}, {0, -1},
    {0, -1}, {0, 0}, {0, 1}, {0, 1}, {0, 0}, {1, 0}, {-1, 0}, {0, 1},
    {0, 1}, {0, -1}, {-1, 0}, {0, -1}, {0, 1}, {0, -1}, {1, 0}, {-1, 0},
    {1, 0}, {1, 0}, {-1, 0}, {0, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0},
    {0, 0}, {-1, 0}, {0, -1}, {0, -1}, {0, 1}, {-1, 0}, {0, 1}, {0, -1},
    {0, 1}, {1, 0}, {0, -1}, {0, -1}, {1, 0}, {0, 1}, {0, 1}, {-1, 0},
}};

constexpr std::array<GaussUnit, 96> kGamma = {{
    {0, -1}, {0, -1}, {-1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, 0}, {-1, 0},
    {-1, 0}, {0, 0}, {0, 1}, {0, 1}, {-1, 0}, {0, -1}, {0, -1}, {1, 0},
    {0, 0}, {0, -1}, {0, 0}, {0, 1}, {0, 0}, {1, 0}, {1, 0}, {-1, 0},
    {-1, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0}, {0, -1}, {0, 0}, {1, 0},
    {1, 0}, {0, -1}, {0, 1}, {0, -1}, {-1, 0}, {0, -1}, {0, 1}, {0, 1},
    {-1, 0}, {-1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {-1, 0}, {0, -1},
    {0, -1}, {1, 0}, {0, 1}, {0, 1}, {-1, 0}, {1, 0}, {0, 1}, {0, -1},
    {0, 1}, {-1, 0}, {0, 1}, {0, -1}, {0, -1}, {-1, 0}, {-1, 0}, {0, 1},
    {0, 0}, {0, 1}, {1, 0}, {0, 0}, {0, -1}, {0, -1}, {0, 0}, {-1, 0},
    {1, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {-1, 0}, {1, 0}, {-1, 0},
    {1, 0}, {-1, 0}, {0, -1}, {0, 0}, {0, -1}, {1, 0}, {0, 0}, {0, 1},
    {0, 1}, {0, 0}, {0, 1}, {0, 1}, {1, 0}, {0, -1}, {0, -1}, {-1, 0},
}};

constexpr std::array<GaussUnit, 96> kDelta = {{
    {0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, -1}, {0, 0}, {1, 0}, {1, 0},
    {1, 0}, {1, 0}, {0, -1}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0},
    {0, -1}, {0, 1}, {-1, 0}, {0, -1}, {0, 1}, {-1, 0}, {-1, 0}, {0, 0},
    {0, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, 0}, {0, 1}, {0, -1}, {-1, 0},
    {1, 0}, {0, 0}, {0, -1}, {0, -1}, {0, 0}, {0, 1}, {0, 1}, {0, 0},
    {1, 0}, {1, 0}, {-1, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {0, -1},
    {0, -1}, {1, 0}, {0, 1}, {0, 1}, {-1, 0}, {1, 0}, {0, 0}, {0, 1},
    {0, 1}, {0, 0}, {0, -1}, {0, -1}, {0, 0}, {1, 0}, {-1, 0}, {0, -1},
    {0, -1}, {0, 1}, {-1, 0}, {0, 1}, {0, -1}, {0, 1}, {1, 0}, {-1, 0},
    {1, 0}, {1, 0}, {-1, 0}, {0, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0},
    {0, 0}, {-1, 0}, {0, 1}, {0, 1}, {0, -1}, {-1, 0}, {0, -1}, {0, 1},
    {0, -1}, {1, 0}, {0, 1}, {0, 1}, {1, 0}, {0, -1}, {0, -1}, {-1, 0},
}};

const std::vector<PrefixTerm> k_q5f12_10 = {
    {5, 1, 0}, {17, -10, 0}, {29, 35, 0}, {41, -30, 0}, {53, -105, 0}, {65, 238, 0},
    {89, -260, 0}, {101, -165, 0}, {113, 140, 0}, {125, 1054, 0}, {137, -770, 0}, {149, -595, 0},
    {173, -715, 0}, {185, 2162, 0}, {197, 455, 0},
};

const std::vector<PrefixTerm> k_S1 = {
    {1, 1, 0}, {5, -48, 0}, {13, 238, 0}, {17, 480, 0}, {25, 1679, 0}, {29, -1680, 0},
    {37, 2162, 0}, {41, 1440, 0}, {49, 2401, 0}, {53, 5040, 0}, {61, -6958, 0}, {65, -11424, 0},
    {73, -1442, 0}, {85, -23040, 0}, {89, 12480, 0}, {97, 1918, 0}, {101, 7920, 0}, {109, -9362, 0},
    {113, -6720, 0}, {121, 14641, 0}, {125, -50592, 0}, {137, 36960, 0}, {145, 80640, 0}, {149, 28560, 0},
    {157, -20398, 0}, {169, 28083, 0}, {173, 34320, 0}, {181, 64078, 0}, {185, -103776, 0}, {193, -38398, 0},
    {197, -21840, 0},
};

const std::vector<PrefixTerm> k_S2 = {
    {1, 1, 0}, {5, 48, 0}, {13, 238, 0}, {17, -480, 0}, {25, 1679, 0}, {29, 1680, 0},
    {37, 2162, 0}, {41, -1440, 0}, {49, 2401, 0}, {53, -5040, 0}, {61, -6958, 0}, {65, 11424, 0},
    {73, -1442, 0}, {85, -23040, 0}, {89, -12480, 0}, {97, 1918, 0}, {101, -7920, 0}, {109, -9362, 0},
    {113, 6720, 0}, {121, 14641, 0}, {125, 50592, 0}, {137, -36960, 0}, {145, 80640, 0}, {149, -28560, 0},
    {157, -20398, 0}, {169, 28083, 0}, {173, -34320, 0}, {181, 64078, 0}, {185, 103776, 0}, {193, -38398, 0},
    {197, 21840, 0},
};

const std::vector<PrefixTerm> k_q5f12_5f60 = {
    {5, 1, 0}, {17, -5, 0}, {29, 5, 0}, {41, 10, 0}, {53, -15, 0}, {65, -7, 0},
    {89, 20, 0}, {101, 5, 0}, {113, -5, 0}, {125, 14, 0}, {137, -35, 0}, {149, -35, 0},
    {173, 55, 0}, {185, 7, 0}, {197, 65, 0},
};

const std::vector<PrefixTerm> k_S3 = {
    {1, 1, 0}, {5, -4, -3}, {13, 0, -24}, {17, 0, 30}, {25, 7, 24}, {29, -40, 0},
    {37, 0, 24}, {41, -80, 0}, {49, -49, 0}, {53, 0, 90}, {61, 22, 0}, {65, -72, 96},
    {73, 0, 96}, {85, 90, -120}, {89, -160, 0}, {97, 0, -144}, {101, -40, 0}, {109, -182, 0},
    {113, 0, 30}, {121, 121, 0}, {125, 44, -117}, {137, 0, 210}, {145, 160, 120}, {149, 280, 0},
    {157, 0, 264}, {169, -407, 0}, {173, 0, -330}, {181, 38, 0}, {185, 72, -96}, {193, 0, -336},
    {197, 0, -390},
};

const std::vector<PrefixTerm> k_S4 = {
    {1, 1, 0}, {5, 4, 3}, {13, 0, -24}, {17, 0, -30}, {25, 7, 24}, {29, 40, 0},
    {37, 0, 24}, {41, 80, 0}, {49, -49, 0}, {53, 0, -90}, {61, 22, 0}, {65, 72, -96},
    {73, 0, 96}, {85, 90, -120}, {89, 160, 0}, {97, 0, -144}, {101, 40, 0}, {109, -182, 0},
    {113, 0, -30}, {121, 121, 0}, {125, -44, 117}, {137, 0, -210}, {145, 160, 120}, {149, -280, 0},
    {157, 0, 264}, {169, -407, 0}, {173, 0, 330}, {181, 38, 0}, {185, -72, 96}, {193, 0, -336},
    {197, 0, 390},
};

}  // namespace

const ConstantTables& constant_tables()
{
    static const ConstantTables tables{kOffsets, kAlpha, kBeta, kGamma, kDelta};
    return tables;
}

const std::vector<ReferencePrefix>& reference_prefixes()
{
    static const std::vector<ReferencePrefix> all = {
        {"q5*f12^10", k_q5f12_10},
        {"S1", k_S1},
        {"S2", k_S2},
        {"q5*f12^5*f60", k_q5f12_5f60},
        {"S3", k_S3},
        {"S4", k_S4},
    };
    return all;
}

}  // namespace etaq

#include "monostatic/fixtures.hpp"

namespace monostatic {

SpiralParams Table1Row::params() const {
    return from_table_order_degrees(angles_deg, k);
}

const std::vector<Table1Row>& table1() {
    static const std::vector<Table1Row> rows = {
        {1, 2, 25, 51, -0.00051277, {49.799, 49.799, 80.402}},
        {2, 3, 8, 25, -0.0061413, {30.273, 30.273, 46.543, 72.912}},
        {3, 4, 5, 21, -0.015354, {19.716, 19.716, 29.875, 44.519, 66.173}},
        {4, 5, 4, 21, -0.029972, {13.494, 13.494, 20.336, 29.781, 43.215, 59.680}},
        {5, 7, 3, 22, -0.042695,
         {7.1815, 7.1815, 10.7864, 15.6392, 22.1409, 30.9129, 43.0793, 43.0788}},
        {6, 5, 2, 11, -0.017984, {13.201, 13.201, 19.890, 29.110, 42.172, 62.427}},
    };
    return rows;
}

const std::vector<Table2Block>& table2() {
    static const std::vector<Table2Block> blocks = {
        {"(1,2)", 1, 2,
         {{0, 374, 0}, {154, 80, 0}, {124, -32, 0}, {81, -78, 0}, {47, -95, 0},
          {24, -100, 0}, {-24, -100, 0}, {-47, -95, 0}, {-81, -78, 0}, {-124, -32, 0},
          {-154, 80, 0}, {0, -1200, 5000}}},
        {"(1,3)", 1, 3,
         {{0, 466, 0}, {166, 70, 0}, {121, -47, 0}, {71, -87, 0}, {35, -100, 0},
          {-35, -100, 0}, {-71, -87, 0}, {-121, -47, 0}, {-166, 70, 0}, {0, -100, -900},
          {0, -100, 900}}},
        {"(2,1)", 2, 1,
         {{0, 374.328, 0}, {153.589, 80.2023, 20}, {124.268, -32.3675, 14.9819},
          {81.1006, -77.5258, 8.45141}, {46.9121, -94.4981, 3.41302}, {23.4562, -100, 0},
          {-23.4562, -100, 0}, {-46.9121, -94.4981, 3.41302}, {-81.1006, -77.5258, 8.45141},
          {-124.268, -32.3675, 14.9819}, {-153.589, 80.2023, 20}}},
        {"(3,1)", 3, 1,
         {{0, 334.907, 0}, {145.019, 83.7267, 10}, {145.019, 0, 9.6018},
          {94.9161, -68.9606, 5.40618}, {53.5898, -92.8203, 2.10256}, {26.7949, -100, 0},
          {-26.7949, -100, 0}, {-53.5898, -92.8203, 2.10256}, {-94.9161, -68.9606, 5.40618},
          {-145.019, 0, 9.6018}, {-145.019, 83.7267, 10}}},
    };
    return blocks;
}

}  // namespace monostatic

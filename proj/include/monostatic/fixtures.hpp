// Embedded reference data: the six published spiral rows (angles in the
// table's order, degrees) and the four labeled coordinate blocks.
#pragma once

#include <string>
#include <vector>

#include "monostatic/geom.hpp"
#include "monostatic/spiral.hpp"

namespace monostatic {

struct Table1Row {
    int no = 0;
    int n = 0;
    int k = 0;
    int v = 0;
    double z_c = 0.0;
    std::vector<double> angles_deg;  // table order: alpha_{n+1} first

    SpiralParams params() const;     // reversed, radians, sum closed to pi
};

const std::vector<Table1Row>& table1();

struct Table2Block {
    std::string label;  // "(1,2)", "(1,3)", "(2,1)", "(3,1)"
    int S = 0, U = 0;
    std::vector<Vec3> points;
};

const std::vector<Table2Block>& table2();

}  // namespace monostatic

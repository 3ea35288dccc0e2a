#include "sss/reference_tables.hpp"

#include <stdexcept>

namespace sss {

namespace {

const ReferenceTable kTable1{1.0,
                             0.0,
                             {{1, 1, 45},   {5, 1, 1},    {5, 1, 46},   {12, 1, 1},  {12, 1, 2},
                              {12, 1, 20},  {12, 1, 27},  {12, 1, 34},  {12, 1, 45}, {12, 1, 46},
                              {23, 1, 1},   {23, 1, 2},   {23, 1, 20},  {23, 1, 27}, {23, 1, 34},
                              {23, 1, 45},  {23, 1, 46},  {34, 1, 1},   {34, 1, 45}, {34, 1, 46},
                              {41, 1, 2},   {41, 1, 20},  {41, 1, 27},  {41, 1, 34}, {41, 1, 45},
                              {41, 1, 46}}};

const ReferenceTable kTable2{1.0,
                             0.1,
                             {{1, 1, 1},    {1, 1, 2},   {1, 1, 9},   {1, 1, 13},  {1, 32, 5},
                              {2, 30, 3},   {5, 1, 1},   {5, 1, 2},   {5, 1, 8},   {5, 1, 9},
                              {5, 1, 15},   {5, 32, 5},  {5, 32, 10}, {6, 30, 1},  {6, 30, 2},
                              {8, 1, 2},    {8, 1, 9},   {12, 1, 1},  {12, 1, 2},  {12, 1, 8},
                              {12, 1, 9},   {12, 1, 13}, {12, 32, 5}, {50, 1, 1},  {50, 1, 2},
                              {50, 1, 48}}};

const ReferenceTable kTable3{17.5,
                             0.0,
                             {{15, 38, 19}, {15, 38, 47}, {15, 38, 53}, {15, 38, 61}, {15, 38, 89},
                              {15, 38, 95}, {32, 38, 19}, {32, 38, 47}, {32, 38, 53}, {32, 38, 61},
                              {32, 38, 89}, {32, 38, 95}, {38, 38, 89}, {49, 38, 95}, {55, 38, 19},
                              {55, 38, 25}, {55, 38, 53}, {55, 38, 89}, {55, 38, 95}, {72, 38, 19},
                              {72, 38, 25}, {72, 38, 53}, {72, 38, 89}, {72, 38, 95}, {89, 38, 25},
                              {89, 38, 95}}};

const ReferenceTable kTable4{17.5,
                             0.1,
                             {{10, 30, 17}, {10, 30, 21}, {10, 30, 43}, {10, 30, 46}, {13, 30, 9},
                              {13, 30, 17}, {13, 30, 21}, {13, 30, 34}, {13, 30, 46}, {13, 30, 49},
                              {15, 27, 50}, {18, 27, 11}, {18, 27, 14}, {18, 27, 36}, {18, 27, 40},
                              {18, 27, 50}, {21, 27, 36}, {21, 27, 50}, {39, 30, 17}, {39, 30, 21},
                              {39, 30, 43}, {39, 30, 46}, {42, 30, 9},  {42, 30, 17}, {42, 30, 21},
                              {42, 30, 34}}};

}  // namespace

const ReferenceTable& reference_table(int index) {
    switch (index) {
        case 1: return kTable1;
        case 2: return kTable2;
        case 3: return kTable3;
        case 4: return kTable4;
        default: throw std::invalid_argument("reference_table: index must be in 1..4");
    }
}

}  // namespace sss

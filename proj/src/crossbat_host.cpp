#include "pentarec/generate.hpp"

namespace pentarec {

// Vertices 0..9 carry the configuration: u=0, u'=1, x=2, x'=3, y=4, y'=5,
// v=6, w=7, v'=8, w'=9. The first four faces are the ones around the base
// edge (0,1); the 4-cycles (2,6,3,8) and (4,7,5,9) bound two copies of the
// same 12-pentagon disk.
Pentangulation crossbat_host() {
    Pentangulation p;
    p.n = 44;
    p.faces = {
        {0, 1, 3, 6, 2},      {1, 0, 4, 7, 5},      {0, 2, 8, 9, 4},      {1, 5, 9, 8, 3},
        {6, 13, 12, 11, 10},  {6, 3, 15, 14, 13},   {6, 10, 22, 8, 2},    {10, 11, 23, 21, 22},
        {8, 22, 21, 16, 20},  {8, 20, 17, 15, 3},   {13, 14, 26, 25, 12}, {11, 12, 25, 24, 23},
        {23, 24, 19, 16, 21}, {25, 26, 18, 19, 24}, {14, 15, 17, 18, 26}, {17, 20, 16, 19, 18},
        {7, 30, 29, 28, 27},  {7, 4, 32, 31, 30},   {7, 27, 39, 9, 5},    {27, 28, 40, 38, 39},
        {9, 39, 38, 33, 37},  {9, 37, 34, 32, 4},   {30, 31, 43, 42, 29}, {28, 29, 42, 41, 40},
        {40, 41, 36, 33, 38}, {42, 43, 35, 36, 41}, {31, 32, 34, 35, 43}, {34, 37, 33, 36, 35},
    };
    return p;
}

} // namespace pentarec

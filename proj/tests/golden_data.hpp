#pragma once

// Frozen reference values for the 2x2x2 invariant pipeline and the general
// counting oracles. Matrix and basis goldens follow the canonical orders
// (ascending lex columns, raising blocks by direction); coefficient goldens
// are the classical integer form of the degree-4 hyperdeterminant.

#include <string>
#include <utility>
#include <vector>

namespace golden {

// ---- degree 2, shape (2,2,2) ------------------------------------------------

inline const std::vector<std::string> kDeg2Columns = {"00011000", "00100100", "01000010",
                                                      "10000001"};

inline const std::vector<std::vector<std::string>> kDeg2RowBlocks = {
    {"01100000", "10010000"},
    {"01001000", "10000100"},
    {"00101000", "10000010"},
};

inline const std::vector<std::vector<int>> kDeg2Matrix = {
    {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1},
};

// ---- degree 4, shape (2,2,2) ------------------------------------------------

inline const std::vector<std::string> kDeg4Columns = {
    "00022000", "00111100", "00200200", "01011010", "01100110", "01101001",
    "02000020", "10010110", "10011001", "10100101", "11000011", "20000002",
};

inline const std::vector<std::vector<std::string>> kDeg4RowBlocks = {
    {"01111000", "01200100", "02100010", "10021000", "10110100", "11010010", "11100001",
     "20010001"},
    {"01012000", "01101100", "02001010", "10011100", "10100200", "11000110", "11001001",
     "20000101"},
    {"00112000", "00201100", "01101010", "10011010", "10100110", "10101001", "11000020",
     "20000011"},
};

inline const std::vector<std::vector<int>> kDeg4Matrix = {
    {0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 0}, {2, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2},
    {2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 2, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
    {0, 0, 2, 0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 2},
    {2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2},
};

/// Last column of the 11 nonzero rows of the row canonical form; the other
/// eleven columns form the identity.
inline const std::vector<int> kDeg4RrefLastColumn = {-1, 2, -1, 2, 2, -4, -1, -4, 2, 2, 2};

/// Kernel vector over kDeg4Columns with the free variable set to +1.
inline const std::vector<int> kKernelVector = {1, -2, 1, -2, -2, 4, 1, 4, -2, -2, -2, 1};

/// The degree-4 hyperdeterminant: coefficient per exponent string.
inline const std::vector<std::pair<std::string, int>> kHyperdetTerms = {
    {"20000002", 1},  {"02000020", 1},  {"00200200", 1},  {"00022000", 1},
    {"11000011", -2}, {"10100101", -2}, {"10011001", -2}, {"01100110", -2},
    {"01011010", -2}, {"00111100", -2}, {"10010110", 4},  {"01101001", 4},
};

/// Display form of the hyperdeterminant (grouped by coefficient).
inline const std::string kHyperdetText =
    "x000^2*x111^2 + x001^2*x110^2 + x010^2*x101^2 + x011^2*x100^2"
    " - 2*(x000*x001*x110*x111 + x000*x010*x101*x111 + x000*x011*x100*x111"
    " + x001*x010*x101*x110 + x001*x011*x100*x110 + x010*x011*x100*x101)"
    " + 4*(x000*x011*x101*x110 + x001*x010*x100*x111)";

// ---- kernel dimensions and counts -------------------------------------------

/// Kernel dimension of the stacked raising map for shape (2,2,2), degrees 1..12.
inline const std::vector<int> kCubeKernelDims = {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1};

/// Zero-weight dimensions of shape (2,2,2,2) at degrees 0, 2, ..., 16.
inline const std::vector<long> kShape2222Counts = {1,    8,     60,    328,   1450,
                                                   5368, 17308, 49832, 130739};

/// Zero-weight dimensions of shape (2,3) at the admissible degrees 6 and 12.
inline const std::vector<std::pair<long, long>> kShape23Counts = {{6, 7}, {12, 19}};

// ---- dimension-polynomial interpolants for shape (2,2,2) --------------------

/// Ascending coefficients of the degree-4 dimension polynomials of the zero
/// weight space, per residue of the degree mod 4.
inline const std::vector<std::string> kInterpZeroRes0 = {"1", "5/6", "13/48", "1/24", "1/384"};
inline const std::vector<std::string> kInterpZeroRes2 = {"7/8", "5/6", "13/48", "1/24",
                                                         "1/384"};

// ---- lowering-map cube at degree 4 -------------------------------------------

inline const std::vector<size_t> kCubeD4ImageDims = {8, 8, 8};
inline constexpr size_t kCubeD4PairwiseDim = 6;
inline constexpr size_t kCubeD4TripleDim = 5;
inline constexpr long kCubeD4SumDim = 11;

}  // namespace golden

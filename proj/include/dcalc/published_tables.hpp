#pragma once

// Published reference values for the discrete hydrogen / Coulomb problems
// (lambda = 1 and lambda = 2 - sqrt(2), q(n) = 1/sqrt(n), A = 1, l = 2) and the
// relaxation problem (lambda = 0.0625 and 0.1296). Six significant figures
// as printed.

#include <array>
#include <string_view>
#include <vector>

namespace dcalc::published {

struct Column {
    std::string_view name;
    std::vector<long> rows;
    std::vector<double> values;
};

inline const std::vector<long> kSchrodingerRows{1, 2, 3, 4, 5, 6, 13, 14, 15, 16, 21, 23, 24, 25};

inline const Column kHydrogenLambda1{
    "hydrogen, lambda = 1", kSchrodingerRows,
    {0.866025, 2.59808, 4.86821, 6.70353, 6.86296, 4.60124, 6.18061, 4.53803, -0.105595, -4.67793, 5.26773,
     -3.99289, -6.01193, -3.49672}};

inline const Column kCoulombLambda1{
    "Coulomb, lambda = 1", kSchrodingerRows,
    {0.866025, 5.19615, 10.6024, 11.5276, 5.24802, -4.77228, -7.29527, -11.2966, -5.75247, 4.67243, -9.75089,
     8.78504, 10.8038, 3.43627}};

inline const Column kHydrogenLambdaQuarter{
    "hydrogen, lambda = 2 - sqrt(2)", kSchrodingerRows,
    {0.707107, 2.41421, 5.62132, 10.6548, 17.4379, 25.2922, -7.27102, -22.8474, -32.7782, -34.1566, 32.7366,
     19.0974, 0.835118, -17.7111}};

inline const Column kCoulombLambdaQuarter{
    "Coulomb, lambda = 2 - sqrt(2)", kSchrodingerRows,
    {0.707107, 4.53553, 11.182, 17.7341, 20.5481, 17.227, 6.52242, 16.3393, 19.1177, 13.5942, -17.9177, 2.89076,
     19.0276, 15.2384}};

/// A printed entry that matches the computed solution at a neighbouring row.
struct Erratum {
    const Column* column;
    long row;
    long matches_row;
};

inline const std::array<Erratum, 2> kErrata{{
    {&kCoulombLambdaQuarter, 21, 20},
    {&kCoulombLambdaQuarter, 23, 22},
}};

inline const std::vector<long> kRelaxationRows{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};

inline const Column kRelaxation0625Reciprocal{
    "relaxation lambda = 0.0625, q = 1/(n+1)", kRelaxationRows,
    {1, 1, 1, 1, 16.9467, 80.7556, 240.321, 559.519, 1373.36, 4308.94, 14838.5, 47386.4, 138351, 393074}};

inline const Column kRelaxation0625Sqrt{
    "relaxation lambda = 0.0625, q = 1/sqrt(n+1)", kRelaxationRows,
    {1, 1, 1, 1, 2.0407, 5.9615, 15.2739, 33.0829, 63.0968, 109.83, 179.1, 279.4, 932.08, 1377.6}};

inline const Column kRelaxation1296Reciprocal{
    "relaxation lambda = 0.1296, q = 1/(n+1)", kRelaxationRows,
    {1, 1, 1, 1, 5.8606, 14.6518, 31.0511, 58.1807, 100.113, 162.983, 257.093, 400.414, 624.004, 980.151}};

inline const Column kRelaxation1296Sqrt{
    "relaxation lambda = 0.1296, q = 1/sqrt(n+1)", kRelaxationRows,
    {1, 1, 1, 1, 2.1832, 6.6554, 17.3085, 37.7361, 72.3270, 126.80, 209.55, 820.25, 1289.4, 2043.5}};

}  // namespace dcalc::published

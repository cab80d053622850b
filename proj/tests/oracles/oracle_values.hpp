#pragma once

// Generated by gen_oracles.py (mpmath, 40 digits). Do not edit.

namespace oracle {

struct FerrersCase { double nu, mu, x, value; };
inline constexpr FerrersCase kFerrers[] = {
    {2.5, 1.25, 0.5, 1.1815030154461420355e-1},
    {3.7, 0.7, -0.6, 7.11757940951765137e-2},
    {1.3, 0.4, -0.8, -5.9780732908962111348e-1},
    {4.0, 0.0, 0.3, 7.2937500000000019734e-2},
    {6.333333333333333, 1.3333333333333333, 0.25, 2.4113531878271334153e-2},
    {2.6666666666666665, 2.6666666666666665, -0.9, 4.2875457282218751234e-3},
    {10.5, 2.5, 0.95, 1.1651237471532138205e-3},
    {0.6, 0.6, 0.0, 7.3838010271720847282e-1},
    {21.666666666666668, 1.6666666666666667, -0.33, 4.0704149582975831402e-4},
    {7.0, 3.0, 0.999, 1.8517700745141236106e-6},
};

struct LegendreQCase { double lambda, zeta, value; };
inline constexpr LegendreQCase kLegendreQ[] = {
    {0.0, 2.0, 5.493061443340548457e-1},
    {1.0, 1.5, 2.0707843432557528095e-1},
    {2.5, 1.2, 1.2868736913977942657e-1},
    {0.3, 1.0001, 4.5438521002446852883},
    {40.3, 1.05, 9.0284450795296257657e-7},
    {5.0, 3.0, 1.9107860644541267497e-5},
    {0.5, 1.1, 9.7876028288694077901e-1},
    {0.8333333333333333, 2.759, 6.6059167551207509934e-2},
    {12.0, 1.01, 1.5188674255718650552e-1},
    {7.0, 1.3, 1.6835113408019543771e-3},
};

struct AxisCase { double nu, mu, x, P, olverQ; };
inline constexpr AxisCase kAxis[] = {
    {2.0, 0.0, 1.5, 2.875, 3.1783499562009644244e-2},
    {2.5, 1.25, 1.3, 4.1442116872693511731e-1, 2.5851405169242624122e-2},
    {0.5, 1.3333333333333333, 1.8, 4.0814214542129472878e-1, 3.3462987459747129826e-1},
    {3.5, 2.0, 2.5, 2.7333583611829154945, 6.771451180820571705e-5},
    {10.0, 3.3333333333333335, 1.1, 2.1080382245743608602e-3, 2.7155502147492713716e-9},
    {-0.5, 0.0, 1.2, 9.7631551179053813862e-1, 1.4110136121622607567},
    {6.5, 1.0, 4.0, 1.9458441921228693497e+4, 6.7499044584883280106e-11},
};

struct BesselCase { double order, z, I, K; };
inline constexpr BesselCase kBessel[] = {
    {1.7, 2.3, 1.3021632979672262901, 1.3315500387781509697e-1},
    {0.3, 0.5, 7.7095173457921947072e-1, 9.7647412438178791708e-1},
    {10.2, 15.0, 1.0779053396670048345e+4, 2.5568132308371092807e-6},
    {0.0, 1.0, 1.2660658777520083356, 4.2102443824070833334e-1},
    {0.5, 0.01, 7.9789785894536928365e-2, 1.2408434532846929916e+1},
    {2.5, 40.0, 1.3761967080749733278e+16, 9.0660051518106025172e-19},
    {25.5, 3.0, 4.276612878469498133e-22, 4.5534499773567373746e+19},
};

struct GammaRatioCase { double a, b, value; };
inline constexpr GammaRatioCase kGammaRatio[] = {
    {5.5, 2.25, 3.8329422527263196996},
    {100.3, 99.7, 2.7600962025953487754},
    {10000.5, 10000.0, 4.6051576859880965764},
    {0.3, 2.7, 6.6097744116297088732e-1},
    {12.0, 12.5, -1.2320396660625598623},
};

struct ConeGreenCase { double alpha, rho1, z1, phi1, rho2, z2, phi2, value; };
inline constexpr ConeGreenCase kConeGreen[] = {
    {0.75, 1.0, 0.3, 0.2, 1.7, -0.4, 1.9, 5.2671666111843704884e-2},
    {0.6, 0.8, 0.0, 0.0, 1.1, 0.5, 2.5, 8.8438074843647567184e-2},
    {0.9, 2.0, 1.0, 0.1, 0.5, -1.0, 3.0, 2.8476395186759204143e-2},
};

struct RadialCase { int n; double lambda, eta, p; };
inline constexpr RadialCase kRadial[] = {
    {1, 0.0, 1.5, 7.1205911756123888728e-1},
    {1, 0.0, 2.0, 1.0257409726125000303},
    {1, 0.0, 5.0, 2.6469554261948232478},
    {2, 1.0, 1.5, 6.3395820035377509595e-1},
    {2, 1.0, 2.0, 1.5807646739212209466},
    {2, 1.0, 5.0, 2.1639172234609322796e+1},
    {3, 3.0, 1.5, 7.966348511920706704e-1},
    {3, 3.0, 2.0, 4.3290747467544171109},
    {3, 3.0, 5.0, 5.8536429353769729343e+2},
};

}  // namespace oracle

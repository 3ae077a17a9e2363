#pragma once

#include <vector>

// Tabulated reference values used by the acceptance checks.

namespace refdata {

struct Row {
    int count;
    double rel_err;
};

inline const std::vector<Row> cheb_c20 = {{6, 0.84109}, {8, 7.0864e-4}, {10, 1.5834e-8}, {12, 7.5601e-14},
                                          {14, 6.8485e-15}, {16, 2.9262e-15}, {18, 7.5991e-15}};
inline const std::vector<Row> gauss_c20 = {{4, .126}, {6, 3.65e-7}, {8, 4.19e-13}, {10, 1.5463e-15}, {12, 3.5e-15}};
inline const std::vector<Row> cheb_c100 = {{30, 10.6}, {32, .113}, {34, 4.55e-5}, {36, 6.37e-7}, {38, 5.4e-10}, {40, 9.49e-14}};
inline const std::vector<Row> gauss_c100 = {{20, 7.7e-6}, {22, 2.0e-10}, {24, 2.85e-13}, {26, 5.1e-14}, {28, 3.5e-13}, {30, 4.0e-13}};
inline const std::vector<Row> angular_c20 = {{20, .46}, {25, 1.85e-2}, {30, 1.45e-4}, {35, 6.5e-8}, {40, 2.5e-10},
                                            {45, 1.67e-13}, {50, 5.1e-15}, {55, 3.1e-15}, {60, 5.4e-15}};
inline const std::vector<Row> angular_c100 = {{115, 1.2e-4}, {120, 1.26e-6}, {125, 2.8e-8}, {130, 6e-10},
                                             {135, 1.3e-12}, {140, 9.5e-14}, {145, 2.4e-13}, {150, 1.6e-13}};

constexpr double value_c20 = -0.0584663041272372;
constexpr double value_c100 = -0.0017164359830235;

// |alpha_{N,n}|, n = 0..29, c = 50, x = (0.3, 0.4)
struct CoeffTable {
    int N;
    std::vector<double> values;
};

inline const std::vector<CoeffTable> coeffs = {
    {1,
     {0.5331000423667240e-2, 0.4428631717847083e-1, 0.1658210569373790e0, 0.3007289752527894e0,
      0.1775918995268194e0, 0.1698366869978232e0, 0.1326556850627168e0, 0.1913962335203701e0,
      0.1031820332780429e-1, 0.1525659498901890e0, 0.1596240985391338e0, 0.5077661980005956e-1,
      0.7004482833257132e-1, 0.1328923889087414e0, 0.1238722286983581e0, 0.6158313809902630e-1,
      0.9273653953916678e-2, 0.1222486302912020e-2, 0.5966018610435559e-3, 0.9457503976218055e-4,
      0.7272803775518590e-5, 0.2471737500102828e-7, 0.5697214169860662e-7, 0.6261378248559833e-8,
      0.2876620855784414e-9, 0.3487372839216281e-11, 0.1344784001636234e-11, 0.8389389113185264e-13,
      0.3090050472181085e-14, 0.5438594709432636e-15}},
    {10,
     {0.6083490415455435e-1, 0.2656230046895768e-1, 0.4475286860599875e-1, 0.4833769722091774e-2,
      0.3152644364681537e-1, 0.3440099078209665e-1, 0.1216643028774711e-1, 0.1348650121618380e-1,
      0.2761069443786074e-1, 0.2729520957518510e-1, 0.1713503999971936e-1, 0.4647646609621038e-2,
      0.5498106244002701e-3, 0.4531628449744277e-3, 0.9388943333348342e-4, 0.1018790565231280e-4,
      0.4628420439758330e-6, 0.3302969345113099e-7, 0.7386880328505609e-8, 0.5793842432833322e-9,
      0.1808244166685658e-10, 0.8331243140844428e-12, 0.1247624356690115e-12, 0.6402836746674745e-14,
      0.3219490617035674e-15, 0.4392156715211933e-16, 0.4216375878565715e-16, 0.1192730971046164e-15,
      0.5964172072581517e-16, 0.9795188267888765e-16}},
    {30,
     {0.4972797526740737e-3, 0.1401428942935588e-2, 0.2710925506457800e-2, 0.3545718524468668e-2,
      0.2241476750854641e-2, 0.6682792235496368e-3, 0.1339565034261751e-3, 0.2092420216819930e-4,
      0.2648137075865133e-5, 0.2763313112747597e-6, 0.2398228591769509e-7, 0.1734961623216772e-8,
      0.1041121888882874e-9, 0.5099613478241473e-11, 0.1958321703329898e-12, 0.5129356249335817e-14,
      0.1790936343596214e-15, 0.2114685083013237e-15, 0.1221114171480004e-15, 0.1775028830408308e-15,
      0.9115790774963023e-16, 0.7676533284257323e-16, 0.1056865232130847e-15, 0.1282851493246300e-15,
      0.1301036117017623e-15, 0.6302967734899496e-16, 0.7542252119317336e-16, 0.6734661033178358e-16,
      0.7752009233608849e-16, 0.1184019207536341e-15}},
};

// |lambda_{N,n}| at index i = n + 1
struct Curve {
    int p;
    double c;
    int N;
    std::vector<double> values;
};

inline const std::vector<Curve> curves = {
    {0, 100, 0,
     {0.0628318530717959, 0.0628318530718015, 0.0628318530718015, 0.0628318530718015,
      0.0628318530718014, 0.0628318530718014, 0.0628318530718014, 0.0628318530718014,
      0.0628318530718014, 0.0628318530718013, 0.0628318530718013, 0.0628318530718013,
      0.0628318530718013, 0.0628318530718013, 0.0628318530718013, 0.0628318530718014,
      0.0628318530718014, 0.0628318530718016, 0.0628318530718038, 0.0628318530718347,
      0.0628318530721835, 0.0628318530763155, 0.0628318531163065, 0.0628318535135555,
      0.062831856784986, 0.0628318837883456, 0.062832069507959, 0.0628332912291397,
      0.0628390672175515, 0.0628371419584172, 0.0621299125389562, 0.0528621305626974,
      0.025088648119428, 0.0065130156012386, 0.0012964289411871, 0.0002240622618329,
      3.47467497717e-05, 4.9102308637e-06, 6.386692394e-07, 7.70172655e-08}},
    {0, 100, 10,
     {0.0628318530717961, 0.062831853071796, 0.062831853071796, 0.062831853071796,
      0.062831853071796, 0.062831853071796, 0.062831853071796, 0.062831853071796,
      0.062831853071796, 0.062831853071796, 0.062831853071796, 0.062831853071796,
      0.062831853071796, 0.062831853071796, 0.062831853071796, 0.062831853071796,
      0.062831853071796, 0.062831853071796, 0.0628318530717953, 0.0628318530717352,
      0.0628318530670969, 0.0628318527701286, 0.0628318371571949, 0.0628311750004416,
      0.06280920875626, 0.0622799304109514, 0.0552900987497948, 0.0292391424776581,
      0.0080840626347923, 0.0016477806585346, 0.0002888538323686, 4.52637547335e-05,
      6.4481694324e-06, 8.440414491e-07, 1.02295426e-07}},
    {0, 100, 25,
     {0.0628318530717945, 0.0628318530717944, 0.0628318530717945, 0.0628318530717945,
      0.0628318530717945, 0.0628318530717945, 0.0628318530717944, 0.0628318530717944,
      0.0628318530717944, 0.0628318530717943, 0.0628318530717944, 0.0628318530717943,
      0.0628318530717874, 0.0628318530711371, 0.0628318530211721, 0.062831849906884,
      0.0628316945624743, 0.0628256396051026, 0.062650378127495, 0.0594918985377494,
      0.039481764322065, 0.0129364717231185, 0.0027759339995982, 0.000495464225525,
      7.81222467621e-05, 1.11182241426e-05, 1.4463785042e-06}},
    {0, 100, 50,
     {0.0628318530717951, 0.0628318530717951, 0.0628318530717951, 0.0628318530717926,
      0.0628318530713416, 0.0628318530131517, 0.0628318476170156, 0.0628314860463029,
      0.0628142803202116, 0.0622731346576304, 0.0541261099973812, 0.0256354513698988,
      0.0061038961592428, 0.0010712927360798, 0.0001599460266559, 2.11031731412e-05}},
    {0, 100, 80,
     {0.0628280584842117, 0.0623712127149815, 0.0508474381705328, 0.0169193413593417,
      0.002552207158839, 0.0002821876886859, 2.60731131772e-05}},
    {1, 50, 0,
     {0.0445466239746536, 0.0445466239746537, 0.0445466239746537, 0.0445466239746537,
      0.0445466239746537, 0.0445466239746537, 0.0445466239746537, 0.0445466239746537,
      0.0445466239746524, 0.0445466239743774, 0.0445466239313662, 0.0445466191086134,
      0.0445462362167212, 0.0445254259965382, 0.0438309605116036, 0.0348082840702459,
      0.0130424833093001, 0.0025716510533394, 0.0003846159729178, 4.83466587556e-05,
      5.2710192966e-06, 5.072843773e-07, 4.36225894e-08, 3.3825486e-09}},
    {1, 50, 10,
     {0.0445466239746534, 0.0445466239746534, 0.0445466239746534, 0.0445466239746534,
      0.0445466239746322, 0.0445466239700204, 0.0445466232872946, 0.0445465540569926,
      0.044541816164709, 0.0443361687068957, 0.0400702970364514, 0.0202282391919442,
      0.0046298765437913, 0.0007291873852012, 9.42391011615e-05, 1.04487652676e-05,
      1.0154982853e-06, 8.77491361e-08, 6.8122834e-09, 4.790362e-10}},
    {1, 50, 25,
     {0.0445466239666784, 0.0445466204961072, 0.0445460267017184, 0.0444961434339969,
      0.0426180096422101, 0.0262204296220683, 0.0064173170932329, 0.0009380341233283,
      0.0001078238996947, 1.04197988893e-05, 8.720973776e-07}},
    {1, 50, 40,
     {0.0433255675803968, 0.0240597321399148, 0.0038764497150701, 0.0003471313065928,
      2.42413298855e-05, 1.4320998279e-06}},
};

}  // namespace refdata

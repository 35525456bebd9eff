#pragma once

// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle {

using C = std::complex<double>;

struct GammaCase { C z; C gamma; C rgamma; };
struct KummerCase { C a; C b; C z; C value; };
struct HermiteCase { C tau; double x; C value; };
struct WeightCase { C z; C tau; C value; };
struct LaplaceCase { C a1; C b1; C alpha; C s; C value; };
struct IndentedCase { unsigned n; C tau; double epsilon; double radius; C value; };

inline constexpr GammaCase kGamma[] = {
    {{5.0e-1, 0.0}, {1.7724538509055160273, 0.0}, {5.6418958354775628695e-1, 0.0}},
    {{1.5, 0.0}, {8.8622692545275801365e-1, 0.0}, {1.1283791670955125739, 0.0}},
    {{3.7000000000000001776, 0.0}, {4.1706517837966040301, 0.0}, {2.3977067658467657614e-1, 0.0}},
    {{1.05e+1, 0.0}, {1.1332783889487855673e+6, 0.0}, {8.8239572002038009055e-7, 0.0}},
    {{2.0300000000000000711e+1, 0.0}, {2.9724610752355722432e+17, 0.0}, {3.3642156270145553305e-18, 0.0}},
    {{1.0000000000000000208e-3, 0.0}, {9.994237724845954453e+2, 0.0}, {1.0005765597449938948e-3, 0.0}},
    {{-5.0e-1, 0.0}, {-3.5449077018110320546, 0.0}, {-2.8209479177387814347e-1, 0.0}},
    {{-2.5, 0.0}, {-9.4530872048294188123e-1, 0.0}, {-1.057855469152043038, 0.0}},
    {{-7.2000000000000001776, 0.0}, {7.0676975839887492668e-4, 0.0}, {1.4148879293667184341e+3, 0.0}},
    {{2.999999999999999889e-1, 4.000000000000000222e-1}, {9.1156152780458583312e-1, -1.3671933575854186231}, {3.3759511295831572816e-1, 5.0633751196315721509e-1}},
    {{-1.6999999999999999556, 2.1000000000000000888}, {3.6571342806704098419e-3, 1.2856229878079450462e-2}, {2.0470110846842680003e+1, -7.1960291988112128168e+1}},
    {{2.5, -3.0}, {-2.1811897108112289748e-1, -7.2034763407175033565e-2}, {-4.1337897223605944542, 1.3652025000361294046}},
    {{5.0e-1, 1.5e+1}, {1.2933512616047980314e-10, 6.9117170037527761341e-11}, {6.014256279566712976e+9, -3.2140408121479153668e+9}},
};

inline constexpr KummerCase kKummer[] = {
    {{2.999999999999999889e-1, 0.0}, {1.6999999999999999556, 0.0}, {2.5, 0.0}, {1.9378165350288670869, 0.0}},
    {{-2.5, 5.0e-1}, {5.0e-1, 0.0}, {3.0, 1.0}, {3.1873088869919530585, 2.7526645082046388701}},
    {{1.5, 0.0}, {2.5, 0.0}, {-1.0e+1, 0.0}, {4.2030298586532038368e-2, 0.0}},
    {{-2.5e-1, 0.0}, {5.0e-1, 0.0}, {4.0, 0.0}, {-8.3669766159173574807, 0.0}},
    {{5.0e-1, 5.0e-1}, {1.5, 0.0}, {-2.0, 5.0e-1}, {4.9963563696804814798e-1, -2.5868367667646336006e-1}},
};

inline constexpr double kGauss2F1Half = 0.8488263631567751241;
inline constexpr double kGammaQuarter = 3.6256099082219083119;

inline constexpr HermiteCase kHermite[] = {
    {{5.0e-1, 0.0}, 0.10000000000000000555, {7.903492952686849489e-1, 0.0}},
    {{5.0e-1, 0.0}, 0.2999999999999999889, {9.7107856754878475526e-1, 0.0}},
    {{5.0e-1, 0.0}, 1.1000000000000000888, {1.5433902425302839914, 0.0}},
    {{5.0e-1, 0.0}, 2.0, {2.0283956544967318942, 0.0}},
    {{5.0e-1, 0.0}, 3.0, {2.4657191988331164003, 0.0}},
    {{5.0e-1, 0.0}, 5.0, {3.1700422855740018355, 0.0}},
    {{5.0e-1, 0.0}, 8.0, {4.0038782069784426891, 0.0}},
    {{5.0e-1, 0.0}, 12.0, {4.9010989193475932087, 0.0}},
    {{5.0e-1, 0.0}, 15.0, {5.4787438752183624799, 0.0}},
    {{5.0e-1, 0.0}, 20.0, {6.3255423778237227591, 0.0}},
    {{5.0e-1, 0.0}, 30.0, {7.7465043270123091744, 0.0}},
    {{2.7000000000000001776, 0.0}, 0.10000000000000000555, {-2.3129210610250788092, 0.0}},
    {{2.7000000000000001776, 0.0}, 0.2999999999999999889, {-3.4327668231355457024, 0.0}},
    {{2.7000000000000001776, 0.0}, 1.1000000000000000888, {2.8421106052770579941e-1, 0.0}},
    {{2.7000000000000001776, 0.0}, 2.0, {3.003582638303056725e+1, 0.0}},
    {{2.7000000000000001776, 0.0}, 3.0, {1.100508405799579126e+2, 0.0}},
    {{2.7000000000000001776, 0.0}, 5.0, {4.781588176062370641e+2, 0.0}},
    {{2.7000000000000001776, 0.0}, 8.0, {1.7509078759943343274e+3, 0.0}},
    {{2.7000000000000001776, 0.0}, 12.0, {5.2856094573120758844e+3, 0.0}},
    {{2.7000000000000001776, 0.0}, 15.0, {9.6829248030718865746e+3, 0.0}},
    {{2.7000000000000001776, 0.0}, 20.0, {2.110154342032499774e+4, 0.0}},
    {{2.7000000000000001776, 0.0}, 30.0, {6.3161768435367244678e+4, 0.0}},
    {{-5.0e-1, 0.0}, 0.10000000000000000555, {9.584172415220603438e-1, 0.0}},
    {{-5.0e-1, 0.0}, 0.2999999999999999889, {8.5351890775571820495e-1, 0.0}},
    {{-5.0e-1, 0.0}, 1.1000000000000000888, {6.1077929626588177065e-1, 0.0}},
    {{-5.0e-1, 0.0}, 2.0, {4.8099224684439339658e-1, 0.0}},
    {{-5.0e-1, 0.0}, 3.0, {4.00596427400570328e-1, 0.0}},
    {{-5.0e-1, 0.0}, 5.0, {3.139521619129795924e-1, 0.0}},
    {{-5.0e-1, 0.0}, 8.0, {2.4927970980080581491e-1, 0.0}},
    {{-5.0e-1, 0.0}, 12.0, {2.0386034904370844395e-1, 0.0}},
    {{-5.0e-1, 0.0}, 15.0, {1.8242277358527510741e-1, 0.0}},
    {{-5.0e-1, 0.0}, 20.0, {1.5803996874928699005e-1, 0.0}},
    {{-5.0e-1, 0.0}, 30.0, {1.2907258176701415112e-1, 0.0}},
    {{-1.5, 0.0}, 0.10000000000000000555, {5.986658469642728695e-1, 0.0}},
    {{-1.5, 0.0}, 0.2999999999999999889, {4.5896722289535385124e-1, 0.0}},
    {{-1.5, 0.0}, 1.1000000000000000888, {1.9967579074534398744e-1, 0.0}},
    {{-1.5, 0.0}, 2.0, {1.0442666711915830789e-1, 0.0}},
    {{-1.5, 0.0}, 3.0, {6.2140634429694432303e-2, 0.0}},
    {{-1.5, 0.0}, 5.0, {3.0520666444205911474e-2, 0.0}},
    {{-1.5, 0.0}, 8.0, {1.540285016554965059e-2, 0.0}},
    {{-1.5, 0.0}, 12.0, {8.4505422985905538303e-3, 0.0}},
    {{-1.5, 0.0}, 15.0, {6.0606676601092575199e-3, 0.0}},
    {{-1.5, 0.0}, 20.0, {3.943627852243157019e-3, 0.0}},
    {{-1.5, 0.0}, 30.0, {2.1494209914601070772e-3, 0.0}},
    {{1.3000000000000000444, 0.0}, 0.10000000000000000555, {-3.5818695024197737523e-1, 0.0}},
    {{1.3000000000000000444, 0.0}, 0.2999999999999999889, {1.4351141093188848277e-1, 0.0}},
    {{1.3000000000000000444, 0.0}, 1.1000000000000000888, {2.5808695512576329887, 0.0}},
    {{1.3000000000000000444, 0.0}, 2.0, {5.9197412555984095421, 0.0}},
    {{1.3000000000000000444, 0.0}, 3.0, {1.0161047971517434031e+1, 0.0}},
    {{1.3000000000000000444, 0.0}, 5.0, {1.9875256440946810909e+1, 0.0}},
    {{1.3000000000000000444, 0.0}, 8.0, {3.6702476818709222515e+1, 0.0}},
    {{1.3000000000000000444, 0.0}, 12.0, {6.2227272152026522696e+1, 0.0}},
    {{1.3000000000000000444, 0.0}, 15.0, {8.3189692710737459965e+1, 0.0}},
    {{1.3000000000000000444, 0.0}, 20.0, {1.2094061029742193674e+2, 0.0}},
    {{1.3000000000000000444, 0.0}, 30.0, {2.049035969143128547e+2, 0.0}},
    {{5.0e-1, 5.0e-1}, 0.10000000000000000555, {9.878224221787085541e-1, -3.6188746170571975026e-1}},
    {{5.0e-1, 5.0e-1}, 0.2999999999999999889, {1.1416005319752661922, -1.3822478199240758951e-1}},
    {{5.0e-1, 5.0e-1}, 1.1000000000000000888, {1.4754613965641754066, 6.2878947682014427399e-1}},
    {{5.0e-1, 5.0e-1}, 2.0, {1.5805673103330919935, 1.3164546141312185458}},
    {{5.0e-1, 5.0e-1}, 3.0, {1.5502331214925472382, 1.9383581730799427792}},
    {{5.0e-1, 5.0e-1}, 5.0, {1.2942162623065278447, 2.9023383444839966964}},
    {{5.0e-1, 5.0e-1}, 8.0, {7.3522236813801460435e-1, 3.9397446856602108307}},
    {{5.0e-1, 5.0e-1}, 12.0, {-8.939090781852713068e-2, 4.9024043358646095426}},
    {{5.0e-1, 5.0e-1}, 15.0, {-7.0935849558226924104e-1, 5.4341594181038952086}},
    {{5.0e-1, 5.0e-1}, 20.0, {-1.7096892566095963893, 6.0911361234788094838}},
    {{5.0e-1, 5.0e-1}, 30.0, {-3.552496549312669972, 6.8845063728718338236}},
};

inline constexpr WeightCase kWeight[] = {
    {{5.0e-1, 0.0}, {5.0e-1, 0.0}, {7.8539816339744830962e-1, 0.0}},
    {{2.2999999999999998224, 0.0}, {1.3000000000000000444, 0.0}, {1.3417186909778843621, 0.0}},
    {{1.0, 0.0}, {-5.0e-1, 0.0}, {3.409218907043895572e-1, 0.0}},
    {{5.0e-1, 2.999999999999999889e-1}, {5.0e-1, 0.0}, {7.6288444172543376256e-1, -8.278325801068828354e-2}},
    {{5.0e-1, 0.0}, {5.0e-1, 5.0e-1}, {8.0812502323653403284e-1, 1.7084064085210764789e-1}},
};

inline constexpr LaplaceCase kLaplace[] = {
    {{-5.0e-1, 0.0}, {5.0e-1, 0.0}, {7.5e-1, 0.0}, {1.0, 0.0}, {-1.6065565609272789806, 0.0}},
    {{5.0e-1, 0.0}, {1.5, 0.0}, {1.25, 0.0}, {2.0, 0.0}, {5.0526022996230816214e-1, 0.0}},
    {{2.999999999999999889e-1, 2.000000000000000111e-1}, {1.0, 0.0}, {8.0000000000000004441e-1, 0.0}, {1.5, 0.0}, {1.0661308634220685678, 1.8541813000888197783e-1}},
};

inline constexpr IndentedCase kIndented[] = {
    {0, {5.0e-1, 0.0}, 0.10000000000000000555, 8.0, {-1.5890769063584058629, -5.7286053470157002069e-49}},
    {0, {5.0e-1, 0.0}, 0.2000000000000000111, 8.0, {-1.6319992676156806972, -1.6721493208444841859e-48}},
    {1, {5.0e-1, 0.0}, 0.10000000000000000555, 8.0, {0.0, -6.3236753835457382389e-47}},
    {2, {1.3000000000000000444, 0.0}, 0.10000000000000000555, 8.0, {-3.9239192861765917084, 4.0391027444916270894e-52}},
};

}  // namespace oracle

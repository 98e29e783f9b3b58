// Generated by tools/gen_reference.py. Do not edit.
#pragma once

namespace ref {

inline constexpr double xs[] = {0.01, 0.3, 1.7, 7.5, 25};

struct CiRow { double x, value; };
inline constexpr CiRow ci[] = {
    {1e-8, -1.7843465079050832637e+1},
    {0.01, -4.0279795209823920722},
    {0.5, -1.7778407880661290134e-1},
    {1.999, 4.2318872679400621297e-1},
    {2.001, 4.2277258014368755408e-1},
    {7.5, 1.1563320323793427044e-1},
    {40, 1.9020007896208766962e-2},
    {1e4, -3.0551916724485212665e-5},
};

struct AuxRow { int n; double x, value; };
inline constexpr AuxRow kernel_aux[] = {
    {3, 0.01, 2.4999166671874986111e-1},
    {3, 0.3, 2.4254208638548651702e-1},
    {3, 1.7, 4.9455028959033958424e-2},
    {3, 7.5, 1.3145240943395718568e-1},
    {3, 25, -4.8533831011892599665e-4},
    {5, 0.01, 1.6666041670833321759e-1},
    {5, 0.3, 1.6107533240779589361e-1},
    {5, 1.7, 1.8168556093734967881e-2},
    {5, 7.5, 1.0914005735656047601e-1},
    {5, 25, 2.6510833169206732605e-3},
};
inline constexpr AuxRow thermal_aux[] = {
    {1, 0.01, 2.1159576988926989671e-3},
    {1, 0.3, 1.7375094588313834066e-3},
    {1, 1.7, -9.4823349893269524429e-4},
    {1, 7.5, 5.4555061914240965391e-6},
    {2, 0.01, 2.222010589417809848e-2},
    {2, 0.3, 2.0376174292648067352e-2},
    {2, 1.7, -4.0718300659295770928e-3},
    {2, 7.5, -3.1523364119841621958e-4},
};

// [state][piece][x] with states vacuum, thermal, coherent, squeezed.
inline constexpr double f[4][4][5] = {
    {
        {3.4722113715440538042e-11, 2.8046005134613479033e-5, 2.6491773796073005488e-2, 1.8273097953851160314, 1.010647483800322128},
        {9.2592592592592592593e-9, 2.5e-4, 4.5490740740740740741e-2, 3.90625, 1.4467592592592592593e+2},
        {2.0833275463044343098e-10, 1.6832865850355954216e-4, 1.6058678083987670459e-1, 1.464483314500914042e+1, 2.3078588128720755943e+1},
        {5.5555555555555555556e-8, 1.5e-3, 2.7294444444444444444e-1, 2.34375e+1, 8.6805555555555555556e+2},
    },
    {
        {7.9363690495129632978e-11, 6.3285501882299774869e-5, 4.2431061651838536703e-2, 7.4219125664702716205e-1, 9.7600000022220710184e-1},
        {2.1164021164021164021e-8, 5.7142857142857142857e-4, 1.0397883597883597884e-1, 8.9285714285714285714, 3.3068783068783068783e+2},
        {1.6666534392576049683e-10, 1.3404249874451947226e-4, 1.1315884393932936698e-1, 8.5849019012984239372, 6.4146078823599165145e+1},
        {4.4444444444444444444e-8, 1.2e-3, 2.1835555555555555556e-1, 1.875e+1, 6.9444444444444444444e+2},
    },
    {
        {2.0832877608170554515e-10, 1.6545389562525091204e-4, 8.8514454081557226462e-2, 8.1934420365985527272, 3.5372661762525949176},
        {5.555440973353168931e-8, 1.4724024760282789096e-3, 1.505158606638918495e-1, 1.267695136115879287e+1, 4.340253992105229794e+2},
        {1.2499756946446388736e-9, 9.9491207788922391626e-4, 5.8055267039130086656e-1, 5.2764321823660565708e+1, 7.7135663364559810966e+1},
        {3.33327222278769569e-7, 8.8527313523662197886e-3, 9.7244776940111382376e-1, 7.3481413688229793028e+1, 2.6036344507573134149e+3},
    },
    {
        {1.0416243493538393102e-10, 8.1315880221410474946e-5, 9.0391326933382099988e-3, 2.7115126504432046328, 5.0532372485162853349e-1},
        {2.7776631955753911532e-8, 7.2240247602827890964e-4, 1.4043638441669627274e-2, 9.5820136115879287039e-1, -2.3785672547983825674e-3},
        {6.2497743075330858071e-10, 4.8992610237854528977e-4, 9.8792327871670752803e-2, 8.8298223886331444492, 7.8998989783975431363},
        {1.6666055561210290234e-7, 4.3527313523662197886e-3, 1.5361443606778049042e-1, 3.1689136882297930278, -5.3221590935325180895e-1},
    },
};
inline constexpr double g[4][4][5] = {
    {
        {1.8518466435264550188e-14, 1.3465874948629353683e-5, 4.1221619382447938755e-1, 8.3112713197490938224e+2, 9.767333277942817987e+4},
        {6.6666666666666666667e-12, 1.62e-4, 9.4657133333333333333e-1, 1.58203125e+3, 6.5104166666666666667e+5},
        {1.1111083333373015836e-13, 8.0817984126274782503e-5, 2.495970935578751392, 5.9802311622983290759e+3, 7.7619691854495070637e+5},
        {4.0e-11, 9.72e-4, 5.679428, 9.4921875e+3, 3.90625e+6},
    },
    {
        {2.3515208705894861983e-15, 1.6902851992003095535e-6, 3.8432981375086054926e-2, 3.4350856993618066904e+1, 4.3386697624408256804e+3},
        {8.4656084656084656085e-13, 2.0571428571428571429e-5, 1.2019953439153439153e-1, 2.0089285714285714286e+2, 8.2671957671957671958e+4},
        {4.9382363318518494766e-15, 3.5770225188722009979e-6, 9.9173482508104079974e-2, 2.0076115493686281098e+2, 3.6874198628731226937e+4},
        {1.7777777777777777778e-12, 4.32e-5, 2.5241902222222222222e-1, 4.21875e+2, 1.7361111111111111111e+5},
    },
    {
        {1.8517685199153331374e-14, 1.2961441066722152497e-5, 9.1978117220162628688e-2, 4.0212941502057242065e+2, 4.9010481759607665242e+4},
        {6.6663095312168638772e-12, 1.5433389835027492056e-4, 1.6012469371272001811e-1, 8.9338697549641737565e+2, 3.2164251959218271661e+5},
        {1.1110666673650741917e-13, 7.8124966712381219068e-5, 7.2323217087096276329e-1, 2.917121839134097184e+3, 3.8977052502736300139e+5},
        {3.9998095275131951902e-11, 9.310661570578620912e-4, 1.2946692984178816238, 5.1599828306843721274e+3, 1.9377022987568823381e+6},
    },
    {
        {1.851690396304211256e-14, 1.245700718481495131e-5, -2.2825995938415413017e-1, -2.6868301933764540946e+1, 3.4763073978715061393e+2},
        {6.6659523957670610878e-12, 1.4666779670054984112e-4, -6.2632194590789329711e-1, 2.0474270099283475131e+2, -7.756627482301233437e+3},
        {1.1110250013928467997e-13, 7.5431949298487655632e-5, -1.0495065938368258654, -1.4598748403013470788e+2, 3.344131509775296419e+3},
        {3.9996190550263903803e-11, 8.901323141157241824e-4, -3.0900894031642367525, 8.2777816136874425485e+2, -3.0845402486235323702e+4},
    },
};

}  // namespace ref

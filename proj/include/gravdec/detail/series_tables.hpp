// Generated by tools/gen_series.py. Do not edit.
#pragma once

#include <span>

namespace gravdec::detail {

struct SeriesTable {
  int leading_power;
  std::span<const double> coefficients;
};

// F5(x) = x^0 * sum_k c_k x^k
inline constexpr double F5_coefficients[] = {
    0.166666666666666666667,
    0.0,
    -0.0625,
    0.0,
    0.00416666666666666666667,
    0.0,
    -0.000115740740740740740741,
    0.0,
    0.00000177154195011337868481,
    0.0,
    -1.72233245149911816578e-8,
    0.0,
    1.15981983265933883218e-10,
    0.0,
    -5.73537279886486235693e-13,
    0.0,
    2.17248969653972058974e-15,
    0.0,
    -6.50800290357759435926e-18,
    0.0,
    1.58089139358160186865e-20,
    0.0,
    -3.17742549730377617384e-23,
    0.0,
    5.37245857032039449683e-26,
    0.0,
    -7.74873832257749206273e-29,
    0.0,
    9.64673305020540561809e-32,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable F5_series{0, F5_coefficients};

// F3(x) = x^0 * sum_k c_k x^k
inline constexpr double F3_coefficients[] = {
    0.25,
    0.0,
    -0.0833333333333333333333,
    0.0,
    0.00520833333333333333333,
    0.0,
    -0.000138888888888888888889,
    0.0,
    0.00000206679894179894179894,
    0.0,
    -1.9683799445704207609e-8,
    0.0,
    1.3047973117417561862e-10,
    0.0,
    -6.37263644318318039658e-13,
    0.0,
    2.38973866619369264872e-15,
    0.0,
    -7.09963953117555748283e-18,
    0.0,
    1.7126323430467353577e-20,
    0.0,
    -3.4218428432502204949e-23,
    0.0,
    5.75620561105756553232e-26,
    0.0,
    -8.26532087741599153358e-29,
    0.0,
    1.02496538658432434692e-31,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable F3_series{0, F3_coefficients};

// Fth1(x) = x^0 * sum_k c_k x^k
inline constexpr double Fth1_coefficients[] = {
    0.00211640211640211640212,
    0.0,
    -0.00444444444444444444444,
    0.0,
    0.00269360269360269360269,
    0.0,
    -0.000999954777732555510333,
    0.0,
    0.000282186948853615520282,
    0.0,
    -0.0000667104701963089762654,
    0.0,
    0.0000139278554246014047782,
    0.0,
    -0.00000265178298206997902364,
    0.0,
    4.7019279695710439774e-7,
    0.0,
    -7.87780522780287520343e-8,
    0.0,
    1.26029765447441405269e-8,
    0.0,
    -1.94029834985793111984e-9,
    0.0,
    2.89191630073567095366e-10,
    0.0,
    -4.19233100944323238535e-11,
    0.0,
    5.93332233683046192005e-12,
    0.0,
    -8.22291698927353766625e-13,
    0.0,
    1.1187130734602869855e-13,
    0.0,
    -1.49718102627992562295e-14,
    0.0,
    1.97445787367827704179e-15,
    0.0,
    -2.56968892116818006741e-16,
    0.0,
    3.30461902377560759383e-17,
    0.0,
    -4.20382081027848879593e-18,
    0.0,
    5.29493503143364901676e-19,
};
inline constexpr SeriesTable Fth1_series{0, Fth1_coefficients};

// Fth2(x) = x^0 * sum_k c_k x^k
inline constexpr double Fth2_coefficients[] = {
    0.0222222222222222222222,
    0.0,
    -0.0211640211640211640212,
    0.0,
    0.00740740740740740740741,
    0.0,
    -0.0017957351290684624018,
    0.0,
    0.000357126706333055539405,
    0.0,
    -0.0000627082108563590045072,
    0.0,
    0.0000101076469994407539796,
    0.0,
    -0.00000153053356314301151409,
    0.0,
    2.2098191517249825197e-7,
    0.0,
    -3.07315553566734900484e-8,
    0.0,
    4.14621327779098694918e-9,
    0.0,
    -5.45583400205374048786e-10,
    0.0,
    7.03006648499250405738e-11,
    0.0,
    -8.89820400226360293435e-12,
    0.0,
    1.10908227763048475803e-12,
    0.0,
    -1.36398214639780733794e-13,
    0.0,
    1.65784616719224549723e-14,
    0.0,
    -1.99414095090960246969e-15,
    0.0,
    2.37647781949194543326e-16,
    0.0,
    -2.80861717450679522303e-17,
    0.0,
    3.29447297585664111206e-18,
    0.0,
    -3.83811733307271497541e-19,
    0.0,
    4.44378521171087610564e-20,
};
inline constexpr SeriesTable Fth2_series{0, Fth2_coefficients};

// f_v_I(x) = x^4 * sum_k c_k x^k
inline constexpr double f_v_I_coefficients[] = {
    0.00347222222222222222222,
    0.0,
    -0.000108506944444444444444,
    0.0,
    0.00000162760416666666666667,
    0.0,
    -1.52498185809817754262e-8,
    0.0,
    9.93160453803434954229e-11,
    0.0,
    -4.77831046780428290845e-13,
    0.0,
    1.77006874675615174081e-15,
    0.0,
    -5.20632287946725642497e-18,
    0.0,
    1.24554604354386859373e-20,
    0.0,
    -2.47132858550253441179e-23,
    0.0,
    4.13265945340496606079e-26,
    0.0,
    -5.90380027483176905756e-29,
    0.0,
    7.28864264043484375691e-32,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_v_I_series{4, f_v_I_coefficients};

// f_v_III(x) = x^4 * sum_k c_k x^k
inline constexpr double f_v_III_coefficients[] = {
    0.0208333333333333333333,
    0.0,
    -0.000578703703703703703704,
    0.0,
    0.00000813802083333333333333,
    0.0,
    -7.31991291887125220459e-8,
    0.0,
    4.6347487844160297864e-10,
    0.0,
    -2.18437049956767218672e-12,
    0.0,
    7.96530936040268283365e-15,
    0.0,
    -2.31392127976322507777e-17,
    0.0,
    5.48040259159302181242e-20,
    0.0,
    -1.07839792821928774333e-22,
    0.0,
    1.79081909647548529301e-25,
    0.0,
    -2.54317550300445436326e-28,
    0.0,
    3.12370398875779018153e-31,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_v_III_series{4, f_v_III_coefficients};

// f_t_I(x) = x^4 * sum_k c_k x^k
inline constexpr double f_t_I_coefficients[] = {
    0.00793650793650793650794,
    0.0,
    -0.00138888888888888888889,
    0.0,
    0.000189393939393939393939,
    0.0,
    -0.0000237154453424294694136,
    0.0,
    0.00000284758965314520870076,
    0.0,
    -3.33137779522583444152e-7,
    0.0,
    3.82610036696959802784e-8,
    0.0,
    -4.33291261286407857943e-9,
    0.0,
    4.8523323355410477699e-10,
    0.0,
    -5.38468743331671893161e-11,
    0.0,
    5.93025293617559772197e-12,
    0.0,
    -6.48929175320112782033e-13,
    0.0,
    7.06206656323018314356e-14,
    0.0,
    -7.64884326550918144122e-15,
    0.0,
    8.24989200681955629212e-16,
    0.0,
    -8.86548752302806474354e-17,
    0.0,
    9.49590928949299137813e-18,
    0.0,
    -1.01414416193059593008e-18,
    0.0,
    1.08023737480637597434e-19,
    0.0,
    -1.14789999158663582103e-20,
    0.0,
    1.21716194494878719511e-21,
};
inline constexpr SeriesTable f_t_I_series{4, f_t_I_coefficients};

// f_t_III(x) = x^4 * sum_k c_k x^k
inline constexpr double f_t_III_coefficients[] = {
    0.0166666666666666666667,
    0.0,
    -0.00132275132275132275132,
    0.0,
    0.000104166666666666666667,
    0.0,
    -0.00000851771685105018438352,
    0.0,
    7.20763534916974070413e-7,
    0.0,
    -6.26302709636042969376e-8,
    0.0,
    5.55331322946528751073e-9,
    0.0,
    -5.00166734985038705343e-10,
    0.0,
    4.56101284196884810868e-11,
    0.0,
    -4.20116555690751102829e-12,
    0.0,
    3.90195020633983493903e-13,
    0.0,
    -3.64938707482320591434e-14,
    0.0,
    3.43348785359528701394e-15,
    0.0,
    -3.24692719179536941835e-16,
    0.0,
    3.0842110027741140038e-17,
    0.0,
    -2.94113797240001400911e-18,
    0.0,
    2.81444048399243892655e-19,
    0.0,
    -2.70153891604766497273e-20,
    0.0,
    2.60036964600426726919e-21,
    0.0,
    -2.50926219467903225283e-22,
    0.0,
    2.42684987650617088318e-23,
};
inline constexpr SeriesTable f_t_III_series{4, f_t_III_coefficients};

// f_c_I(x) = x^4 * sum_k c_k x^k
inline constexpr double f_c_I_coefficients[] = {
    0.0208333333333333333333,
    0.0,
    -0.00455729166666666666667,
    0.0,
    0.000400390625,
    0.0,
    -0.0000184020457864858906526,
    0.0,
    5.34595846078593474427e-7,
    0.0,
    -1.09146167705585430195e-8,
    0.0,
    1.6706035436691826739e-10,
    0.0,
    -2.00113617395398109268e-12,
    0.0,
    1.9342462951442677899e-14,
    0.0,
    -1.54373591082258109266e-16,
    0.0,
    1.03584436827249253546e-18,
    0.0,
    -5.92954400089882104416e-21,
    0.0,
    2.93106835082482788851e-23,
    0.0,
    -1.26409432084301412464e-25,
    0.0,
    4.79882219822068313995e-28,
    0.0,
    -1.61604919998013475873e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_c_I_series{4, f_c_I_coefficients};

// f_c_II(x) = x^3 * sum_k c_k x^k
inline constexpr double f_c_II_coefficients[] = {
    0.0555555555555555555556,
    0.0,
    -0.0114583333333333333333,
    0.0,
    0.00113095238095238095238,
    0.0,
    -0.0000567221487360376249265,
    0.0,
    0.00000181269898531803293708,
    0.0,
    -4.09806724910891577558e-8,
    0.0,
    6.95424572923103199411e-10,
    0.0,
    -9.2101933923732087442e-12,
    0.0,
    9.79470006373364739571e-14,
    0.0,
    -8.55137717363509329996e-16,
    0.0,
    6.24007409670886002938e-18,
    0.0,
    -3.86291843887937955723e-20,
    0.0,
    2.05435582042669169267e-22,
    0.0,
    -9.48748348993045439906e-25,
    0.0,
    3.84060083126433490792e-27,
    0.0,
    -1.37395234669267525677e-29,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_c_II_series{3, f_c_II_coefficients};

// f_c_III(x) = x^4 * sum_k c_k x^k
inline constexpr double f_c_III_coefficients[] = {
    0.125,
    0.0,
    -0.0243055555555555555556,
    0.0,
    0.002001953125,
    0.0,
    -0.0000883298197751322751323,
    0.0,
    0.00000249478061503343621399,
    0.0,
    -4.98953909511247680891e-8,
    0.0,
    7.51771594651132203254e-10,
    0.0,
    -8.89393855090658263415e-12,
    0.0,
    8.51068369863477827555e-14,
    0.0,
    -6.73630215631671749522e-16,
    0.0,
    4.488658929180800987e-18,
    0.0,
    -2.5542651080794921421e-20,
    0.0,
    1.2561721503534976665e-22,
    0.0,
    -5.39346910226352693179e-25,
    0.0,
    2.03949943424379033448e-27,
    0.0,
    -6.8444436705041001546e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_c_III_series{4, f_c_III_coefficients};

// f_c_IV(x) = x^3 * sum_k c_k x^k
inline constexpr double f_c_IV_coefficients[] = {
    0.333333333333333333333,
    0.0,
    -0.0611111111111111111111,
    0.0,
    0.0056547619047619047619,
    0.0,
    -0.000272266313932980599647,
    0.0,
    0.00000845926193148415370638,
    0.0,
    -1.87340217102121864027e-7,
    0.0,
    3.12941057815396439735e-9,
    0.0,
    -4.09341928549920388631e-11,
    0.0,
    4.30966802804280485411e-13,
    0.0,
    -3.73151003940440434907e-15,
    0.0,
    2.70403210857383934607e-17,
    0.0,
    -1.66402640444034811696e-19,
    0.0,
    8.80438208754296439715e-22,
    0.0,
    -4.0479929557036605436e-24,
    0.0,
    1.63225535328734233587e-26,
    0.0,
    -5.81909229187485991103e-29,
    0.0,
    1.84733089673977397003e-31,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_c_IV_series{3, f_c_IV_coefficients};

// f_s_I(x) = x^4 * sum_k c_k x^k
inline constexpr double f_s_I_coefficients[] = {
    0.0104166666666666666667,
    0.0,
    -0.00423177083333333333333,
    0.0,
    0.0003955078125,
    0.0,
    -0.0000183562963307429453263,
    0.0,
    5.34297897942452443941e-7,
    0.0,
    -1.09131832774182017346e-8,
    0.0,
    1.67055044160677998935e-10,
    0.0,
    -2.00112055498534269091e-12,
    0.0,
    1.93424255850613715829e-14,
    0.0,
    -1.5437351694240054419e-16,
    0.0,
    1.03584424429270893331e-18,
    0.0,
    -5.9295438237848127992e-21,
    0.0,
    2.93106832895889996721e-23,
    0.0,
    -1.26409431848677186541e-25,
    0.0,
    4.79882219598515916859e-28,
    0.0,
    -1.61604919979195934013e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_s_I_series{4, f_s_I_coefficients};

// f_s_II(x) = x^3 * sum_k c_k x^k
inline constexpr double f_s_II_coefficients[] = {
    0.0277777777777777777778,
    0.0,
    -0.0114583333333333333333,
    0.0,
    0.00113095238095238095238,
    0.0,
    -0.0000567221487360376249265,
    0.0,
    0.00000181269898531803293708,
    0.0,
    -4.09806724910891577558e-8,
    0.0,
    6.95424572923103199411e-10,
    0.0,
    -9.2101933923732087442e-12,
    0.0,
    9.79470006373364739571e-14,
    0.0,
    -8.55137717363509329996e-16,
    0.0,
    6.24007409670886002938e-18,
    0.0,
    -3.86291843887937955723e-20,
    0.0,
    2.05435582042669169267e-22,
    0.0,
    -9.48748348993045439906e-25,
    0.0,
    3.84060083126433490792e-27,
    0.0,
    -1.37395234669267525677e-29,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_s_II_series{3, f_s_II_coefficients};

// f_s_III(x) = x^4 * sum_k c_k x^k
inline constexpr double f_s_III_coefficients[] = {
    0.0625,
    0.0,
    -0.0225694444444444444444,
    0.0,
    0.0019775390625,
    0.0,
    -0.0000881102223875661375661,
    0.0,
    0.00000249339019039811140506,
    0.0,
    -4.98888378396260801276e-8,
    0.0,
    7.51747698723050995206e-10,
    0.0,
    -8.8938691332681897374e-12,
    0.0,
    8.51066725742700349649e-14,
    0.0,
    -6.73629892112293283736e-16,
    0.0,
    4.48865839193507204435e-18,
    0.0,
    -2.55426503178422705196e-20,
    0.0,
    1.25617214098238570023e-22,
    0.0,
    -5.39346909221022662573e-25,
    0.0,
    2.03949943329369264665e-27,
    0.0,
    -6.84444366970712191114e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_s_III_series{4, f_s_III_coefficients};

// f_s_IV(x) = x^3 * sum_k c_k x^k
inline constexpr double f_s_IV_coefficients[] = {
    0.166666666666666666667,
    0.0,
    -0.0611111111111111111111,
    0.0,
    0.0056547619047619047619,
    0.0,
    -0.000272266313932980599647,
    0.0,
    0.00000845926193148415370638,
    0.0,
    -1.87340217102121864027e-7,
    0.0,
    3.12941057815396439735e-9,
    0.0,
    -4.09341928549920388631e-11,
    0.0,
    4.30966802804280485411e-13,
    0.0,
    -3.73151003940440434907e-15,
    0.0,
    2.70403210857383934607e-17,
    0.0,
    -1.66402640444034811696e-19,
    0.0,
    8.80438208754296439715e-22,
    0.0,
    -4.0479929557036605436e-24,
    0.0,
    1.63225535328734233587e-26,
    0.0,
    -5.81909229187485991103e-29,
    0.0,
    1.84733089673977397003e-31,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable f_s_IV_series{3, f_s_IV_coefficients};

// g_v_I(x) = x^6 * sum_k c_k x^k
inline constexpr double g_v_I_coefficients[] = {
    0.0185185185185185185185,
    0.0,
    -0.000520833333333333333333,
    0.0,
    0.00000793650793650793650794,
    0.0,
    -7.65481089555163629238e-8,
    0.0,
    5.11267518070239158675e-10,
    0.0,
    -2.50922559950337728115e-12,
    0.0,
    9.44094287878989688383e-15,
    0.0,
    -2.8114572543455207632e-17,
    0.0,
    6.79391342696225596443e-20,
    0.0,
    -1.3592320182910598077e-22,
    0.0,
    2.28885808913058227084e-25,
    0.0,
    -3.28926034917575173275e-28,
    0.0,
    4.08163993946468717708e-31,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_v_I_series{6, g_v_I_coefficients};

// g_v_III(x) = x^6 * sum_k c_k x^k
inline constexpr double g_v_III_coefficients[] = {
    0.111111111111111111111,
    0.0,
    -0.00277777777777777777778,
    0.0,
    0.0000396825396825396825397,
    0.0,
    -3.67430922986478542034e-7,
    0.0,
    2.38591508432778274048e-9,
    0.0,
    -1.14707455977297247139e-11,
    0.0,
    4.24842429545545359772e-14,
    0.0,
    -1.24953655748689811698e-16,
    0.0,
    2.98932190786339262435e-19,
    0.0,
    -5.9311942616337155245e-22,
    0.0,
    9.9183850528991898403e-25,
    0.0,
    -1.41691215041416997719e-27,
    0.0,
    1.74927425977058021875e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_v_III_series{6, g_v_III_coefficients};

// g_t_I(x) = x^6 * sum_k c_k x^k
inline constexpr double g_t_I_coefficients[] = {
    0.00235155790711346266902,
    0.0,
    -0.00037037037037037037037,
    0.0,
    0.0000513067179733846400513,
    0.0,
    -0.00000661345752468621369268,
    0.0,
    8.14392348783883175418e-7,
    0.0,
    -9.71889134561610959578e-8,
    0.0,
    1.13372856529111964006e-8,
    0.0,
    -1.29989361866175442335e-9,
    0.0,
    1.47040934720925789705e-10,
    0.0,
    -1.64532272928213767824e-11,
    0.0,
    1.82469364617181956116e-12,
    0.0,
    -2.00859042428357258782e-13,
    0.0,
    2.19708740796632171219e-14,
    0.0,
    -2.39026352937604473713e-15,
    0.0,
    2.58820141631462492968e-16,
    0.0,
    -2.79098681345495874954e-17,
    0.0,
    2.99870819685654506721e-18,
    0.0,
    -3.21145651282695328819e-19,
    0.0,
    3.42932499939779636512e-20,
    0.0,
    -3.65240906414261764086e-21,
};
inline constexpr SeriesTable g_t_I_series{6, g_t_I_coefficients};

// g_c_I(x) = x^6 * sum_k c_k x^k
inline constexpr double g_c_I_coefficients[] = {
    0.0185185185185185185185,
    0.0,
    -0.00833333333333333333333,
    0.0,
    0.0013968253968253968254,
    0.0,
    -0.000107779737409367038997,
    0.0,
    0.00000484272593116130531097,
    0.0,
    -1.43889032777921666811e-7,
    0.0,
    3.05493806049034999326e-9,
    0.0,
    -4.88266905945088329153e-11,
    0.0,
    6.09986897178675817432e-13,
    0.0,
    -6.12860971308973521434e-15,
    0.0,
    5.06408790189987970833e-17,
    0.0,
    -3.50422409125567005771e-19,
    0.0,
    2.06120450244864203238e-21,
    0.0,
    -1.04362329663854250817e-23,
    0.0,
    4.59742524545162901245e-26,
    0.0,
    -1.77850499577272602499e-28,
    0.0,
    6.09081884854302440042e-31,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_c_I_series{6, g_c_I_coefficients};

// g_c_II(x) = x^5 * sum_k c_k x^k
inline constexpr double g_c_II_coefficients[] = {
    0.0666666666666666666667,
    0.0,
    -0.0357142857142857142857,
    0.0,
    0.00740740740740740740741,
    0.0,
    -0.000673400673400673400673,
    0.0,
    0.0000348857491714634571777,
    0.0,
    -0.00000117577895355673133451,
    0.0,
    2.79448354974861873918e-8,
    0.0,
    -4.94570252297904762399e-10,
    0.0,
    6.77982308344891088426e-12,
    0.0,
    -7.41753875284976041614e-14,
    0.0,
    6.63073909566488704407e-16,
    0.0,
    -4.93595869371971023001e-18,
    0.0,
    3.10809992707987750616e-20,
    0.0,
    -1.6774484718111001429e-22,
    0.0,
    7.84704601588533015381e-25,
    0.0,
    -3.21269316906525832241e-27,
    0.0,
    1.16092133741976365296e-29,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_c_II_series{5, g_c_II_coefficients};

// g_c_III(x) = x^6 * sum_k c_k x^k
inline constexpr double g_c_III_coefficients[] = {
    0.111111111111111111111,
    0.0,
    -0.0444444444444444444444,
    0.0,
    0.00698412698412698412698,
    0.0,
    -0.000517342739564961787184,
    0.0,
    0.0000225993876787527581178,
    0.0,
    -6.57778435556213333991e-7,
    0.0,
    1.37472212722065749697e-8,
    0.0,
    -2.17007513753372590735e-10,
    0.0,
    2.6839423475861735967e-12,
    0.0,
    -2.67430242025733900262e-14,
    0.0,
    2.19443809082328120694e-16,
    0.0,
    -1.50951191623321171717e-18,
    0.0,
    8.83373358192275156735e-21,
    0.0,
    -4.45279273232444803487e-23,
    0.0,
    1.95390572931694233029e-25,
    0.0,
    -7.53249174680213375289e-28,
    0.0,
    2.57167906938483252462e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_c_III_series{6, g_c_III_coefficients};

// g_c_IV(x) = x^5 * sum_k c_k x^k
inline constexpr double g_c_IV_coefficients[] = {
    0.4,
    0.0,
    -0.19047619047619047619,
    0.0,
    0.037037037037037037037,
    0.0,
    -0.00323232323232323232323,
    0.0,
    0.000162800162800162800163,
    0.0,
    -0.00000537498950197362895776,
    0.0,
    1.25751759738687843263e-7,
    0.0,
    -2.19809001021291005511e-9,
    0.0,
    2.98312215671752078908e-11,
    0.0,
    -3.23674418306171363614e-13,
    0.0,
    2.8733202747881177191e-15,
    0.0,
    -2.12625912960233671447e-17,
    0.0,
    1.33204282589137607407e-19,
    0.0,
    -7.15711347972736060971e-22,
    0.0,
    3.33499455675126531537e-24,
    0.0,
    -1.36067004807469764243e-26,
    0.0,
    4.90166786910566875695e-29,
    0.0,
    -1.5706052190513736518e-31,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_c_IV_series{5, g_c_IV_coefficients};

// g_s_I(x) = x^6 * sum_k c_k x^k
inline constexpr double g_s_I_coefficients[] = {
    0.0185185185185185185185,
    0.0,
    -0.0161458333333333333333,
    0.0,
    0.00278571428571428571429,
    0.0,
    -0.00021548292670977856163,
    0.0,
    0.00000968494059480454038277,
    0.0,
    -2.87775556330243830244e-7,
    0.0,
    6.10986668003782119662e-9,
    0.0,
    -9.76533530744451223754e-11,
    0.0,
    1.21997372641821736524e-12,
    0.0,
    -1.22572192902562685996e-14,
    0.0,
    1.01281757809111785254e-16,
    0.0,
    -7.00844817922207976623e-19,
    0.0,
    4.12240900448912007082e-21,
    0.0,
    -2.08724659323290547382e-23,
    0.0,
    9.19485049086117757363e-26,
    0.0,
    -3.5570099915418976254e-28,
    0.0,
    1.21816376970833680272e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_s_I_series{6, g_s_I_coefficients};

// g_s_II(x) = x^5 * sum_k c_k x^k
inline constexpr double g_s_II_coefficients[] = {
    0.0666666666666666666667,
    0.0,
    -0.0714285714285714285714,
    0.0,
    0.0148148148148148148148,
    0.0,
    -0.00134680134680134680135,
    0.0,
    0.0000697714983429269143555,
    0.0,
    -0.00000235155790711346266902,
    0.0,
    5.58896709949723747836e-8,
    0.0,
    -9.89140504595809524799e-10,
    0.0,
    1.35596461668978217685e-11,
    0.0,
    -1.48350775056995208323e-13,
    0.0,
    1.32614781913297740881e-15,
    0.0,
    -9.87191738743942046003e-18,
    0.0,
    6.21619985415975501231e-20,
    0.0,
    -3.3548969436222002858e-22,
    0.0,
    1.56940920317706603076e-24,
    0.0,
    -6.42538633813051664483e-27,
    0.0,
    2.32184267483952730593e-29,
    0.0,
    -7.46037479049402484604e-32,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_s_II_series{5, g_s_II_coefficients};

// g_s_III(x) = x^6 * sum_k c_k x^k
inline constexpr double g_s_III_coefficients[] = {
    0.111111111111111111111,
    0.0,
    -0.0861111111111111111111,
    0.0,
    0.0139285714285714285714,
    0.0,
    -0.00103431804820693709583,
    0.0,
    0.0000451963894424211884529,
    0.0,
    -0.00000131554540036682893826,
    0.0,
    2.74944000601701953848e-8,
    0.0,
    -4.3401490255308943278e-10,
    0.0,
    5.36788439624015640706e-12,
    0.0,
    -5.34860478120273538891e-14,
    0.0,
    4.38887617172817736099e-16,
    0.0,
    -3.01902383104951128392e-18,
    0.0,
    1.76674671620962288749e-20,
    0.0,
    -8.90558546446039668829e-23,
    0.0,
    3.90781145861600046879e-25,
    0.0,
    -1.50649834935892134723e-27,
    0.0,
    5.14335813876853316703e-30,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_s_III_series{6, g_s_III_coefficients};

// g_s_IV(x) = x^5 * sum_k c_k x^k
inline constexpr double g_s_IV_coefficients[] = {
    0.4,
    0.0,
    -0.380952380952380952381,
    0.0,
    0.0740740740740740740741,
    0.0,
    -0.00646464646464646464646,
    0.0,
    0.000325600325600325600326,
    0.0,
    -0.0000107499790039472579155,
    0.0,
    2.51503519477375686526e-7,
    0.0,
    -4.39618002042582011022e-9,
    0.0,
    5.96624431343504157815e-11,
    0.0,
    -6.47348836612342727227e-13,
    0.0,
    5.74664054957623543819e-15,
    0.0,
    -4.25251825920467342893e-17,
    0.0,
    2.66408565178275214813e-19,
    0.0,
    -1.43142269594547212194e-21,
    0.0,
    6.66998911350253063074e-24,
    0.0,
    -2.72134009614939528487e-26,
    0.0,
    9.80333573821133751391e-29,
    0.0,
    -3.1412104381027473036e-31,
    0.0,
    0.0,
    0.0,
    0.0,
};
inline constexpr SeriesTable g_s_IV_series{5, g_s_IV_coefficients};

// g_t_III(x) = x^6 * sum_k c_k x^k
inline constexpr double g_t_III_coefficients[] = {
    0.00493827160493827160494,
    0.0,
    -0.000352733686067019400353,
    0.0,
    0.0000282186948853615520282,
    0.0,
    -0.0000023753110172863259283,
    0.0,
    2.06133741029180686525e-7,
    0.0,
    -1.82716232098948148331e-8,
    0.0,
    1.64552657703553178341e-9,
    0.0,
    -1.50052310112059952361e-10,
    0.0,
    1.38213037603588987066e-11,
    0.0,
    -1.28369069994459022759e-12,
    0.0,
    1.20060034973460943381e-13,
    0.0,
    -1.12957225715398353786e-14,
    0.0,
    1.0681962370358980524e-15,
    0.0,
    -1.01466475121597369713e-16,
    0.0,
    9.67595609614591164937e-18,
    0.0,
    -9.259138063415114437e-19,
    0.0,
    8.88770679207240291761e-20,
    0.0,
    -8.55487323427542887041e-21,
    0.0,
    8.25514173337691225034e-22,
    0.0,
    -7.98401607398600040659e-23,
};
inline constexpr SeriesTable g_t_III_series{6, g_t_III_coefficients};

}  // namespace gravdec::detail

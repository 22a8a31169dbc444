#pragma once

// Generated by tests/oracles/gen_reference_values.py (mpmath, 50 digits). Do not edit.

namespace refvals {

struct IotaRow { double x, alpha, value; };
struct MRow { double d, x, value; };
struct MHatRow { double d, x, alpha, value; };
struct SegRow { double x, alpha; long k; double value; };
struct SawRow { double x; long k; double value; };
struct ShiftRow { double c, d, x, value; };

inline constexpr IotaRow kIota[] = {
    {0.0, 0.0, 0.0},
    {0.0, 0.3, 0.1081748095078604690671819},
    {0.0, 0.5, 0.1207822376352452223455184},
    {0.0, 1.0, 0.0},
    {0.25, 0.0, 0.0},
    {0.25, 0.3, 0.08647737361694421301304573},
    {0.25, 0.5, 0.09770106025577727237707978},
    {0.25, 1.0, 0.0},
    {1.0, 0.0, 0.0},
    {1.0, 0.3, 0.05375469920835301070155304},
    {1.0, 0.5, 0.06189071980705349507612139},
    {1.0, 1.0, 0.0},
    {3.7, 0.0, 0.0},
    {3.7, 0.3, 0.02262006858242493209226867},
    {3.7, 0.5, 0.02654623842366070170314115},
    {3.7, 1.0, 0.0},
    {12.5, 0.0, 0.0},
    {12.5, 0.3, 0.007814660944893547785641061},
    {12.5, 0.5, 0.009257145843470138231812968},
    {12.5, 1.0, 0.0},
    {49.875, 0.0, 0.0},
    {49.875, 0.3, 0.002066558501430291681361109},
    {49.875, 0.5, 0.00245696290803236759731659},
    {49.875, 1.0, 0.0},
};
inline constexpr MRow kM[] = {
    {0.5, 0.0, -0.07236494292470008707171368},
    {1.0, 0.0, 0.08106146679532725821967026},
    {2.0, 0.0, 0.7344878765153546035110542},
    {0.0, 0.25, 0.2725104012134320608816646},
    {0.5, 0.25, -0.05144881528765020766476928},
    {1.0, 0.25, 0.06543196688785677993109514},
    {2.0, 0.25, 0.6245919682112675237887968},
    {-0.5, 1.0, 0.6207822376352452223455184},
    {0.0, 1.0, 0.08106146679532725821967026},
    {0.5, 1.0, -0.02713619536691931474734941},
    {1.0, 1.0, 0.04134069595540929409382208},
    {2.0, 1.0, 0.4331430337931627211268024},
    {-0.5, 3.7, 0.1322332119270343087653658},
    {0.0, 3.7, 0.02246877058014314589806204},
    {0.5, 3.7, -0.009888393104261071121626339},
    {1.0, 3.7, 0.01770407650363974800257695},
    {2.0, 3.7, 0.2075086787807751703348693},
    {-0.5, 12.5, 0.03735117579602436665185803},
    {0.0, 12.5, 0.006665247032707682442356181},
    {0.5, 12.5, -0.003204023959949169057255475},
    {1.0, 12.5, 0.006171712263039457647534605},
    {2.0, 12.5, 0.07720518049515506867956242},
    {-0.5, 49.875, 0.009231790321809601818153954},
    {0.0, 49.875, 0.001670821388952119621156876},
    {0.5, 49.875, -0.0008271108483314760825456999},
    {1.0, 49.875, 0.00163798054510119913030985},
    {2.0, 49.875, 0.02107174059439697570337236},
};
inline constexpr MHatRow kMHat[] = {
    {-0.5, 0.0, 1.0, 0.6207822376352452223455184},
    {0.0, 0.0, 0.3, 0.344239710256076057454801},
    {0.0, 0.0, 0.5, 0.2742086473552725676369024},
    {0.0, 0.0, 1.0, 0.08106146679532725821967026},
    {0.5, 0.0, 0.0, -0.07236494292470008707171368},
    {0.5, 0.0, 0.3, 0.05957630784669506035531525},
    {0.5, 0.0, 0.5, 0.08106146679532725821967026},
    {0.5, 0.0, 1.0, -0.02713619536691931474734941},
    {1.0, 0.0, 0.0, 0.08106146679532725821967026},
    {1.0, 0.0, 0.3, 0.1711700552213344152340134},
    {1.0, 0.0, 0.5, 0.1755963586871628762416571},
    {1.0, 0.0, 1.0, 0.04134069595540929409382208},
    {2.0, 0.0, 0.0, 0.7344878765153546035110542},
    {2.0, 0.0, 0.3, 0.7147341684472440547952251},
    {2.0, 0.0, 0.5, 0.6647707349211721930361431},
    {2.0, 0.0, 1.0, 0.4331430337931627211268024},
    {-0.5, 0.25, 0.3, 2.245251582999467752900594},
    {-0.5, 0.25, 0.5, 1.077229357430482248182044},
    {-0.5, 0.25, 1.0, 0.4593768084783404755407448},
    {0.0, 0.25, 0.0, 0.2725104012134320608816646},
    {0.0, 0.25, 0.3, 0.2274615465611784963058705},
    {0.0, 0.25, 0.5, 0.2039639965953451339379878},
    {0.0, 0.25, 1.0, 0.06543196688785677993109514},
    {0.5, 0.25, 0.0, -0.05144881528765020766476928},
    {0.5, 0.25, 0.3, 0.04850302338987341833135042},
    {0.5, 0.25, 0.5, 0.06543196688785677993109514},
    {0.5, 0.25, 1.0, -0.02339444719926584845194332},
    {1.0, 0.25, 0.0, 0.06543196688785677993109514},
    {1.0, 0.25, 0.3, 0.1395650182900640071739187},
    {1.0, 0.25, 0.5, 0.1448416711113406168003534},
    {1.0, 0.25, 1.0, 0.03680530330914851559906565},
    {2.0, 0.25, 0.0, 0.6245919682112675237887968},
    {2.0, 0.25, 0.3, 0.6168346686389255077502801},
    {2.0, 0.25, 0.5, 0.5798602664325190681046148},
    {2.0, 0.25, 1.0, 0.393286938089843147388821},
    {-0.5, 1.0, 0.0, 0.6207822376352452223455184},
    {-0.5, 1.0, 0.3, 0.4906640133288884151290882},
    {-0.5, 1.0, 0.5, 0.4276350570752999129282863},
    {-0.5, 1.0, 1.0, 0.2605458770848616126918696},
    {0.0, 1.0, 0.0, 0.08106146679532725821967026},
    {0.0, 1.0, 0.3, 0.1167499449218269568683846},
    {0.0, 1.0, 0.5, 0.1167048408589711489722601},
    {0.0, 1.0, 1.0, 0.04134069595540929409382208},
    {0.5, 1.0, 0.0, -0.02713619536691931474734941},
    {0.5, 1.0, 0.3, 0.03098962413949663513358714},
    {0.5, 1.0, 0.5, 0.04134069595540929409382208},
    {0.5, 1.0, 1.0, -0.01651818233011509532191564},
    {1.0, 1.0, 0.0, 0.04134069595540929409382208},
    {1.0, 1.0, 0.3, 0.08976919968012363796321037},
    {1.0, 1.0, 0.5, 0.0950535933269897825612319},
    {1.0, 1.0, 1.0, 0.02767792568499833914878929},
    {2.0, 1.0, 0.0, 0.4331430337931627211268024},
    {2.0, 1.0, 0.3, 0.4399451777129286589675389},
    {2.0, 1.0, 0.5, 0.4221091200845639215520451},
    {2.0, 1.0, 1.0, 0.3084727445555460205507418},
    {-0.5, 3.7, 0.0, 0.1322332119270343087653658},
    {-0.5, 3.7, 0.3, 0.1443020074965418239733842},
    {-0.5, 3.7, 0.5, 0.1420836151130602120170806},
    {-0.5, 3.7, 1.0, 0.1025895903224292052821101},
    {0.0, 3.7, 0.0, 0.02246877058014314589806204},
    {0.0, 3.7, 0.3, 0.04341074068619002434169893},
    {0.0, 3.7, 0.5, 0.0463505986090840670802419},
    {0.0, 3.7, 1.0, 0.01770407650363974800257695},
    {0.5, 3.7, 0.0, -0.009888393104261071121626339},
    {0.5, 3.7, 0.3, 0.01338708023246448011899143},
    {0.5, 3.7, 0.5, 0.01770407650363974800257695},
    {0.5, 3.7, 1.0, -0.007995731227477845006693009},
    {1.0, 3.7, 0.0, 0.01770407650363974800257695},
    {1.0, 3.7, 0.3, 0.03926475977224612370253183},
    {1.0, 3.7, 0.5, 0.04255232720820653720974854},
    {1.0, 3.7, 1.0, 0.01460501265628361238221861},
    {2.0, 3.7, 0.0, 0.2075086787807751703348693},
    {2.0, 3.7, 0.3, 0.2188177541994503003671802},
    {2.0, 3.7, 0.5, 0.2158661948289847897066202},
    {2.0, 3.7, 1.0, 0.1740699845629208848738955},
    {-0.5, 12.5, 0.0, 0.03735117579602436665185803},
    {-0.5, 12.5, 0.3, 0.04427433904099843939231321},
    {-0.5, 12.5, 0.5, 0.0451457676007718449344647},
    {-0.5, 12.5, 1.0, 0.03453630402289785965776067},
    {0.0, 12.5, 0.0, 0.006665247032707682442356181},
    {0.0, 12.5, 0.3, 0.01432375536324281960615619},
    {0.0, 12.5, 0.5, 0.0156661400314743453002526},
    {0.0, 12.5, 1.0, 0.006171712263039457647534605},
    {0.5, 12.5, 0.0, -0.003204023959949169057255475},
    {0.5, 12.5, 0.3, 0.004682860144826050320954353},
    {0.5, 12.5, 0.5, 0.006171712263039457647534605},
    {0.5, 12.5, 1.0, -0.002975306129208438909603253},
    {1.0, 12.5, 0.0, 0.006171712263039457647534605},
    {1.0, 12.5, 0.3, 0.01385225290332872781391732},
    {1.0, 12.5, 0.5, 0.01520851595622898596743738},
    {1.0, 12.5, 1.0, 0.005746216513010115682026102},
    {2.0, 12.5, 0.0, 0.07720518049515506867956242},
    {2.0, 12.5, 0.3, 0.08340302443142078580935704},
    {2.0, 12.5, 0.5, 0.08380475088238439107627136},
    {2.0, 12.5, 1.0, 0.07206697353159905323953401},
    {-0.5, 49.875, 0.0, 0.009231790321809601818153954},
    {-0.5, 49.875, 0.3, 0.01124289913331993271791194},
    {-0.5, 49.875, 0.5, 0.01159670566531788558136379},
    {-0.5, 49.875, 1.0, 0.009049512647580530364841783},
    {0.0, 49.875, 0.0, 0.001670821388952119621156876},
    {0.0, 49.875, 0.3, 0.003727390192203403880108204},
    {0.0, 49.875, 0.5, 0.004111200899624527141148042},
    {0.0, 49.875, 1.0, 0.00163798054510119913030985},
    {0.5, 49.875, 0.0, -0.0008271108483314760825456999},
    {0.5, 49.875, 0.3, 0.001244343991536899967066569},
    {0.5, 49.875, 0.5, 0.00163798054510119913030985},
    {0.5, 49.875, 1.0, -0.000811012085634190025040605},
    {1.0, 49.875, 0.0, 0.00163798054510119913030985},
    {1.0, 49.875, 0.3, 0.003694937060791832285327973},
    {1.0, 49.875, 0.5, 0.004079002441185619115157453},
    {1.0, 49.875, 1.0, 0.001606405806293666057180051},
    {2.0, 49.875, 0.0, 0.02107174059439697570337236},
    {2.0, 49.875, 0.3, 0.02301604930949077571658438},
    {2.0, 49.875, 0.5, 0.02332573889836416920804338},
    {2.0, 49.875, 1.0, 0.02066968415588804093578751},
};
inline constexpr SegRow kIotaSegment[] = {
    {0.0, 0.5, 1, 0.05889151782819172726939705},
    {0.25, 0.3, 3, 0.007813411167274507267333349},
    {2.5, 0.75, 10, 0.0005481272718795317875555679},
    {0.0, 0.125, 1000, 5.464651553899176212171183e-8},
};
inline constexpr SawRow kSawtoothSegment[] = {
    {0.5, 0, 0.09861228866810969139524524},
    {0.0, 1, 0.03972077083991796412584818},
    {3.25, 2, 0.002531976082472078030293945},
    {0.0, 100, 8.250743392326245643433198e-6},
};
// mismatch_shift(c, d, x)
inline constexpr ShiftRow kMismatchShift[] = {
    {0.5, 0.0, 1.0, 0.1081976621622465729670197},
    {1.0, 0.5, 0.25, -0.1168807821755069875958644},
    {0.0, 1.0, 3.0, -0.006887253581233246037266521},
    {2.0, -0.5, 1.5, 0.005525936990735991376241244},
};
// corr_floor(c, d, x)
inline constexpr ShiftRow kCorrFloor[] = {
    {0.0, 2.0, 0.5, 0.5108256237659906832055141},
    {0.5, -0.5, 1.0, 0.6931471805599453094172321},
    {1.0, 3.5, 0.0, 1.966529436258048986251885},
    {0.25, 0.75, 2.0, 0.0},
};

inline constexpr double kLogPiHalf = -0.1207822376352452223455184;
inline constexpr double kLogPi20 = 42.33561646075348502965988;
inline constexpr double kM0At100 = 0.0008333305556349146833812417;
inline constexpr double kM0At1000 = 8.333333055555634920575397e-5;
inline constexpr double kMHalfAt100 = -0.0004145913037919833328901055;
inline constexpr double kIotaHalfAt1000 = 0.0001249375260338557278663269;
inline constexpr double kLogFactorialHat7p25 = 9.045021746485373282228455;

}  // namespace refvals

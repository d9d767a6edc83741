#pragma once

// Reference values for the tests. Decimal tables are the published values
// truncated to 22 significant digits; closed forms were evaluated at 40 digits
// and rounded to 25. Each closed form is kept next to its value.

#include <array>

namespace golden {

struct TableEntry {
    int key;
    double value;
};

// Mean distance M_1(P(n, 1)), n = 3..30.
inline constexpr std::array<TableEntry, 28> mean_distance = {{
    {3, 0.6318380067826792484393},
    {4, 0.7373786350765663487695},
    {5, 0.7936981950337533817609},
    {6, 0.8262589494902320823142},
    {7, 0.8465613262160931640277},
    {8, 0.8600079780154972472894},
    {9, 0.8693496779963686612724},
    {10, 0.8760930160458214554378},
    {11, 0.8811152310297894011402},
    {12, 0.8849537821142140641135},
    {13, 0.8879522867099341454454},
    {14, 0.8903384907567645757359},
    {15, 0.8922680618935222415355},
    {16, 0.8938502675661409814453},
    {17, 0.8951636028713456662368},
    {18, 0.8962656160996183456015},
    {19, 0.8971992654375733954931},
    {20, 0.8979971369412870616244},
    {21, 0.8986843072448409000504},
    {22, 0.8992803261752690249413},
    {23, 0.8998006151212900237560},
    {24, 0.9002574697586602003252},
    {25, 0.9006607899675571754954},
    {26, 0.9010186185165792187847},
    {27, 0.9013375436589472194557},
    {28, 0.9016230035331341805301},
    {29, 0.9018795187985766700463},
    {30, 0.9021108721996777673586},
}};

// Limit n -> infinity: the unit disc, 128 / (45 pi).
inline constexpr double mean_distance_disc = 0.9054147873672267990407;

// M_m(P(5, 1)), m = -1..10.
inline constexpr std::array<TableEntry, 12> pentagon_moments = {{
    {-1, 1.9415327473497402372868},
    {0, 1.0000000000000000000000},
    {1, 0.7936981950337533817609},
    {2, 0.7696723314583158080340},
    {3, 0.8405997327695081837984},
    {4, 0.9943992743402456480625},
    {5, 1.2464459876357066639079},
    {6, 1.6329241840475589608788},
    {7, 2.2153350083904270510078},
    {8, 3.0921819711804345475370},
    {9, 4.4193615730496946929897},
    {10, 6.4437514108047493422238},
}};

struct ClosedForm {
    int n;
    int m;
    double value;
    const char* form;  // in units of r^m
};

// Exact moments M_m(P(n, 1)) with ln = natural log.
inline constexpr ClosedForm closed_forms[] = {
    {3, -1, 2.537136402390255908745551, "4*sqrt3*ln3/3"},
    {3, 0, 1, "1"},
    {3, 1, 0.6318380067826792484393638, "sqrt3/5+3*sqrt3*ln3/20"},
    {3, 2, 0.5, "1/2"},
    {3, 3, 0.4530976796332669770856172, "51*sqrt3/280+81*sqrt3*ln3/1120"},
    {3, 4, 0.45, "9/20"},
    {3, 5, 0.4777004770398382039572418, "383*sqrt3/1792+405*sqrt3*ln3/7168"},
    {3, 6, 0.5335714285714285714285714, "747/1400"},
    {3, 7, 0.6204994078342005238912084, "6669*sqrt3/22528+5103*sqrt3*ln3/90112"},
    {3, 8, 0.7457142857142857142857143, "261/350"},
    {3, 9, 0.9211287091183002599840534, "977913*sqrt3/2129920+1240029*sqrt3*ln3/18743296"},
    {3, 10, 1.164656771799628942486085, "2511/2156"},
    {4, -1, 2.102376668809652086110539, "-4/3+2*sqrt2/3+2*sqrt2*ln(1+sqrt2)"},
    {4, 0, 1, "1"},
    {4, 1, 0.7373786350765663487695719, "2/15+2*sqrt2/15+sqrt2*ln(1+sqrt2)/3"},
    {4, 2, 0.6666666666666666666666667, "2/3"},
    {4, 3, 0.680849224617851828123451, "34/105+8*sqrt2/105+sqrt2*ln(1+sqrt2)/5"},
    {4, 4, 0.7555555555555555555555556, "34/45"},
    {4, 5, 0.8917368595658343928027334, "73/126+4*sqrt2/63+5*sqrt2*ln(1+sqrt2)/28"},
    {4, 6, 1.104761904761904761904762, "116/105"},
    {4, 7, 1.42436166880053888630977, "3239/2970+32*sqrt2/495+7*sqrt2*ln(1+sqrt2)/36"},
    {4, 8, 1.899682539682539682539683, "2992/1575"},
    {4, 9, 2.609347790010842049368484, "1721/780+32*sqrt2/429+21*sqrt2*ln(1+sqrt2)/88"},
    {4, 10, 3.678691678691678691678692, "7648/2079"},
    {5, 1, 0.7936981950337533817609716, "sqrt2/480*sqrt(5+sqrt5)*(24*sqrt5-8-(35+9*sqrt5)*log5-2*(25+11*sqrt5)*ln(sqrt5-2))"},
    {5, 2, 0.7696723314583158080340978, "7/12+sqrt5/12"},
    {5, 4, 0.9943992743402456480625126, "47/72+11*sqrt5/72"},
    {5, 6, 1.632924184047558960878812, "167/168+2*sqrt5/7"},
    {5, 8, 3.092181971180434547537025, "65/36+145*sqrt5/252"},
    {5, 10, 6.443751410804749342223892, "427375/116424+625*sqrt5/504"},
    {6, -1, 1.862005024838907191601642, "-16/9+8/(3*sqrt3)+22*ln3/9-4*ln(2+sqrt3)/9"},
    {6, 0, 1, "1"},
    {6, 1, 0.8262589494902320823142838, "-7/90+7/(10*sqrt3)+19*ln3/40-ln(2+sqrt3)/60"},
    {6, 2, 0.8333333333333333333333333, "5/6"},
    {6, 3, 0.9456723196192178065490551, "817/5040+117*sqrt3/560+867*ln3/2240-3*ln(2+sqrt3)/1120"},
    {6, 4, 1.161111111111111111111111, "209/180"},
    {6, 5, 1.508759360998888144342085, "146431/290304+963*sqrt3/3584+7045*ln3/14336-5*ln(2+sqrt3)/7168"},
    {6, 6, 2.046428571428571428571429, "573/280"},
    {6, 7, 2.870858956604881320356595, "7886969/6082560+8541*sqrt3/20480+139797*ln3/180224-21*ln(2+sqrt3)/90112"},
    {6, 8, 4.13873015873015873015873, "13037/3150"},
    {6, 9, 6.102738145789745391703056, "1395486403/421724160+34152111*sqrt3/46858240+52256421*ln3/37486592-1701*ln(2+sqrt3)/18743296"},
    {6, 10, 9.171837421837421837421837, "76273/8316"},
    {8, 1, 0.8600079780154972472894755, "4*sqrt2*pi/3+2*sqrt(2-sqrt2)*(1/5+13*sqrt2/120-(1/20+sqrt2/60+2*pi/3)*sqrt(2+sqrt2)-(14+91*sqrt2/10)*ln(2+sqrt2)/48+(1+7*sqrt2/10)*ln(2-sqrt2)/48 +(1/3-sqrt2/4)*ln(2+sqrt(2+sqrt2))/20+(21+29*sqrt2/2)*ln(2+sqrt(2-sqrt2))/40)"},
    {8, 2, 0.9023689270621825081336148, "2/3+sqrt2/6"},
    {8, 4, 1.358387044399322684018378, "77/90+16*sqrt2/45"},
    {8, 6, 2.579468493057468108843199, "157/105+23*sqrt2/30"},
    {8, 8, 5.604552735013775629119937, "326/105+928*sqrt2/525"},
    {8, 10, 13.30466923652337374194709, "2132/297+3002*sqrt2/693"},
    {10, 1, 0.8760930160458214554378515, "(4*(sqrt(5125+2110*sqrt5)-24-11*sqrt5)-(505+239*sqrt5)*log2-30*(4+3*sqrt5)*log5-(205+107*sqrt5)*ln(1+sqrt5)+(705+343*sqrt5)*ln(3+sqrt5) -(105+47*sqrt5)*ln(sqrt5+sqrt(10+2*sqrt5))-(65-29*sqrt5)*ln(sqrt5+sqrt(10-2*sqrt5))+(5+3*sqrt5)*ln(5-sqrt5+2*sqrt(10-2*sqrt5)))/600"},
    {10, 2, 0.9363389981249824747007645, "3/4+sqrt5/12"},
    {10, 4, 1.461758228770790688438527, "121/120+73*sqrt5/360"},
    {10, 6, 2.87663269394037504446346, "1513/840+101*sqrt5/210"},
    {10, 8, 6.472715330000146096782429, "23983/6300+1073*sqrt5/900"},
    {10, 10, 15.90100828072069905189549, "149279/16632+223*sqrt5/72"},
    {12, 1, 0.8849537821142140641135237, "(504-660*sqrt2+396*sqrt3-4*sqrt6+2*(3+sqrt3)*sqrt(2+sqrt3)+6*(1+47*sqrt3)*sqrt(2-sqrt3)-27/2*(15+11*sqrt3)*ln3-4*(27-sqrt3)*ln(1+sqrt2)-4*sqrt3*ln(2+sqrt3)+2*(666+397*sqrt3)*ln(2-sqrt3)-(33-19*sqrt3)*ln(2+sqrt(2+sqrt3))+3*(899+523*sqrt3)*ln(2+sqrt(2-sqrt3)))/(1080*sqrt2)"},
    {12, 2, 0.9553418012614795489212411, "2/3+1/(2*sqrt3)"},
    {12, 4, 1.521395842691156371031981, "163/180+16/(15*sqrt3)"},
    {12, 6, 3.053435218813128441692431, "71/42+661/(280*sqrt3)"},
    {12, 8, 7.005223363088525591866324, "2357/630+424/(75*sqrt3)"},
    {12, 10, 17.54216958240027060899959, "19099/2079+521/(36*sqrt3)"},
};

// Mean distance over side length, M_1 / ell_1.
inline constexpr double triangle_mean_over_side = 0.36479184330021645371;
inline constexpr double square_mean_over_side = 0.52140543316472067833;

// Disc variance M_2 - M_1^2 for r = 1.
inline constexpr double disc_variance = 0.18022406281675948280;

// Chord power integral S_2 of the unit hexagon, as published (6 decimals).
inline constexpr double hexagon_s2 = 12.568534;

}  // namespace golden

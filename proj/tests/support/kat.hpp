#pragma once

// Hand-checked known-answer fixtures: a pencil-scale domain whose every
// quantity fits in one digit or two, and a full 1024-bit signing record
// with all intermediate verification values frozen. Each number below was
// reproduced with an independent big-integer implementation before being
// committed here; tests compare against them exactly.

#include "trisig/bigint.hpp"

namespace kat1024 {

inline const trisig::bigint P(
    "947722148354630050537346126889874207454007043676413224022561"
    "203232011012018888701371707053734985713130303166798781748045"
    "749802447791959076060987689640317391347792788487982298199349"
    "013242221062107118425493741024914172963467724538977995541175"
    "444427007691684616643592277441939139244958986210413999252109"
    "10234489");
inline const trisig::bigint Q("875964080856129786106302881659054003458244253873");
inline const trisig::bigint G(
    "540101570024805441267072742761888596856108217009274720128983"
    "602358707084212996041390972417923715770599593251420677788894"
    "704063133555201170818988618052933995304155103003217921737377"
    "418069165608670923004369195350624645066569726925118138080165"
    "144238960128731866130490259751906784207981622949251676291247"
    "6306877");
inline const trisig::bigint ALPHA(
    "527223567708677258197455859133222937206317701786932418731523"
    "516024196571708517464486218485539033559830077347165303013213"
    "561259060793012825365913429484950109971200011922722260279971"
    "562500222376432011868256652602811604554081166154971036251524"
    "872300380557802833133742393048305876853382003116504889806209"
    "1119992");
inline const trisig::bigint X("371575259833906365510684947508061994685469500919");
inline const trisig::bigint Y(
    "630775473718828368762466985220658584945893263294126314383120"
    "993968845387965610104660428127774907934247973201240651311501"
    "503441027132467171486473953854563208575553814779236262480211"
    "822023628647029130388045798365258515352888406082786247355168"
    "380930043030984132308743260982091689595031807130951481230017"
    "18879430");

// One full signing: digest H under nonces (K, L) yields (R, S, T);
// verification recomputes exponents (U1, U2, U3) and accepts with v == S.
inline const trisig::bigint H("123456789123456789123456789");
inline const trisig::bigint K("1250");
inline const trisig::bigint L("98561");
inline const trisig::bigint R(
    "578164865504179483400175892277942835618633089799304565306500"
    "743940987577373931041772945246678159353311485596586003732890"
    "945772134189937140959571809686022128752854208088316685668654"
    "806317947603481040882949702784839302996808284915315723510651"
    "254283784934213768940718951401199014260269177055950607116952"
    "34702599");
inline const trisig::bigint S("544621099954698016824748794802717914623249907270");
inline const trisig::bigint T("556119013460694353294511753174948468444082504155");
inline const trisig::bigint U1("141694501602616348876138369891969021089672807186");
inline const trisig::bigint U2("662220963645670062957535725628437873682297068731");
inline const trisig::bigint U3("68770021753905823557652121472773639225383494491");

// SHA-256 regression anchors reduced into this domain's exponent group.
inline const trisig::bigint DIGEST_EMPTY("55584277966181462950357356809152685812392658338");
inline const trisig::bigint DIGEST_ABC("75157490281082717665941794068854833745868020244");

}  // namespace kat1024

namespace toy {

// p = 23, q = 11, g = 5 gives alpha = 5^2 mod 23 = 2 of order 11.
inline const trisig::bigint P(23);
inline const trisig::bigint Q(11);
inline const trisig::bigint G(5);
inline const trisig::bigint ALPHA(2);

}  // namespace toy

// Copyright 2026 The cdc Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cdc/golden.hpp"

namespace cdc {

namespace {

constexpr GoldenRow kTable1[] = {
    {2, 15, 4, 5, "1252409384941", "1235787711790"},
    {3, 15, 4, 5, "12399152701973746721", "12394544365887696067"},
    {4, 15, 4, 5, "1215514411297742359058971", "1215478900794081741379237"},
    {5, 15, 4, 5, "9113715532358125452199289569", "9113676963739967346201192181"},
    {7, 15, 4, 5, "6369953433032799634940814403550401", "6369951878418978850938882154998943"},
    {8, 15, 4, 5, "1329603936275508854413747923192211831", "1329603830010446369320349184800629897"},
    {9, 15, 4, 5, "147834451659241281142237889908886770241", "147834447219250203363412960695716746417"},
    {2, 16, 4, 5, "20021868703021", "19772603404689"},
    {3, 16, 4, 5, "1004246333824396831601", "1003958093636913086356"},
    {4, 16, 4, 5, "311169775104436392108967291", "311162598603284926601722789"},
    {5, 16, 4, 5, "5696067828980651367335863660369", "5696048102337479591400199274056"},
    {7, 16, 4, 5, "15294257681112128770405497391944583201", "15294254460083968221104260125199891012"},
    {8, 16, 4, 5, "5446057670176710830579259179780851932151", "5446057287722788328736150291737261978761"},
    {9, 16, 4, 5, "969941834171302637911606992269353378624481", "969941808205500584267352435307639908204424"},
    {2, 17, 4, 5, "320365633119931", "316361655057323"},
    {3, 17, 4, 5, "81343951054914823057601", "81320605584592333256896"},
    {4, 17, 4, 5, "79659462303038098228828589551", "79657625242440942039401907493"},
    {5, 17, 4, 5, "3560042392786324176231394246966849", "3560030063960924744701581895765556"},
    {7, 17, 4, 5, "36721512692312285771132498925095511388801", "36721504958661607698871396988494253570488"},
    {8, 17, 4, 5, "22307052217040048930179286541042123379285951", "22307050650512540994503272604052070322817161"},
    {9, 17, 4, 5, "6363788373997701968481732473171613640616521601", "6363788203636289333378099338862136580032063628"},
    {2, 18, 4, 5, "5125557140935621", "5061786480788587"},
    {3, 18, 4, 5, "6586984882892620375466801", "6586969052351977742082856"},
    {4, 18, 4, 5, "20392353563137486484409822692731", "20392352062064881161765714936261"},
    {5, 18, 4, 5, "2225018800862003413405883937426160369", "2225018789975577965438466389564044756"},
    {7, 18, 4, 5, "88168333413018579424197685118451711404973601", "88168333405746520084990224156399442519707072"},
    {8, 18, 4, 5, "91369679465994251166831903260963819527758453751", "91369679464499367913485404586035285169051407881"},
    {9, 18, 4, 5, "41752814404221893183457654349776548099387974166561", "41752814404057694316293709762272976069664226251756"},
    {2, 19, 4, 5, "82000714657355896", "80988583692738669"},
    {3, 19, 4, 5, "533545775512317389092508801", "533544493240510197079493944"},
    {4, 19, 4, 5, "5220442512163072842390763542302191", "5220442127888609577412002268988497"},
    {5, 19, 4, 5, "1390636750538751806795749107370809466849", "1390636743734736228399041491814662484526"},
    {7, 19, 4, 5, "211692168524657609159563235358302246119908739201", "211692168507197394724061528199514099366794683044"},
    {8, 19, 4, 5, "374250207092712452775584843883548745445452491759551", "374250207086589410973636217184400516522331058635329"},
    {9, 19, 4, 5, "273940215306099841176451031332562928972470621968108481", "273940215305022532409203029750272995891203951349923082"},
    {2, 18, 4, 6, "1321065731337118327", "1301902384896972957"},
    {3, 18, 4, 6, "43241984500836016475467263377", "43225562953761729683056546744"},
    {4, 18, 4, 6, "1336497734664697221079670997903343231", "1336458405032472190749500319115666769"},
    {5, 18, 4, 6, "869154313455571766784982919397200744721649", "869150623985533864501113464558715816063570"},
    {7, 18, 4, 6, "508273121397713162379788076978860454942323352347617", "508272997250425038178122079989337055565420133852250"},
    {8, 18, 4, 6, "1532929073533720122381792167972707130036770914661707007", "1532928950959596238597654001568049806785911717931336256"},
    {9, 18, 4, 6, "1797321852988389530622964571912268841144546741298887430561", "1797321798992219760708364878565965820546280222286535998208"},
    {2, 19, 4, 6, "42208289248791279191", "41660876316712223851"},
    {3, 19, 4, 6, "10503812381857770555608261193203", "10503811797764100313173626438410"},
    {4, 19, 4, 6, "1368533407936318281870034335245915778619", "1368533406753251523327488538756265820613"},
    {5, 19, 4, 6, "2716095700040832081994799751630916148882970869", "2716095699954793272557435557305913288978107256"},
    {7, 19, 4, 6, "8542544264789674046368728045599749570456742066054954023", "8542544264787894328644239651424668612867543534298440406"},
    {8, 19, 4, 6, "50231015865045467079871255733225534110744159933103898225143", "50231015865044049546367926323381856072893849422409772176905"},
    {9, 19, 4, 6, "106130054908692097595495275184534478863507421929255303118181289", "106130054908691584634732118842258778340200008478852505231237828"},
    {2, 18, 6, 6, "282952629488341", "282206169223861"},
    {3, 18, 6, 6, "79773409456539341408321", "7977052899429695519499"},
    {4, 18, 6, 6, "79228596836450068221001288411", "79228465213535437618551984193"},
    {5, 18, 6, 6, "3552716061490180809120486350237569", "3552715498605377972125976548834375"},
    {7, 18, 6, 6, "36703369303167227557598648188527350390401", "36703369126904823762048081643830813838569"},
    {8, 18, 6, 6, "22300745391757404242034414621765810585581431", "22300745364690190225432828772081255730905601"},
    {9, 18, 6, 6, "6362685459865451038148930813165508870317893121", "6362685457559470499618039892582186036406787787"},
    {2, 19, 6, 6, "4527245732135821", "4515298730748862"},
    {3, 19, 6, 6, "6461646166374500995275281", "6461417369472937542117973"},
    {4, 19, 6, 6, "20282520790132976684274968510491", "20282487415579548140041494597697"},
    {5, 19, 6, 6, "2220447538431364272651600126040019569", "2220447188517452217698097229003922001"},
    {7, 19, 6, 6, "88124789696904513393222987051228915467935201", "88124789274625593704300569118173789808207533"},
    {8, 19, 6, 6, "91343853124638327776833862508434972183748561271", "91343853013939625003475366792854319199699599873"},
    {9, 19, 6, 6, "41745579302177224261344043029615239593994446168481", "41745579287064298367037383503578317354686374220297"},
};

constexpr GoldenRow kTable2[] = {
    {2, 12, 6, 6, "16865101", "16813481"},
    {3, 12, 6, 6, "282454201121", "282444003514"},
    {4, 12, 6, 6, "281476519727131", "281476052114497"},
    {5, 12, 6, 6, "59604684750269569", "59604675306650126"},
    {7, 12, 6, 6, "191581237048517640001", "191581236128477745586"},
    {8, 12, 6, 6, "4722366523787007379831", "4722366518055302169089"},
    {9, 12, 6, 6, "79766443311676870053761", "79766443282767710316742"},
    {2, 14, 6, 7, "34532238023", "34432090228"},
    {3, 14, 6, 7, "50035894106387201", "50031545103789355"},
    {4, 14, 6, 7, "1180598085852241507903", "1180591620717679804753"},
    {5, 14, 6, 7, "2910384996920980634798249", "2910383045673376465235151"},
    {7, 14, 6, 7, "378818703472375564718065717033", "378818692265664782360946466387"},
    {8, 14, 6, 7, "40564819558769908757687294403071", "40564819207303340852292565865025"},
    {9, 14, 6, 7, "2503155512361524878607376336254513", "2503155504993241601338448821594903"},
    {2, 16, 8, 8, "1099562828461", "1099528467457"},
    {3, 16, 8, 8, "12157665957047665121", "12157665459056935444"},
    {4, 16, 8, 8, "1208925820022362618115611", "1208925819614629174771969"},
    {5, 16, 8, 8, "9094947017807612368002449569", "9094947017729282379150781876"},
    {8, 16, 8, 8, "1329227995784921367439420337873299831", "1329227995784915872903807060297125889"},
    {9, 16, 8, 8, "147808829414346014311987492968729104321", "147808829414345923316083210206426350884"},
    {2, 16, 6, 8, "282927683836351", "282065502894292"},
    {3, 16, 6, 8, "79773403858211367304001", "79766443077154959293127"},
    {4, 16, 6, 8, "79228596795209597286010744831", "79228162514264619069883417872"},
    {5, 16, 6, 8, "3552716061446350478564136876781249", "3552713678800500988960303012503775"},
    {7, 16, 6, 8, "36703369303165506402681624627151289328001", "36703368217294125441421792268854792155015"},
    {8, 16, 6, 8, "22300745391757287672361562599998342819479551", "22300745198530623141540440639170885812523072"},
    {9, 16, 6, 8, "6362685459865446204861526038554759414900421761", "6362685441135942358474908528981840165075519087"},
    {2, 18, 8, 9, "18015215398068295", "18014674602898481"},
    {3, 18, 8, 9, "58149739380417667198523945", "58149737003040060077869735"},
    {4, 18, 8, 9, "324518553767842986423212886251071", "324518553658426726783224741101633"},
    {5, 18, 8, 9, "55511151231735878357960116829164048249", "5511151231257827021181587219248047001"},
    {7, 18, 8, 9, "4318114567396591817623016095285299264536325745", "4318114567396436564035293097709356501432634891"},
    {8, 18, 8, 9, "5846006549323635837934034302923933590182378512895", "5846006549323611672814739330865150093023313396225"},
    {9, 18, 8, 9, "3381391913522728424620280247018514713413256655866641", "3381391913522726342930221472392241320293166235632813"},
    {2, 18, 6, 9, "9271545156551861247", "9242714023345881465"},
    {3, 18, 6, 9, "1144661280188113228748844786839", "1144561273430987589803690699062"},
    {4, 18, 6, 9, "85071058146182803276503351119848669183", "85070591730234620588210416203639381057"},
    {5, 18, 6, 9, "108420289965710977906690845017097020371093749", "108420217248550443415297195374965698255868876"},
    {7, 18, 6, 9, "174251503388975551318884922599369466772818993479502027", "174251498233690814305513203525556311342652949519875530"},
    {8, 18, 6, 9, "784637723721919791138381634635235733830468771226268467199", "784637716923335095479474002419511965161887731769327059457"},
    {9, 18, 6, 9, "1310020512493866339206870302329188713348371417431388541027913", "1310020508637620352391208118240901618983186587598009041655712"},
};

constexpr GoldenRow kTable3[] = {
    {2, 17, 6, 8, "18073187439672244", "18052309715589680"},
    {3, 17, 6, 8, "58151863451946414791142287", "58149737004893178906982592"},
    {4, 17, 6, 8, "324519094951964764830545503899935", "324518553658445173598894784069722"},
    {5, 17, 6, 8, "55511160040730079834424837423236913732", "55511151231257850304257974463391093912"},
    {7, 17, 6, 8, "4318114588142293281901457797760474522447137650", "4318114567396436565139720799403479106597531752"},
    {8, 17, 6, 8, "5846006556420871874075455669759065390165175356426", "5846006549323611672893967493970879175905108820562"},
    {9, 17, 6, 8, "3381391914748407703492580638492271571254198293516660", "3381391913522726342933655156221409046767887551853552"},
};

constexpr GoldenRow kTable4[] = {
    {2, 18, 6, 6, "282957166112041", "282206169223861"},
    {3, 18, 6, 6, "79773409708059646924801", "79770528994296955194991"},
    {4, 18, 6, 6, "79228596837171602219181433561", "79228465213535437618551984193"},
    {5, 18, 6, 6, "3552716061490558316664513479945761", "3552715498605378031730651855484501"},
    {7, 18, 6, 6, "36703369303167232772339895338921195414401", "36703369126904824755396790969987924701979"},
    {8, 18, 6, 6, "22300745391757404476560672559219358376203601", "22300745364690190225432828772081255730905601"},
    {9, 18, 6, 6, "6362685459865451044936927568858327487086310721", "6362685457559470145240699283992755392451222033"},
    {2, 18, 4, 6, "1321055665352277121", "1301902384896972957"},
    {3, 18, 4, 6, "43241984454039791949376848001", "43225562953761729683056546744"},
    {4, 18, 4, 6, "1336497734661564567903849870119608321", "1336458405032472190749500319115666769"},
    {5, 18, 4, 6, "869154313455552863010495292746726010500001", "869150623985533847218379378322608115640776"},
    {7, 18, 4, 6, "508273121397713151914173798947508628845999547723521", "508272997250425080540503340954642021097480629123655"},
    {8, 18, 4, 6, "1532929073533720120343154848157539946320174365857546241", "1532928950959596238597654001568049806785911717931405888"},
    {9, 18, 4, 6, "1797321852988389530407874000031880315113074804045244546241", "1797321798992219760448646358825022918933920879979928528654"},
    {2, 15, 4, 5, "1252379805361", "1235787711790"},
    {3, 15, 4, 5, "12399152568347096641", "12394544365887696067"},
    {4, 15, 4, 5, "1215514411238392851780481", "1215478900794081741379237"},
    {5, 15, 4, 5, "9113715532351043940956916001", "9113676963739967346201192181"},
    {7, 15, 4, 5, "6369953433032789460601458266169601", "6369951878418978850938882154998943"},
    {8, 15, 4, 5, "1329603936275508669606118276013276161", "1329603830010446369320349184800629897"},
    {9, 15, 4, 5, "147834451659241278745558658029146634561", "147834447219250203363412960695716746417"},
};

constexpr GoldenRow kTable5[] = {
    {2, 20, 4, 5, "1315398998655356311", ""},
    {3, 20, 4, 5, "43233485281590911580807321041", ""},
    {4, 20, 4, 5, "1336472440592799231370494712907901631", ""},
    {5, 20, 4, 5, "869151650599051646738433375279575594407249", ""},
    {7, 20, 4, 5, "508273020693237561132754855997185401884597574981601", ""},
    {8, 20, 4, 5, "1532928970776586688938815376036341347556330253989504511", ""},
    {9, 20, 4, 5, "1797321806605534646862867182733878159175088330825288747361", ""},
    {2, 24, 6, 6, "4747234173413401936981", ""},
    {3, 24, 6, 6, "22530367127371196208130075198509281", ""},
    {4, 24, 6, 6, "22300867449560834030210344616161360246897891", ""},
    {5, 24, 6, 6, "211758378832969565256609532806254712000815561347009", ""},
    {7, 24, 6, 6, "7031676686916460305530685695221278081277908734094305105188801", ""},
    {8, 24, 6, 6, "105312292581044862467221898491140379101347355113312142905458229671", ""},
    {9, 24, 6, 6, "507528787550401889216222390017824754036868775577998894410404563393281", ""},
};

}  // namespace

std::span<const GoldenRow> golden_table(int id) {
  switch (id) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    case 4: return kTable4;
    case 5: return kTable5;
    default: throw ParameterError("no golden table " + std::to_string(id));
  }
}

}  // namespace cdc

#include "aistrips/geo.hpp"

namespace ais::geo {

// Study-area ring, 80 vertices with the closing vertex repeating the
// first. The narrow slit near lon 15 / lat 55.25 carves the island of
// Bornholm out of the area, so island towns are NOT inside.
const PolygonRing& baltic_aoi() {
  static const PolygonRing ring{{
      {55.43261413541811, 14.270042565757286},
      {55.31431394562776, 14.159660553673517},
      {55.37509769839545, 13.943485869589487},
      {55.38441331424108, 13.736216591081442},
      {55.35068289739041, 13.541496069513602},
      {55.3120526417598, 13.304762600364848},
      {55.35737054573761, 12.890616626826521},
      {55.29416763469967, 12.560203703925447},
      {55.11720877415865, 12.386701794787081},
      {54.969233301575066, 12.603693008332394},
      {54.820638173689154, 12.414218417997406},
      {54.71037433774884, 12.680196098521764},
      {54.62303076992553, 13.079986989396057},
      {54.791020033388484, 13.468249950804049},
      {54.59832703857482, 13.51170971146399},
      {54.599532023328116, 13.737123206805933},
      {54.47789437636281, 13.726267920343783},
      {54.44431060639897, 13.80248977691796},
      {54.25320187474711, 13.816069958005013},
      {54.099696784013666, 14.00875608215033},
      {53.9970757396895, 14.374713839968468},
      {54.01043871434795, 14.493199683979855},
      {54.039715072849376, 14.69316702656555},
      {54.15181830569306, 15.0716126364171},
      {54.19829090233562, 15.307556101054333},
      {54.219319534665914, 15.433737254059501},
      {54.231170229650914, 15.587213933721209},
      {54.261504194731344, 15.760706246048885},
      {54.29035882936187, 15.893325254169469},
      {54.35665628585242, 16.088906570305276},
      {54.43229272091137, 16.129551606193363},
      {54.506990798416574, 16.07378248639351},
      {54.6207919243221, 16.071707542331847},
      {54.703276474917025, 16.151084277320372},
      {54.878985427323144, 16.316183574856048},
      {55.032487511103405, 16.185762815825427},
      {55.263159654985714, 16.022249754316388},
      {55.24975322797314, 14.94633767765143},
      {55.23175499690595, 14.989481884064402},
      {55.194093599183475, 15.057754966863946},
      {55.17775630670721, 15.149476602505743},
      {55.10658148747229, 15.186039541704602},
      {55.03007704275702, 15.169752683294195},
      {54.96996354072045, 15.08403056247248},
      {54.99971171035721, 14.886938417059259},
      {55.051135527462726, 14.70836384348897},
      {55.126136026081895, 14.659047407611874},
      {55.229802490475606, 14.680956989048685},
      {55.318211974097125, 14.769200731909004},
      {55.22903165438766, 15.053715508170237},
      {55.246488932310626, 16.056195026446222},
      {55.66958011622285, 16.040908236572225},
      {55.87160815960177, 16.172181461304735},
      {55.88783732919536, 16.055258173762706},
      {55.90960258872895, 15.89946307176809},
      {55.91288018401511, 15.735262190453325},
      {55.901890079143655, 15.629949715260613},
      {55.91158064472876, 15.528182723935682},
      {55.914561883012205, 15.325246448324696},
      {55.91768618110561, 15.20730036968636},
      {55.92741101403853, 14.982694397745743},
      {55.94381732572509, 14.790771706957553},
      {55.94202233031005, 14.63178811498484},
      {55.932482624665084, 14.514148681878968},
      {55.90693635359379, 14.42025881204937},
      {55.82838664780491, 14.345549271550066},
      {55.76246662446725, 14.294572271785078},
      {55.69540583895088, 14.323345581638538},
      {55.6414674327225, 14.362663965300833},
      {55.629759612922975, 14.372349875380577},
      {55.61049134061141, 14.392639023006781},
      {55.5843963369995, 14.419946988454956},
      {55.56703906821493, 14.42082516398884},
      {55.54595071001545, 14.413903860207025},
      {55.515193046204615, 14.4010070379913},
      {55.47991837055746, 14.362030314861514},
      {55.465635294498604, 14.346057981017491},
      {55.45243414314477, 14.323402126778861},
      {55.44187815084099, 14.297726058444235},
      {55.43261413541811, 14.270042565757286},
  }};
  return ring;
}

}  // namespace ais::geo

// Generated by tools/gen_tw_table.py. Do not edit.
#pragma once

#include <array>

namespace mpedge::detail {

struct TwNode {
  double x;
  double cdf;
  double pdf;
};

inline constexpr std::array<TwNode, 721> kTwTable{{
    {-10.000, 3.15522003343675032e-22, 4.30036976331580160e-21},
    {-9.975, 4.43261021150504462e-22, 6.01291993384369150e-21},
    {-9.950, 6.21738654260595329e-22, 8.39380160879324685e-21},
    {-9.925, 8.70614258732042278e-22, 1.16984824884473076e-20},
    {-9.900, 1.21721978824240673e-21, 1.62782364485562568e-20},
    {-9.875, 1.69914371920841212e-21, 2.26150560904901792e-20},
    {-9.850, 2.36804341470325122e-21, 3.13680472097286529e-20},
    {-9.825, 3.29509432326114239e-21, 4.34401920394290701e-20},
    {-9.800, 4.57790523067184311e-21, 6.00627402238257507e-20},
    {-9.775, 6.35002616685313694e-21, 8.29149708666825869e-20},
    {-9.750, 8.79433260663807095e-21, 1.14280906979204161e-19},
    {-9.725, 1.21605812778038524e-20, 1.57264691965581756e-19},
    {-9.700, 1.67889428428249710e-20, 2.16076131166955832e-19},
    {-9.675, 2.31430617381779230e-20, 2.96415708856784309e-19},
    {-9.650, 3.18531123455980014e-20, 4.06000464124922388e-19},
    {-9.625, 4.37725322082929954e-20, 5.55224559486060989e-19},
    {-9.600, 6.00600649058693695e-20, 7.58120115656194713e-19},
    {-9.575, 8.22812605212473791e-20, 1.03355850706320716e-18},
    {-9.550, 1.12551122361211483e-19, 1.40689119747799360e-18},
    {-9.525, 1.53722447318946655e-19, 1.91213968822939416e-18},
    {-9.500, 2.09632798317042813e-19, 2.59483250711605671e-18},
    {-9.475, 2.85443472909096898e-19, 3.51587132433798585e-18},
    {-9.450, 3.88082616930122988e-19, 4.75657577980194596e-18},
    {-9.425, 5.26830300570818037e-19, 6.42529630899707430e-18},
    {-9.400, 7.14102389382493260e-19, 8.66624649557195020e-18},
    {-9.375, 9.66491709331061620e-19, 1.16710747939187222e-17},
    {-9.350, 1.30611919734613763e-18, 1.56939839833544417e-17},
    {-9.325, 1.76245012463366881e-18, 2.10717025058537497e-17},
    {-9.300, 2.37466346003290330e-18, 2.82496120515497196e-17},
    {-9.275, 3.19478311741521920e-18, 3.78158434551060443e-17},
    {-9.250, 4.29175498445398379e-18, 5.05457199445815138e-17},
    {-9.225, 5.75685082588314852e-18, 6.74599730773635329e-17},
    {-9.200, 7.71069289850917773e-18, 8.99002956021387493e-17},
    {-9.175, 1.03124280453765004e-17, 1.19627245844583561e-16},
    {-9.150, 1.37718024818297174e-17, 1.58948254788848873e-16},
    {-9.125, 1.83647075037768234e-17, 2.10881987026862108e-16},
    {-9.100, 2.44535432366690405e-17, 2.79371824577126140e-16},
    {-9.075, 3.25136965505056693e-17, 3.69561650686646406e-16},
    {-9.050, 4.31677210702374995e-17, 4.88150956272021722e-16},
    {-9.025, 5.72297836947387746e-17, 6.43851901963761399e-16},
    {-9.000, 7.57629482449777408e-17, 8.47977046595215063e-16},
    {-8.975, 1.00153225568190745e-16, 1.11519287696727154e-15},
    {-8.950, 1.32205025438098801e-16, 1.46448634456431915e-15},
    {-8.925, 1.74264088955336918e-16, 1.92040115123247565e-15},
    {-8.900, 2.29375100114040480e-16, 2.51461434007442948e-15},
    {-8.875, 3.01484199771801722e-16, 3.28794995191881671e-15},
    {-8.850, 3.95698964422712220e-16, 4.29294476120948689e-15},
    {-8.825, 5.18619259206373753e-16, 5.59710032586312517e-15},
    {-8.800, 6.78761972253834820e-16, 7.28702520146530487e-15},
    {-8.775, 8.87101160584806301e-16, 9.47367569790044880e-15},
    {-8.750, 1.15775723163757920e-15, 1.22989944614801838e-14},
    {-8.725, 1.50887034838510109e-15, 1.59442831496542894e-14},
    {-8.700, 1.96371415584491594e-15, 2.06407945999982517e-14},
    {-8.675, 2.55210248331963688e-15, 2.66830497625871068e-14},
    {-8.650, 3.31217433364203980e-15, 3.44456082484728106e-14},
    {-8.625, 4.29264742058770031e-15, 4.44041147944610948e-14},
    {-8.600, 5.55566147578512068e-15, 5.71617040821200814e-14},
    {-8.575, 7.18036622794238674e-15, 7.34820671223394584e-14},
    {-8.550, 9.26743141119632308e-15, 9.43307916699631112e-14},
    {-8.525, 1.19447142440124724e-14, 1.20926959589472936e-13},
    {-8.500, 1.53743720058985972e-14, 1.54807479478201805e-13},
    {-8.475, 1.97617769589195142e-14, 1.97907199677068427e-13},
    {-8.450, 2.53666568591420184e-14, 2.52658386584270050e-13},
    {-8.425, 3.25170207695571223e-14, 3.22114249654135922e-13},
    {-8.400, 4.16265335701875463e-14, 4.10102027505461763e-13},
    {-8.375, 5.32161449804366590e-14, 5.21412339452880664e-13},
    {-8.350, 6.79409946205137815e-14, 6.62033137554491382e-13},
    {-8.325, 8.66238313499571623e-14, 8.39438396128146571e-13},
    {-8.300, 1.10296451170588352e-13, 1.06294366283192057e-12},
    {-8.275, 1.40251023394062131e-13, 1.34414348572246758e-12},
    {-8.250, 1.78103542479509719e-13, 1.69744853201033384e-12},
    {-8.225, 2.25872191992222675e-13, 2.14074451487369595e-12},
    {-8.200, 2.86073967007064342e-13, 2.69619899493350541e-12},
    {-8.175, 3.61843640544014436e-13, 3.39124809763875016e-12},
    {-8.150, 4.57080038078932855e-13, 4.25980127001852934e-12},
    {-8.125, 5.76625641247677115e-13, 5.34371040371799741e-12},
    {-8.100, 7.26486765693555641e-13, 6.69455826078332710e-12},
    {-8.075, 9.14103091507609973e-13, 8.37583285137772535e-12},
    {-8.050, 1.14867733115681312e-12, 1.04655676311592370e-11},
    {-8.025, 1.44157748065821443e-12, 1.30595411092944871e-11},
    {-8.000, 1.80682740751278451e-12, 1.62751510809388636e-11},
    {-7.975, 2.26170399953766726e-12, 2.02560965595014619e-11},
    {-7.950, 2.82746307836948459e-12, 2.51780294603288803e-11},
    {-7.925, 3.53022084346870261e-12, 3.12553671456388452e-11},
    {-7.900, 4.40202226429826354e-12, 3.87494903016072847e-11},
    {-7.875, 5.48213452991411399e-12, 4.79785963941304713e-11},
    {-7.850, 6.81861101414622870e-12, 5.93295254949210118e-11},
    {-7.825, 8.47017886569517122e-12, 7.32719305794933839e-11},
    {-7.800, 1.05085151887680426e-11, 9.03752373455167661e-11},
    {-7.775, 1.30209871649530685e-11, 1.11328909645365204e-10},
    {-7.750, 1.61139465366136926e-11, 1.36966633923376478e-10},
    {-7.725, 1.99166846728008989e-11, 1.68295135763898031e-10},
    {-7.700, 2.45861749240154907e-11, 2.06528470554292713e-10},
    {-7.675, 3.03127508320435242e-11, 2.53128770819023303e-10},
    {-7.650, 3.73268949346103058e-11, 3.09854592958112327e-10},
    {-7.625, 4.59073453693738370e-11, 3.78818205283604774e-10},
    {-7.600, 5.63907626346866939e-11, 4.62553373581858873e-10},
    {-7.575, 6.91832399271451595e-11, 5.64095452280945828e-10},
    {-7.550, 8.47739923372907004e-11, 6.87075889518287816e-10},
    {-7.525, 1.03751612495796825e-10, 8.35833572354357523e-10},
    {-7.500, 1.26823351158505522e-10, 1.01554584798970316e-09},
    {-7.475, 1.54837949573999785e-10, 1.23238245243534648e-09},
    {-7.450, 1.88812649200522219e-10, 1.49368614194794128e-09},
    {-7.425, 2.29965092263246449e-10, 1.80818432261269946e-09},
    {-7.400, 2.79750951179398340e-10, 2.18623666739088328e-09},
    {-7.375, 3.39908261655413886e-10, 2.64012446510216396e-09},
    {-7.350, 4.12509572879924328e-10, 3.18438821125927215e-09},
    {-7.325, 5.00023219304745460e-10, 3.83622097519980477e-09},
    {-7.300, 6.05385215805974287e-10, 4.61592613506845463e-09},
    {-7.275, 7.32083495320575993e-10, 5.54744922254039382e-09},
    {-7.250, 8.84256488650688595e-10, 6.65899508493324465e-09},
    {-7.225, 1.06680832652138247e-09, 7.98374301067210859e-09},
    {-7.200, 1.28554329446991990e-09, 9.56067425727396155e-09},
    {-7.175, 1.54732255052138556e-09, 1.14355283185768495e-08},
    {-7.150, 1.86024654693430114e-09, 1.36619064355438137e-08},
    {-7.125, 2.23386709172889177e-09, 1.63025432411501481e-08},
    {-7.100, 2.67943355713351132e-09, 1.94307702251586520e-08},
    {-7.075, 3.21017833483862192e-09, 2.31321975321229305e-08},
    {-7.050, 3.84164737658419920e-09, 2.75066440728919316e-08},
    {-7.025, 4.59208244378153624e-09, 3.26703495778859017e-08},
    {-7.000, 5.48286256049710996e-09, 3.87585062488338197e-08},
    {-6.975, 6.53901319701130208e-09, 4.59281522589252879e-08},
    {-6.950, 7.78979279244987991e-09, 5.43614742538525368e-08},
    {-6.925, 9.26936750032880248e-09, 6.42695715093668608e-08},
    {-6.900, 1.10175864118595501e-08, 7.58967404219395012e-08},
    {-6.875, 1.30808710635765510e-08, 8.95253445200137027e-08},
    {-6.850, 1.55132347638876537e-08, 1.05481342477903744e-07},
    {-6.825, 1.83774491790458283e-08, 1.24140554468621107e-07},
    {-6.800, 2.17463777167090794e-08, 1.45935755645404485e-07},
    {-6.775, 2.57044975875556727e-08, 1.71364694964161644e-07},
    {-6.750, 3.03496350544120763e-08, 2.00999147754143413e-07},
    {-6.725, 3.57949411035952016e-08, 2.35495121014600698e-07},
    {-6.700, 4.21711380510414231e-08, 2.75604342800279727e-07},
    {-6.675, 4.96290708851081731e-08, 3.22187179147838364e-07},
    {-6.650, 5.83426010232138812e-08, 3.76227136309643020e-07},
    {-6.625, 6.85118842165149764e-08, 4.38847120272323763e-07},
    {-6.600, 8.03670788238709894e-08, 5.11327641437314831e-07},
    {-6.575, 9.41725356858894285e-08, 5.95127169342894300e-07},
    {-6.550, 1.10231525953555243e-07, 6.91904859572427134e-07},
    {-6.525, 1.28891569348894180e-07, 8.03545894886350999e-07},
    {-6.500, 1.50550431235065285e-07, 9.32189701634149174e-07},
    {-6.475, 1.75662864008023452e-07, 1.08026132470446073e-06},
    {-6.450, 2.04748175513309881e-07, 1.25050626609351921e-06},
    {-6.425, 2.38398715068888119e-07, 1.44602911561444792e-06},
    {-6.400, 2.77289376375536904e-07, 1.67033632728068880e-06},
    {-6.375, 3.22188225507861654e-07, 1.92738351992179716e-06},
    {-6.350, 3.73968372246298259e-07, 2.22162770788002516e-06},
    {-6.325, 4.33621213208633156e-07, 2.55808489446441605e-06},
    {-6.300, 5.02271186672679392e-07, 2.94239349008655394e-06},
    {-6.275, 5.81192190752244331e-07, 3.38088404568711751e-06},
    {-6.250, 6.71825829207464480e-07, 3.88065582202646132e-06},
    {-6.225, 7.75801662647579392e-07, 4.44966074603195141e-06},
    {-6.200, 8.94959657057128019e-07, 5.09679533611985440e-06},
    {-6.175, 1.03137503635292841e-06, 5.83200120903435297e-06},
    {-6.150, 1.18738576160283967e-06, 6.66637481235721151e-06},
    {-6.125, 1.36562287581880957e-06, 7.61228705681026452e-06},
    {-6.100, 1.56904397075054253e-06, 8.68351355372227631e-06},
    {-6.075, 1.80097004955897957e-06, 9.89537619088741056e-06},
    {-6.050, 2.06512607878544802e-06, 1.12648968108389688e-05},
    {-6.025, 2.36568554158709381e-06, 1.28109637799865781e-05},
    {-6.000, 2.70731932491809193e-06, 1.45545122645587815e-05},
    {-5.975, 3.09524929348261778e-06, 1.65187190506867567e-05},
    {-5.950, 3.53530692512569406e-06, 1.87292127683494205e-05},
    {-5.925, 4.03399740339253269e-06, 2.12143003947359859e-05},
    {-5.900, 4.59856958534091509e-06, 2.40052109280610499e-05},
    {-5.875, 5.23709228536057015e-06, 2.71363571328549009e-05},
    {-5.850, 5.95853733784571837e-06, 3.06456162633663286e-05},
    {-5.825, 6.77286992476074289e-06, 3.45746306731510437e-05},
    {-5.800, 7.69114667624396524e-06, 3.89691292135803998e-05},
    {-5.775, 8.72562207554264030e-06, 4.38792703147749223e-05},
    {-5.750, 9.88986372110014128e-06, 4.93600076240562682e-05},
    {-5.725, 1.11988770203545313e-05, 5.54714790532260816e-05},
    {-5.700, 1.26692399111023337e-05, 6.22794200543924512e-05},
    {-5.675, 1.43192482254820151e-05, 6.98556019027109286e-05},
    {-5.650, 1.61690723317596789e-05, 7.82782957168664520e-05},
    {-5.625, 1.82409257047472162e-05, 8.76327628869219463e-05},
    {-5.600, 2.05592460939681416e-05, 9.80117725144009260e-05},
    {-5.575, 2.31508899707435445e-05, 1.09516146386531843e-04},
    {-5.550, 2.60453409483725405e-05, 1.22255331919544788e-04},
    {-5.525, 2.92749328793262892e-05, 1.36348003403864433e-04},
    {-5.500, 3.28750883393550566e-05, 1.51922691770126832e-04},
    {-5.475, 3.68845732140400440e-05, 1.69118442972320774e-04},
    {-5.450, 4.13457681016323313e-05, 1.88085504944114894e-04},
    {-5.425, 4.63049572454538041e-05, 2.08986042936397203e-04},
    {-5.400, 5.18126357013030649e-05, 2.31994882882490872e-04},
    {-5.375, 5.79238354331539451e-05, 2.57300282257809593e-04},
    {-5.350, 6.46984710177331680e-05, 2.85104727719506399e-04},
    {-5.325, 7.22017056148416980e-05, 3.15625758604623605e-04},
    {-5.300, 8.05043378368908819e-05, 3.49096815156654057e-04},
    {-5.275, 8.96832101195670111e-05, 3.85768110123926834e-04},
    {-5.250, 9.98216391581567721e-05, 4.25907522138432046e-04},
    {-5.225, 1.11009868931521348e-04, 4.69801509034340988e-04},
    {-5.200, 1.23345546786815497e-04, 5.17756039010891923e-04},
    {-5.175, 1.36934223002441532e-04, 5.70097537277057032e-04},
    {-5.150, 1.51889874182530287e-04, 6.27173845538270660e-04},
    {-5.125, 1.68335450770050308e-04, 6.89355191408471432e-04},
    {-5.100, 1.86403448885253428e-04, 7.57035164537947372e-04},
    {-5.075, 2.06236506615839363e-04, 8.30631695957894690e-04},
    {-5.050, 2.27988024791155795e-04, 9.10588036846781096e-04},
    {-5.025, 2.51822812176409692e-04, 9.97373732626681943e-04},
    {-5.000, 2.77917754915513974e-04, 1.09148558800072483e-03},
    {-4.975, 3.06462509937658527e-04, 1.19344861825196693e-03},
    {-4.950, 3.37660221923789881e-04, 1.30381698182941656e-03},
    {-4.925, 3.71728263299047268e-04, 1.42317488897080748e-03},
    {-4.900, 4.08898996583982859e-04, 1.55213748083087434e-03},
    {-4.875, 4.49420558295110951e-04, 1.69135167332604423e-03},
    {-4.850, 4.93557663438082945e-04, 1.84149695965461443e-03},
    {-4.825, 5.41592429482434128e-04, 2.00328616521929914e-03},
    {-4.800, 5.93825218546036168e-04, 2.17746614846141750e-03},
    {-4.775, 6.50575496356180791e-04, 2.36481844092757080e-03},
    {-4.750, 7.12182706380322405e-04, 2.56615981971203885e-03},
    {-4.725, 7.79007157351072239e-04, 2.78234280528090721e-03},
    {-4.700, 8.51430922228586708e-04, 3.01425607756278637e-03},
    {-4.675, 9.29858746470291924e-04, 3.26282480311062498e-03},
    {-4.650, 1.01471896329098817e-03, 3.52901086608427804e-03},
    {-4.625, 1.10646441342058437e-03, 3.81381299579139311e-03},
    {-4.600, 1.20557336668208285e-03, 4.11826678354486417e-03},
    {-4.575, 1.31255044253115560e-03, 4.44344458165751334e-03},
    {-4.550, 1.42792752652546001e-03, 4.79045527750054934e-03},
    {-4.525, 1.55226467950962243e-03, 5.16044393569905450e-03},
    {-4.500, 1.68615103613753664e-03, 5.55459130173010206e-03},
    {-4.475, 1.83020568918359269e-03, 5.97411316043093641e-03},
    {-4.450, 1.98507855593858720e-03, 6.42025954320950536e-03},
    {-4.425, 2.15145122283263036e-03, 6.89431377808220110e-03},
    {-4.400, 2.33003776428684006e-03, 7.39759137705380161e-03},
    {-4.375, 2.52158553166321672e-03, 7.93143875577766513e-03},
    {-4.350, 2.72687590806159827e-03, 8.49723178092381091e-03},
    {-4.325, 2.94672502460359810e-03, 9.09637414120234578e-03},
    {-4.300, 3.18198443375191211e-03, 9.73029553857596673e-03},
    {-4.275, 3.43354173513179487e-03, 1.04004496968070036e-02},
    {-4.250, 3.70232114925858526e-03, 1.11083121851597490e-02},
    {-4.225, 3.98928403453218186e-03, 1.18553780557848903e-02},
    {-4.200, 4.29542934282856927e-03, 1.26431592940618072e-02},
    {-4.175, 4.62179400901112196e-03, 1.34731820819676447e-02},
    {-4.150, 4.96945326969811581e-03, 1.43469838753602520e-02},
    {-4.125, 5.33952090665294407e-03, 1.52661102969194693e-02},
    {-4.100, 5.73314941022044257e-03, 1.62321118473772764e-02},
    {-4.075, 6.15153005830830404e-03, 1.72465404385677042e-02},
    {-4.050, 6.59589290651263743e-03, 1.83109457527650329e-02},
    {-4.025, 7.06750668511135771e-03, 1.94268714337128591e-02},
    {-4.000, 7.56767859879510941e-03, 2.05958511157056726e-02},
    {-3.975, 8.09775402517467699e-03, 2.18194042980445202e-02},
    {-3.950, 8.65911610830394016e-03, 2.30990320731463798e-02},
    {-3.925, 9.25318524367001530e-03, 2.44362127175435095e-02},
    {-3.900, 9.88141845135101504e-03, 2.58323971559571881e-02},
    {-3.875, 1.05453086343022129e-02, 2.72890043095538534e-02},
    {-3.850, 1.12463837190269825e-02, 2.88074163404076593e-02},
    {-3.825, 1.19862056761935992e-02, 3.03889738050652572e-02},
    {-3.800, 1.27663694190987970e-02, 3.20349707309630985e-02},
    {-3.775, 1.35885015782270368e-02, 3.37466496302555805e-02},
    {-3.750, 1.44542591505326980e-02, 3.55251964663711242e-02},
    {-3.725, 1.53653280224617678e-02, 3.73717355893361108e-02},
    {-3.700, 1.63234213661382146e-02, 3.92873246565607556e-02},
    {-3.675, 1.73302779085697869e-02, 4.12729495563831789e-02},
    {-3.650, 1.83876600741598277e-02, 4.33295193521984270e-02},
    {-3.625, 1.94973520012723979e-02, 4.54578612654735273e-02},
    {-3.600, 2.06611574340509474e-02, 4.76587157163264261e-02},
    {-3.575, 2.18808974911692995e-02, 4.99327314406701472e-02},
    {-3.550, 2.31584083136686519e-02, 5.22804607031550420e-02},
    {-3.525, 2.44955385945179599e-02, 5.47023546252819876e-02},
    {-3.500, 2.58941469930178275e-02, 5.71987586481265894e-02},
    {-3.475, 2.73560994376576168e-02, 5.97699081490798562e-02},
    {-3.450, 2.88832663215197252e-02, 6.24159242318997817e-02},
    {-3.425, 3.04775195947963838e-02, 6.51368097091395842e-02},
    {-3.400, 3.21407297594723737e-02, 6.79324452957340563e-02},
    {-3.375, 3.38747627716744354e-02, 7.08025860321057493e-02},
    {-3.350, 3.56814768576578650e-02, 7.37468579546828873e-02},
    {-3.325, 3.75627192498262166e-02, 7.67647550311166549e-02},
    {-3.300, 3.95203228496174910e-02, 7.98556363768370553e-02},
    {-3.275, 4.15561028244843811e-02, 8.30187237688033014e-02},
    {-3.250, 4.36718531465917353e-02, 8.62530994714733740e-02},
    {-3.225, 4.58693430812132028e-02, 8.95577043890853214e-02},
    {-3.200, 4.81503136331535644e-02, 9.29313365573366107e-02},
    {-3.175, 5.05164739598273071e-02, 9.63726499864607788e-02},
    {-3.150, 5.29694977599258557e-02, 9.98801538665610444e-02},
    {-3.125, 5.55110196468432959e-02, 1.03452212144830205e-01},
    {-3.100, 5.81426315162742527e-02, 1.07087043483027736e-01},
    {-3.075, 6.08658789175727591e-02, 1.10782721602235221e-01},
    {-3.050, 6.36822574386330525e-02, 1.14537176020555367e-01},
    {-3.025, 6.65932091141712007e-02, 1.18348193187987685e-01},
    {-3.000, 6.96001188673714133e-02, 1.22213418021267659e-01},
    {-2.975, 7.27043109949207511e-02, 1.26130355839981778e-01},
    {-2.950, 7.59070457054600994e-02, 1.30096374703761980e-01},
    {-2.925, 7.92095157214636331e-02, 1.34108708148861944e-01},
    {-2.900, 8.26128429544921716e-02, 1.38164458320894107e-01},
    {-2.875, 8.61180752636705599e-02, 1.42260599498997470e-01},
    {-2.850, 8.97261833070968351e-02, 1.46393982005193019e-01},
    {-2.825, 9.34380574957224680e-02, 1.50561336491205150e-01},
    {-2.800, 9.72545050590276211e-02, 1.54759278593561478e-01},
    {-2.775, 1.01176247231566235e-01, 1.58984313946342437e-01},
    {-2.750, 1.05203916569179073e-01, 1.63232843539576067e-01},
    {-2.725, 1.09338054403348664e-01, 1.67501169409909445e-01},
    {-2.700, 1.13579108441821328e-01, 1.71785500648898165e-01},
    {-2.675, 1.17927430523245461e-01, 1.76081959713025871e-01},
    {-2.650, 1.22383274533152203e-01, 1.80386589018370708e-01},
    {-2.625, 1.26946794488175058e-01, 1.84695357801759857e-01},
    {-2.600, 1.31618042794929058e-01, 1.89004169229198327e-01},
    {-2.575, 1.36396968689484643e-01, 1.93308867731424139e-01},
    {-2.550, 1.41283416862846040e-01, 1.97605246545563606e-01},
    {-2.525, 1.46277126277328862e-01, 2.01889055441103665e-01},
    {-2.500, 1.51377729178150594e-01, 2.06156008607678159e-01},
    {-2.475, 1.56584750304002929e-01, 2.10401792681601779e-01},
    {-2.450, 1.61897606299771929e-01, 2.14622074887564240e-01},
    {-2.425, 1.67315605333998418e-01, 2.18812511271520821e-01},
    {-2.400, 1.72837946923039304e-01, 2.22968755000480801e-01},
    {-2.375, 1.78463721963309896e-01, 2.27086464704729485e-01},
    {-2.350, 1.84191912972355820e-01, 2.31161312837895511e-01},
    {-2.325, 1.90021394538890859e-01, 2.35188994030275655e-01},
    {-2.300, 1.95950933981334480e-01, 2.39165233410939732e-01},
    {-2.275, 2.01979192213748021e-01, 2.43085794874303623e-01},
    {-2.250, 2.08104724817503028e-01, 2.46946489267192426e-01},
    {-2.225, 2.14325983316376478e-01, 2.50743182472747572e-01},
    {-2.200, 2.20641316652215841e-01, 2.54471803368045479e-01},
    {-2.175, 2.27048972857729292e-01, 2.58128351632837538e-01},
    {-2.150, 2.33547100922408546e-01, 2.61708905387474655e-01},
    {-2.125, 2.40133752847034532e-01, 2.65209628638787942e-01},
    {-2.100, 2.46806885881722921e-01, 2.68626778513524178e-01},
    {-2.075, 2.53564364941944564e-01, 2.71956712259787292e-01},
    {-2.050, 2.60403965196480514e-01, 2.75195893997870644e-01},
    {-2.025, 2.67323374820843562e-01, 2.78340901202895397e-01},
    {-2.000, 2.74320197909223906e-01, 2.81388430902676900e-01},
    {-1.975, 2.81391957537675930e-01, 2.84335305575400987e-01},
    {-1.950, 2.88536098970830546e-01, 2.87178478732791065e-01},
    {-1.925, 2.95749993004126854e-01, 2.89915040175678873e-01},
    {-1.900, 3.03030939433206248e-01, 2.92542220910081363e-01},
    {-1.875, 3.10376170641863069e-01, 2.95057397713167746e-01},
    {-1.850, 3.17782855299654055e-01, 2.97458097339733440e-01},
    {-1.825, 3.25248102160105135e-01, 2.99742000361127026e-01},
    {-1.800, 3.32768963950213048e-01, 3.01906944629835083e-01},
    {-1.775, 3.40342441341835167e-01, 3.03950928364265849e-01},
    {-1.750, 3.47965486995397921e-01, 3.05872112849532973e-01},
    {-1.725, 3.55635009666296575e-01, 3.07668824751371528e-01},
    {-1.700, 3.63347878364289500e-01, 3.09339558041569096e-01},
    {-1.675, 3.71100926556166610e-01, 3.10882975534572836e-01},
    {-1.650, 3.78890956401978618e-01, 3.12297910036165138e-01},
    {-1.625, 3.86714743015162787e-01, 3.13583365106323175e-01},
    {-1.600, 3.94569038736936828e-01, 3.14738515439538735e-01},
    {-1.575, 4.02450577415478516e-01, 3.15762706867049325e-01},
    {-1.550, 4.10356078680480407e-01, 3.16655455986506518e-01},
    {-1.525, 4.18282252203862892e-01, 3.17416449425694025e-01},
    {-1.500, 4.26225801937586413e-01, 3.18045542747909527e-01},
    {-1.475, 4.34183430319696639e-01, 3.18542759007592657e-01},
    {-1.450, 4.42151842440001108e-01, 3.18908286965706333e-01},
    {-1.425, 4.50127750156967543e-01, 3.19142478975211696e-01},
    {-1.400, 4.58107876157772098e-01, 3.19245848547823285e-01},
    {-1.375, 4.66088957953632477e-01, 3.19219067613913388e-01},
    {-1.350, 4.74067751802952131e-01, 3.19062963488187801e-01},
    {-1.325, 4.82041036555053093e-01, 3.18778515554316078e-01},
    {-1.300, 4.90005617407662131e-01, 3.18366851682304053e-01},
    {-1.275, 4.97958329571632941e-01, 3.17829244392872357e-01},
    {-1.250, 5.05896041836776944e-01, 3.17167106783550645e-01},
    {-1.225, 5.13815660033011157e-01, 3.16381988231563549e-01},
    {-1.200, 5.21714130381461860e-01, 3.15475569888908292e-01},
    {-1.175, 5.29588442730497544e-01, 3.14449659985256480e-01},
    {-1.150, 5.37435633672112445e-01, 3.13306188954528164e-01},
    {-1.125, 5.45252789534421134e-01, 3.12047204401082023e-01},
    {-1.100, 5.53037049246477230e-01, 3.10674865921576226e-01},
    {-1.075, 5.60785607072004533e-01, 3.09191439798539580e-01},
    {-1.050, 5.68495715209021424e-01, 3.07599293581667765e-01},
    {-1.025, 5.76164686252775282e-01, 3.05900890572774697e-01},
    {-1.000, 5.83789895519740587e-01, 3.04098784230156238e-01},
    {-0.975, 5.91368783230901141e-01, 3.02195612507982769e-01},
    {-0.950, 5.98898856552852243e-01, 3.00194092146042535e-01},
    {-0.925, 6.06377691495688653e-01, 2.98097012924920357e-01},
    {-0.900, 6.13802934666992095e-01, 2.95907231901353929e-01},
    {-0.875, 6.21172304881607684e-01, 2.93627667638149570e-01},
    {-0.850, 6.28483594627242348e-01, 2.91261294442651364e-01},
    {-0.825, 6.35734671386272043e-01, 2.88811136627313059e-01},
    {-0.800, 6.42923478814487970e-01, 2.86280262805483687e-01},
    {-0.775, 6.50048037777796406e-01, 2.83671780235002668e-01},
    {-0.750, 6.57106447248237857e-01, 2.80988829221709036e-01},
    {-0.725, 6.64096885060967979e-01, 2.78234577594432098e-01},
    {-0.700, 6.71017608534109633e-01, 2.75412215262457849e-01},
    {-0.675, 6.77866954953699419e-01, 2.72524948865928929e-01},
    {-0.650, 6.84643341926144178e-01, 2.69575996529017536e-01},
    {-0.625, 6.91345267600892655e-01, 2.66568582725137171e-01},
    {-0.600, 6.97971310766238529e-01, 2.63505933262859038e-01},
    {-0.575, 7.04520130821345902e-01, 2.60391270400560149e-01},
    {-0.550, 7.10990467627847345e-01, 2.57227808097259314e-01},
    {-0.525, 7.17381141244473941e-01, 2.54018747406447754e-01},
    {-0.500, 7.23691051548387643e-01, 2.50767272019123633e-01},
    {-0.475, 7.29919177747020198e-01, 2.47476543961638484e-01},
    {-0.450, 7.36064577784325769e-01, 2.44149699453326874e-01},
    {-0.425, 7.42126387645549723e-01, 2.40789844928342017e-01},
    {-0.400, 7.48103820564609445e-01, 2.37400053225478247e-01},
    {-0.375, 7.53996166138358070e-01, 2.33983359949223396e-01},
    {-0.350, 7.59802789352059471e-01, 2.30542760004701058e-01},
    {-0.325, 7.65523129520419232e-01, 2.27081204308614781e-01},
    {-0.300, 7.71156699148604519e-01, 2.23601596677759334e-01},
    {-0.275, 7.76703082717719817e-01, 2.20106790896164833e-01},
    {-0.250, 7.82161935399186659e-01, 2.16599587961412793e-01},
    {-0.225, 7.87532981702536494e-01, 2.13082733510193217e-01},
    {-0.200, 7.92816014061059504e-01, 2.09558915422699776e-01},
    {-0.175, 7.98010891359817842e-01, 2.06030761605018681e-01},
    {-0.150, 8.03117537410402593e-01, 2.02500837948230233e-01},
    {-0.125, 8.08135939376875334e-01, 1.98971646462555385e-01},
    {-0.100, 8.13066146157236047e-01, 1.95445623584482669e-01},
    {-0.075, 8.17908266724686306e-01, 1.91925138654453958e-01},
    {-0.050, 8.22662468432957539e-01, 1.88412492562354122e-01},
    {-0.025, 8.27328975289835622e-01, 1.84909916557724513e-01},
    {0.000, 8.31908066202956431e-01, 1.81419571221331483e-01},
    {0.025, 8.36400073201890581e-01, 1.77943545594451663e-01},
    {0.050, 8.40805379640366501e-01, 1.74483856461977560e-01},
    {0.075, 8.45124418382471321e-01, 1.71042447785226537e-01},
    {0.100, 8.49357669976487206e-01, 1.67621190280127452e-01},
    {0.125, 8.53505660819956158e-01, 1.64221881136273368e-01},
    {0.150, 8.57568961319437384e-01, 1.60846243872166339e-01},
    {0.175, 8.61548184048286481e-01, 1.57495928321835982e-01},
    {0.200, 8.65443981905707704e-01, 1.54172510747889513e-01},
    {0.225, 8.69257046280141998e-01, 1.50877494075946167e-01},
    {0.250, 8.72988105219997701e-01, 1.47612308245327534e-01},
    {0.275, 8.76637921614534354e-01, 1.44378310670800203e-01},
    {0.300, 8.80207291387626767e-01, 1.41176786810126326e-01},
    {0.325, 8.83697041706988928e-01, 1.38008950832137794e-01},
    {0.350, 8.87108029211305049e-01, 1.34875946380037831e-01},
    {0.375, 8.90441138257559661e-01, 1.31778847424625811e-01},
    {0.400, 8.93697279190789895e-01, 1.28718659202163022e-01},
    {0.425, 8.96877386638275542e-01, 1.25696319231619280e-01},
    {0.450, 8.99982417830100356e-01, 1.22712698406075599e-01},
    {0.475, 9.03013350947865612e-01, 1.19768602153120046e-01},
    {0.500, 9.05971183503237354e-01, 1.16864771659133865e-01},
    {0.525, 9.08856930747833913e-01, 1.14001885152433383e-01},
    {0.550, 9.11671624115880541e-01, 1.11180559240330656e-01},
    {0.575, 9.14416309700911922e-01, 1.08401350295255341e-01},
    {0.600, 9.17092046767696289e-01, 1.05664755885195069e-01},
    {0.625, 9.19699906300419534e-01, 1.02971216243812752e-01},
    {0.650, 9.22240969588080328e-01, 1.00321115775721365e-01},
    {0.675, 9.24716326847895065e-01, 9.77147845925170760e-02},
    {0.700, 9.27127075887462682e-01, 9.51525000753040973e-02},
    {0.725, 9.29474320806268239e-01, 9.26344884595726309e-02},
    {0.750, 9.31759170737041842e-01, 9.01609264384352627e-02},
    {0.775, 9.33982738627407216e-01, 8.77319427803666951e-02},
    {0.800, 9.36146140062095178e-01, 8.53476199577350991e-02},
    {0.825, 9.38250492125974667e-01, 8.30079957825611697e-02},
    {0.850, 9.40296912308042132e-01, 8.07130650460926302e-02},
    {0.875, 9.42286517446396577e-01, 7.84627811589284907e-02},
    {0.900, 9.44220422714213692e-01, 7.62570577885810924e-02},
    {0.925, 9.46099740646570764e-01, 7.40957704915146953e-02},
    {0.950, 9.47925580207996887e-01, 7.19787583368517725e-02},
    {0.975, 9.49699045900463390e-01, 6.99058255190866951e-02},
    {1.000, 9.51421236911551449e-01, 6.78767429573013809e-02},
    {1.025, 9.53093246302388564e-01, 6.58912498785200612e-02},
    {1.050, 9.54716160234944766e-01, 6.39490553829925173e-02},
    {1.075, 9.56291057238237041e-01, 6.20498399893385580e-02},
    {1.100, 9.57819007512861087e-01, 6.01932571576268283e-02},
    {1.125, 9.59301072273329281e-01, 5.83789347886067289e-02},
    {1.150, 9.60738303127559701e-01, 5.66064766974432518e-02},
    {1.175, 9.62131741492878279e-01, 5.48754640604457444e-02},
    {1.200, 9.63482418047840072e-01, 5.31854568334053923e-02},
    {1.225, 9.64791352219130149e-01, 5.15359951402902805e-02},
    {1.250, 9.66059551702816544e-01, 4.99266006311685911e-02},
    {1.275, 9.67288012019142052e-01, 4.83567778083480240e-02},
    {1.300, 9.68477716100072050e-01, 4.68260153198429979e-02},
    {1.325, 9.69629633908748456e-01, 4.53337872193841779e-02},
    {1.350, 9.70744722090034262e-01, 4.38795541923035354e-02},
    {1.375, 9.71823923651270238e-01, 4.24627647467249597e-02},
    {1.400, 9.72868167672357065e-01, 4.10828563695928226e-02},
    {1.425, 9.73878369044319681e-01, 3.97392566471696726e-02},
    {1.450, 9.74855428235413379e-01, 3.84313843497216534e-02},
    {1.475, 9.75800231083913561e-01, 3.71586504801996523e-02},
    {1.500, 9.76713648616660990e-01, 3.59204592868096056e-02},
    {1.525, 9.77596536892480605e-01, 3.47162092394401045e-02},
    {1.550, 9.78449736869541953e-01, 3.35452939699944497e-02},
    {1.575, 9.79274074295799046e-01, 3.24071031767421691e-02},
    {1.600, 9.80070359621575071e-01, 3.13010234928736905e-02},
    {1.625, 9.80839387933425955e-01, 3.02264393195032822e-02},
    {1.650, 9.81581938908380303e-01, 2.91827336234243007e-02},
    {1.675, 9.82298776787686290e-01, 2.81692886999763484e-02},
    {1.700, 9.82990650369210850e-01, 2.71854869014339674e-02},
    {1.725, 9.83658293017602769e-01, 2.62307113313739494e-02},
    {1.750, 9.84302422691411216e-01, 2.53043465055225944e-02},
    {1.775, 9.84923741986311607e-01, 2.44057789796240203e-02},
    {1.800, 9.85522938193596265e-01, 2.35343979449064988e-02},
    {1.825, 9.86100683373198783e-01, 2.26895957917595120e-02},
    {1.850, 9.86657634440373466e-01, 2.18707686422606462e-02},
    {1.875, 9.87194433265331739e-01, 2.10773168522227737e-02},
    {1.900, 9.87711706785062371e-01, 2.03086454834526080e-02},
    {1.925, 9.88210067126560565e-01, 1.95641647469346723e-02},
    {1.950, 9.88690111740815225e-01, 1.88432904176727319e-02},
    {1.975, 9.89152423546802884e-01, 1.81454442219364347e-02},
    {2.000, 9.89597571084827599e-01, 1.74700541976743028e-02},
    {2.025, 9.90026108678548900e-01, 1.68165550288646992e-02},
    {2.050, 9.90438576605047860e-01, 1.61843883545860420e-02},
    {2.075, 9.90835501272304131e-01, 1.55730030535918933e-02},
    {2.100, 9.91217395403514390e-01, 1.49818555051832985e-02},
    {2.125, 9.91584758227606833e-01, 1.44104098271707146e-02},
    {2.150, 9.91938075675464326e-01, 1.38581380917203057e-02},
    {2.175, 9.92277820581243253e-01, 1.33245205198770037e-02},
    {2.200, 9.92604452888331323e-01, 1.28090456555541386e-02},
    {2.225, 9.92918419859367685e-01, 1.23112105197747661e-02},
    {2.250, 9.93220156289909673e-01, 1.18305207459448829e-02},
    {2.275, 9.93510084725251374e-01, 1.13664906969304039e-02},
    {2.300, 9.93788615679921716e-01, 1.09186435647020148e-02},
    {2.325, 9.94056147859498695e-01, 1.04865114533025227e-02},
    {2.350, 9.94313068384276133e-01, 1.00696354458803799e-02},
    {2.375, 9.94559753014423120e-01, 9.66756565652185373e-03},
    {2.400, 9.94796566376247693e-01, 9.27986126760150555e-03},
    {2.425, 9.95023862189230668e-01, 8.90609055335828646e-03},
    {2.450, 9.95241983493480364e-01, 8.54583089038930821e-03},
    {2.475, 9.95451262877294574e-01, 8.19866875574007045e-03},
    {2.500, 9.95652022704518025e-01, 7.86419971325398939e-03},
    {2.525, 9.95844575341434002e-01, 7.54202838882881820e-03},
    {2.550, 9.96029223382889017e-01, 7.23176843521156163e-03},
    {2.575, 9.96206259877424949e-01, 6.93304248694663183e-03},
    {2.600, 9.96375968551166724e-01, 6.64548210607586974e-03},
    {2.625, 9.96538624030235298e-01, 6.36872771917161400e-03},
    {2.650, 9.96694492061488191e-01, 6.10242854626703163e-03},
    {2.675, 9.96843829731392628e-01, 5.84624252223092580e-03},
    {2.700, 9.96986885682837221e-01, 5.59983621111602610e-03},
    {2.725, 9.97123900329721313e-01, 5.36288471399323178e-03},
    {2.750, 9.97255106069170005e-01, 5.13507157076628640e-03},
    {2.775, 9.97380727491215091e-01, 4.91608865644395723e-03},
    {2.800, 9.97500981585823232e-01, 4.70563607232984352e-03},
    {2.825, 9.97616077947145352e-01, 4.50342203257210038e-03},
    {2.850, 9.97726218974879231e-01, 4.30916274649878472e-03},
    {2.875, 9.97831600072625613e-01, 4.12258229714720491e-03},
    {2.900, 9.97932409843190427e-01, 3.94341251637923135e-03},
    {2.925, 9.98028830280707102e-01, 3.77139285695779827e-03},
    {2.950, 9.98121036959530916e-01, 3.60627026194344519e-03},
    {2.975, 9.98209199219837751e-01, 3.44779903175405304e-03},
    {3.000, 9.98293480349881301e-01, 3.29574068921495260e-03},
    {3.025, 9.98374037764837463e-01, 3.14986384291106878e-03},
    {3.050, 9.98451023182239661e-01, 3.00994404913809818e-03},
    {3.075, 9.98524582793919868e-01, 2.87576367273417342e-03},
    {3.100, 9.98594857434485172e-01, 2.74711174705983240e-03},
    {3.125, 9.98661982746265942e-01, 2.62378383337937655e-03},
    {3.150, 9.98726089340754575e-01, 2.50558187988329448e-03},
    {3.175, 9.98787302956516188e-01, 2.39231408057803989e-03},
    {3.200, 9.98845744613568232e-01, 2.28379473425620707e-03},
    {3.225, 9.98901530764243706e-01, 2.17984410374784604e-03},
    {3.250, 9.98954773440530408e-01, 2.08028827564118307e-03},
    {3.275, 9.99005580397927084e-01, 1.98495902064925803e-03},
    {3.300, 9.99054055255804263e-01, 1.89369365478753225e-03},
    {3.325, 9.99100297634308188e-01, 1.80633490151628474e-03},
    {3.350, 9.99144403287842819e-01, 1.72273075499113581e-03},
    {3.375, 9.99186464235135019e-01, 1.64273434455450783e-03},
    {3.400, 9.99226568885938082e-01, 1.56620380059099493e-03},
    {3.425, 9.99264802164391508e-01, 1.49300212186007975e-03},
    {3.450, 9.99301245629095058e-01, 1.42299704441030471e-03},
    {3.475, 9.99335977589912550e-01, 1.35606091217033435e-03},
    {3.500, 9.99369073221572757e-01, 1.29207054930380923e-03},
    {3.525, 9.99400604674101412e-01, 1.23090713440678870e-03},
    {3.550, 9.99430641180127255e-01, 1.17245607661890035e-03},
    {3.575, 9.99459249159115548e-01, 1.11660689371179491e-03},
    {3.600, 9.99486492318582109e-01, 1.06325309221158570e-03},
    {3.625, 9.99512431752341057e-01, 1.01229204960512830e-03},
    {3.650, 9.99537126035816015e-01, 9.63624898673594364e-04},
    {3.675, 9.99560631318512249e-01, 9.17156413990834370e-04},
    {3.700, 9.99583001413659633e-01, 8.72794900618034122e-04},
    {3.725, 9.99604287885104026e-01, 8.30452085020908577e-04},
    {3.750, 9.99624540131507922e-01, 7.90043008230383644e-04},
    {3.775, 9.99643805467901214e-01, 7.51485921262837805e-04},
    {3.800, 9.99662129204640926e-01, 7.14702182811407833e-04},
    {3.825, 9.99679554723856723e-01, 6.79616159215452420e-04},
    {3.850, 9.99696123553411975e-01, 6.46155126711225642e-04},
    {3.875, 9.99711875438451525e-01, 6.14249175962966508e-04},
    {3.900, 9.99726848410592894e-01, 5.83831118870000690e-04},
    {3.925, 9.99741078854821441e-01, 5.54836397642149634e-04},
    {3.950, 9.99754601574124990e-01, 5.27202996132510081e-04},
    {3.975, 9.99767449851959089e-01, 5.00871353413871582e-04},
    {4.000, 9.99779655512567644e-01, 4.75784279582247744e-04},
    {4.025, 9.99791248979225222e-01, 4.51886873768525446e-04},
    {4.050, 9.99802259330466625e-01, 4.29126444336954869e-04},
    {4.075, 9.99812714354340382e-01, 4.07452431247011559e-04},
    {4.100, 9.99822640600747770e-01, 3.86816330553278547e-04},
    {4.125, 9.99832063431929652e-01, 3.67171621016191229e-04},
    {4.150, 9.99841007071131882e-01, 3.48473692794858234e-04},
    {4.175, 9.99849494649523884e-01, 3.30679778191754101e-04},
    {4.200, 9.99857548251406048e-01, 3.13748884417704469e-04},
    {4.225, 9.99865188957768547e-01, 2.97641728344467656e-04},
    {4.250, 9.99872436888224136e-01, 2.82320673211134375e-04},
    {4.275, 9.99879311241413604e-01, 2.67749667249679948e-04},
    {4.300, 9.99885830333870684e-01, 2.53894184194195763e-04},
    {4.325, 9.99892011637437239e-01, 2.40721165637638318e-04},
    {4.350, 9.99897871815260020e-01, 2.28198965199382156e-04},
    {4.375, 9.99903426756414748e-01, 2.16297294466373763e-04},
    {4.400, 9.99908691609192823e-01, 2.04987170670302578e-04},
    {4.425, 9.99913680813106831e-01, 1.94240866062946792e-04},
    {4.450, 9.99918408129653158e-01, 1.84031858951606240e-04},
    {4.475, 9.99922886671867128e-01, 1.74334786356451608e-04},
    {4.500, 9.99927128932711962e-01, 1.65125398251544713e-04},
    {4.525, 9.99931146812353400e-01, 1.56380513351315521e-04},
    {4.550, 9.99934951644337100e-01, 1.48077976404369181e-04},
    {4.575, 9.99938554220722864e-01, 1.40196616956628781e-04},
    {4.600, 9.99941964816200790e-01, 1.32716209546035235e-04},
    {4.625, 9.99945193211235761e-01, 1.25617435291271818e-04},
    {4.650, 9.99948248714265686e-01, 1.18881844837279252e-04},
    {4.675, 9.99951140182990139e-01, 1.12491822620680915e-04},
    {4.700, 9.99953876044785028e-01, 1.06430552418609076e-04},
    {4.725, 9.99956464316258176e-01, 1.00681984144857493e-04},
    {4.750, 9.99958912622012419e-01, 9.52308018577381756e-05},
    {4.775, 9.99961228212607467e-01, 9.00623929444979775e-05},
    {4.800, 9.99963417981766911e-01, 8.51628184476790505e-05},
    {4.825, 9.99965488482863485e-01, 8.05187844993300714e-05},
    {4.850, 9.99967445944697775e-01, 7.61176148295460565e-05},
    {4.875, 9.99969296286607356e-01, 7.19472243163904077e-05},
    {4.900, 9.99971045132928005e-01, 6.79960935448475451e-05},
    {4.925, 9.99972697826820300e-01, 6.42532443430711496e-05},
    {4.950, 9.99974259443516034e-01, 6.07082162648101936e-05},
    {4.975, 9.99975734802967753e-01, 5.73510439875346030e-05},
    {5.000, 9.99977128481955524e-01, 5.41722355964240114e-05},
    {5.025, 9.99978444825665003e-01, 5.11627517250314072e-05},
    {5.050, 9.99979687958741148e-01, 4.83139855240923840e-05},
    {5.075, 9.99980861795865317e-01, 4.56177434306038486e-05},
    {5.100, 9.99981970051852742e-01, 4.30662267099622697e-05},
    {5.125, 9.99983016251299928e-01, 4.06520137446103318e-05},
    {5.150, 9.99984003737797278e-01, 3.83680430433013070e-05},
    {5.175, 9.99984935682731724e-01, 3.62075969457540794e-05},
    {5.200, 9.99985815093683450e-01, 3.41642859981208702e-05},
    {5.225, 9.99986644822439485e-01, 3.22320339753497407e-05},
    {5.250, 9.99987427572649135e-01, 3.04050635271680784e-05},
    {5.275, 9.99988165907118143e-01, 2.86778824250552168e-05},
    {5.300, 9.99988862254774014e-01, 2.70452703882114167e-05},
    {5.325, 9.99989518917303477e-01, 2.55022664671544033e-05},
    {5.350, 9.99990138075485313e-01, 2.40441569642001101e-05},
    {5.375, 9.99990721795225634e-01, 2.26664638706940835e-05},
    {5.400, 9.99991272033311285e-01, 2.13649338014641193e-05},
    {5.425, 9.99991790642890122e-01, 2.01355274075604205e-05},
    {5.450, 9.99992279378696169e-01, 1.89744092489310167e-05},
    {5.475, 9.99992739902025751e-01, 1.78779381092572867e-05},
    {5.500, 9.99993173785475808e-01, 1.68426577357365479e-05},
    {5.525, 9.99993582517455293e-01, 1.58652879871512378e-05},
    {5.550, 9.99993967506481618e-01, 1.49427163741078938e-05},
    {5.575, 9.99994330085274385e-01, 1.40719899758568143e-05},
    {5.600, 9.99994671514641831e-01, 1.32503077186247464e-05},
    {5.625, 9.99994992987186526e-01, 1.24750130008996495e-05},
    {5.650, 9.99995295630825010e-01, 1.17435866516018792e-05},
    {5.675, 9.99995580512150095e-01, 1.10536402075620642e-05},
    {5.700, 9.99995848639600560e-01, 1.04029094971955121e-05},
    {5.725, 9.99996100966508039e-01, 9.78924851772681265e-06},
    {5.750, 9.99996338393964956e-01, 9.21062359376468937e-06},
    {5.775, 9.99996561773569437e-01, 8.66510780546547816e-06},
    {5.800, 9.99996771910025672e-01, 8.15087567494917307e-06},
    {5.825, 9.99996969563615279e-01, 7.66619810004467153e-06},
    {5.850, 9.99997155452547970e-01, 7.20943752484454534e-06},
    {5.875, 9.99997330255189332e-01, 6.77904333693971560e-06},
    {5.900, 9.99997494612178239e-01, 6.37354748158412389e-06},
    {5.925, 9.99997649128448018e-01, 5.99156028340856504e-06},
    {5.950, 9.99997794375119486e-01, 5.63176646665894687e-06},
    {5.975, 9.99997930891324827e-01, 5.29292136528245253e-06},
    {6.000, 9.99998059185927324e-01, 4.97384731451971488e-06},
    {6.025, 9.99998179739148618e-01, 4.67343021598688998e-06},
    {6.050, 9.99998293004115135e-01, 4.39061626854708003e-06},
    {6.075, 9.99998399408334460e-01, 4.12440885757411057e-06},
    {6.100, 9.99998499355078896e-01, 3.87386559550828595e-06},
    {6.125, 9.99998593224710408e-01, 3.63809550688773537e-06},
    {6.150, 9.99998681375933507e-01, 3.41625635131463120e-06},
    {6.175, 9.99998764146974417e-01, 3.20755207808300882e-06},
    {6.200, 9.99998841856713061e-01, 3.01123040645041955e-06},
    {6.225, 9.99998914805747208e-01, 2.82658052578546948e-06},
    {6.250, 9.99998983277398112e-01, 2.65293091006186701e-06},
    {6.275, 9.99999047538666308e-01, 2.48964724140081684e-06},
    {6.300, 9.99999107841141099e-01, 2.33613043758713417e-06},
    {6.325, 9.99999164421855324e-01, 2.19181477869793604e-06},
    {6.350, 9.99999217504097482e-01, 2.05616612819094945e-06},
    {6.375, 9.99999267298177452e-01, 1.92868024399794994e-06},
    {6.400, 9.99999314002158912e-01, 1.80888117536074599e-06},
    {6.425, 9.99999357802543010e-01, 1.69631974133243936e-06},
    {6.450, 9.99999398874921064e-01, 1.59057208704330957e-06},
    {6.475, 9.99999437384589296e-01, 1.49123831400259031e-06},
    {6.500, 9.99999473487136026e-01, 1.39794118087096467e-06},
    {6.525, 9.99999507328983683e-01, 1.31032487129663569e-06},
    {6.550, 9.99999539047918051e-01, 1.22805382555998941e-06},
    {6.575, 9.99999568773576430e-01, 1.15081163291681143e-06},
    {6.600, 9.99999596627916043e-01, 1.07829998167070435e-06},
    {6.625, 9.99999622725649129e-01, 1.01023766413915282e-06},
    {6.650, 9.99999647174663941e-01, 9.46359633806649014e-07},
    {6.675, 9.99999670076414549e-01, 8.86416112082236308e-07},
    {6.700, 9.99999691526291201e-01, 8.30171742196863157e-07},
    {6.725, 9.99999711613975828e-01, 7.77404787890152708e-07},
    {6.750, 9.99999730423765554e-01, 7.27906374644767290e-07},
    {6.775, 9.99999748034890446e-01, 6.81479771331014919e-07},
    {6.800, 9.99999764521805834e-01, 6.37939710224551413e-07},
    {6.825, 9.99999779954473755e-01, 5.97111743455406312e-07},
    {6.850, 9.99999794398622188e-01, 5.58831634038598795e-07},
    {6.875, 9.99999807915997407e-01, 5.22944779724115570e-07},
    {6.900, 9.99999820564589692e-01, 4.89305667987965608e-07},
    {6.925, 9.99999832398868582e-01, 4.57777360566530383e-07},
    {6.950, 9.99999843469972727e-01, 4.28231006012882961e-07},
    {6.975, 9.99999853825921936e-01, 4.00545378827493789e-07},
    {7.000, 9.99999863511795373e-01, 3.74606443785654880e-07},
    {7.025, 9.99999872569905524e-01, 3.50306944151072135e-07},
    {7.050, 9.99999881039962846e-01, 3.27546012529208958e-07},
    {7.075, 9.99999888959234862e-01, 3.06228803174938253e-07},
    {7.100, 9.99999896362689489e-01, 2.86266144627642120e-07},
    {7.125, 9.99999903283130265e-01, 2.67574211602519664e-07},
    {7.150, 9.99999909751331240e-01, 2.50074215120075873e-07},
    {7.175, 9.99999915796155436e-01, 2.33692109906588493e-07},
    {7.200, 9.99999921444671203e-01, 2.18358318146632353e-07},
    {7.225, 9.99999926722262789e-01, 2.04007468715026898e-07},
    {7.250, 9.99999931652723606e-01, 1.90578151059499478e-07},
    {7.275, 9.99999936258367139e-01, 1.78012682947313845e-07},
    {7.300, 9.99999940560104217e-01, 1.66256891329140069e-07},
    {7.325, 9.99999944577533939e-01, 1.55259905611431952e-07},
    {7.350, 9.99999948329023947e-01, 1.44973962664939240e-07},
    {7.375, 9.99999951831783251e-01, 1.35354222931460526e-07},
    {7.400, 9.99999955101935734e-01, 1.26358597023830022e-07},
    {7.425, 9.99999958154583868e-01, 1.17947582245474434e-07},
    {7.450, 9.99999961003876447e-01, 1.10084108485586429e-07},
    {7.475, 9.99999963663061431e-01, 1.02733392974364449e-07},
    {7.500, 9.99999966144546559e-01, 9.58628034096773214e-08},
    {7.525, 9.99999968459947319e-01, 8.94417289921418478e-08},
    {7.550, 9.99999970620138900e-01, 8.34414589300076790e-08},
    {7.575, 9.99999972635301493e-01, 7.78350679983469659e-08},
    {7.600, 9.99999974514963808e-01, 7.25973087591149280e-08},
    {7.625, 9.99999976268040935e-01, 6.77045100695254229e-08},
    {7.650, 9.99999977902878534e-01, 6.31344815260591682e-08},
    {7.675, 9.99999979427281360e-01, 5.88664235103129770e-08},
    {7.700, 9.99999980848553238e-01, 5.48808425207782588e-08},
    {7.725, 9.99999982173524704e-01, 5.11594714916826574e-08},
    {7.750, 9.99999983408585202e-01, 4.76851948161484274e-08},
    {7.775, 9.99999984559710176e-01, 4.44419778062437823e-08},
    {7.800, 9.99999985632484711e-01, 4.14148003370558102e-08},
    {7.825, 9.99999986632132853e-01, 3.85895944356722630e-08},
    {7.850, 9.99999987563537251e-01, 3.59531855890608712e-08},
    {7.875, 9.99999988431262365e-01, 3.34932375572171836e-08},
    {7.900, 9.99999989239573450e-01, 3.11982004897042999e-08},
    {7.925, 9.99999989992456428e-01, 2.90572621548611089e-08},
    {7.950, 9.99999990693635876e-01, 2.70603021014908086e-08},
    {7.975, 9.99999991346592121e-01, 2.51978485828615156e-08},
    {8.000, 9.99999991954574674e-01, 2.34610380823122428e-08},
}};

}  // namespace mpedge::detail

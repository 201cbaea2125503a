// Reference values for special-function accuracy checks.
// Each entry is (argument, expected), expected rounded to nearest f64.
// Shared by several test targets; not every target reads every table.
#![allow(dead_code)]

pub const GAMMA_REF: [(f64, f64); 68] = [
    (0.001, 999.4237724845955),
    (0.00120127809914549, 831.8706799692185),
    (0.0014430690714866017, 692.3917327340981),
    (0.0017335272711310724, 576.2830300107829),
    (0.002082448345081203, 479.62882801282086),
    (0.002501599589547819, 399.1694822170857),
    (0.0030051167997551423, 332.1915164617321),
    (0.0036099809969200353, 276.43611146002746),
    (0.0043365911099314414, 230.02292651963472),
    (0.005209451925309673, 191.3866853649864),
    (0.006258000506425817, 159.22438742541993),
    (0.0075175989528107195, 132.45136429085713),
    (0.009030726980170588, 110.16469933462149),
    (0.010848414540641215, 91.61277681912458),
    (0.013031962798123773, 76.1699335084855),
    (0.015655011498264867, 63.31535788317455),
    (0.01880602245473641, 52.61552528767425),
    (0.022591262906913157, 43.709576572482774),
    (0.027138389362112655, 36.29714703639924),
    (0.03260075278678888, 30.128235079806398),
    (0.03916257033842578, 24.994768729664063),
    (0.047045138053795676, 20.723585410909166),
    (0.05651429401530083, 17.170587948590075),
    (0.06788938368924992, 14.215879401634828),
    (0.08155402979038098, 11.759712300217718),
    (0.09796906988424353, 9.719115316553642),
    (0.11768809804559574, 8.025083302438885),
    (0.14137613471226132, 6.620235797045521),
    (0.169832054371682, 5.456865258319388),
    (0.20401552744958767, 4.495310028557077),
    (0.24507938501080523, 3.7025989681199816),
    (0.25, 3.625609908221908),
    (0.2944084977655258, 3.051325284502292),
    (0.3536664805680501, 2.518716822776728),
    (0.42485179750826263, 2.085879495292344),
    (0.5, 1.772453850905516),
    (0.5103651597292703, 1.7372004132803263),
    (0.6130904889496623, 1.4599092607446489),
    (0.7364921771696293, 1.243814255807914),
    (0.75, 1.2254167024651776),
    (0.8847319226258559, 1.081261624448679),
    (1.0, 1.0),
    (1.062809082265323, 0.9674369409939675),
    (1.2767292740982499, 0.9012902297936889),
    (1.5, 0.886226925452758),
    (1.533706915512147, 0.8877843203717758),
    (1.8424085281127245, 0.9433276031375734),
    (2.0, 1.0),
    (2.2132450145006937, 1.1098299134403955),
    (2.658722763962626, 1.495282061702253),
    (3.0, 2.0),
    (3.1938654280478667, 2.40917478523617),
    (3.836720590331838, 4.90622171297118),
    (4.608968417706193, 13.552123271080921),
    (5.536652819843693, 55.534178045449025),
    (6.651059775050348, 378.14601948156195),
    (7.9897724438755136, 4937.197991894439),
    (9.597938653983793, 148020.68928442776),
    (10.0, 362880.0),
    (11.529793501972675, 12781286.9562457),
    (13.850488421589757, 4223069488.711604),
    (16.638288403323962, 7619939783553.182),
    (19.98721146617946, 1.1711113306768402e+17),
    (24.010199397311005, 2.6698065203370412e+22),
    (28.842926692105955, 1.802222208478361e+29),
    (34.64837615048576, 8.51542233670857e+37),
    (41.62233544053346, 8.205292784898614e+48),
    (50.0, 6.082818640342675e+62),
];

pub const BESSEL_SCALED_QUARTER_REF: [(f64, f64); 200] = [
    (1e-06, 30.688330956491907),
    (1.1226677735108135e-06, 29.81332413262046),
    (1.2603829296797275e-06, 28.963265670010408),
    (1.4149912974345759e-06, 28.13744419672243),
    (1.5885651294280527e-06, 27.335168621134144),
    (1.7834308769319094e-06, 26.555767553449158),
    (2.0022003718155846e-06, 25.79858874367797),
    (2.2478058335487255e-06, 25.062998535619087),
    (2.523539170434766e-06, 24.34838133638185),
    (2.8330961018393243e-06, 23.654139101005534),
    (3.1806256927941193e-06, 22.97969083174159),
    (3.570785964900463e-06, 22.32447209157806),
    (4.008806328898465e-06, 21.687934531596994),
    (4.500557675700498e-06, 21.06954543176703),
    (5.05263106533568e-06, 20.46878725478431),
    (5.672426068491978e-06, 19.885157212585696),
    (6.368249944718587e-06, 19.318166845168463),
    (7.149428986597578e-06, 18.767341611360777),
    (8.026433522257175e-06, 18.232220491196994),
    (9.01101825166502e-06, 17.712355599561075),
    (1.0116379797662073e-05, 17.20731181077061),
    (1.1357333583431053e-05, 16.716666393782692),
    (1.275051240713013e-05, 16.240008657711314),
    (1.431458937523479e-05, 15.776939607354175),
    (1.6070528182616388e-05, 15.327071608434636),
    (1.8041864093920723e-05, 14.890028062272203),
    (2.025501939230667e-05, 14.465443089602143),
    (2.2739657523579282e-05, 14.052961223271936),
    (2.552908068239517e-05, 13.652237109548937),
    (2.866067616948251e-05, 13.26293521778008),
    (3.2176417502507364e-05, 12.884729558150694),
    (3.612342699709431e-05, 12.517303407295202),
    (4.055460735840829e-05, 12.160349041518312),
    (4.552935074866949e-05, 11.813567477390384),
    (5.111433483440167e-05, 11.476668219485807),
    (5.738441648302395e-05, 11.149369015037902),
    (6.442363508721372e-05, 10.831395615288281),
    (7.232633896483537e-05, 10.522481543312713),
    (8.119844993184012e-05, 10.222367868109368),
    (9.115888299750822e-05, 9.930802984738774),
    (0.00010234114021054531, 9.647542400308044),
    (0.0001148951000187309, 9.372348525594683),
    (0.00012898902612533086, 9.104990472107882),
    (0.00014481182276745338, 8.845243854387277),
    (0.0001625755666443794, 8.592890597340961),
    (0.00018251834943190434, 8.347718748425976),
    (0.0002049074689815847, 8.10952229447554),
    (0.0002300430119772918, 7.8781009829778785),
    (0.0002582618760682676, 7.653260147611836),
    (0.00028994228538828766, 7.434810537844247),
    (0.0003255088599835058, 7.222568152393488),
    (0.00036543830709572563, 7.0163540763626235),
    (0.00041026581058271926, 6.815994321844186),
    (0.0004605922041145106, 6.621319671796762),
    (0.0005170920242896758, 6.432165526991365),
    (0.00058052255160949, 6.248371755822949),
    (0.0006517339604882424, 6.0697825467794555),
    (0.0007316807143427196, 5.896246263357527),
    (0.0008214343584919426, 5.727615301210485),
    (0.0009221978823334328, 5.563745947310524),
    (0.0010353218432956623, 5.404498240903333),
    (0.0011623224686798524, 5.249735836029755),
    (0.0013049019780144023, 5.0993258653857785),
    (0.0014649713983072858, 4.9531388052894165),
    (0.0016446761779946638, 4.811048341521108),
    (0.0018464249428955437, 4.672931235803691),
    (0.0020729217795953715, 4.5386671926891555),
    (0.002327202478960409, 4.408138726622946),
    (0.0026126752255633285, 4.281231028963374),
    (0.0029331662783900446, 4.157831834744647),
    (0.0032929712550971504, 4.037831288988308),
    (0.003696912707195027, 3.921121812391083),
    (0.004150404757850476, 3.8075979662488746),
    (0.004659525668664681, 3.697156316519332),
    (0.005231099308056262, 3.589695296981535),
    (0.0058727866131894815, 3.4851150715241905),
    (0.006593188271333547, 3.3833173956871927),
    (0.0074019599969156425, 3.284205477700069),
    (0.008309941949353394, 3.187683839410241),
    (0.009329304026284685, 3.093658177680727),
    (0.010473708979594496, 3.002035227068559),
    (0.011758495540521567, 2.912722624880747),
    (0.013200884008314179, 2.8256287800544224),
    (0.014820207057988583, 2.740662747733646),
    (0.016638168860761287, 2.6577341119305435),
    (0.018679135990207825, 2.5767528792775547),
    (0.020970464013232326, 2.4976293876164832),
    (0.023542864143224176, 2.420274234045098),
    (0.026430814869741054, 2.344598228069532),
    (0.029673024081888693, 2.2705123767054607),
    (0.03331294787934673, 2.1979279097443736),
    (0.03739937302478798, 2.1267563549583977),
    (0.041987070844439096, 2.05690967475308),
    (0.04713753134116724, 1.9883004776717856),
    (0.052919787359584414, 1.9208423201644933),
    (0.05941133984965034, 1.8544501160821185),
    (0.06669919663030122, 1.7890406733249282),
    (0.07488103857590023, 1.7245333787806636),
    (0.08406652885618325, 1.6608510538779901),
    (0.09437878277775381, 1.597921003399734),
    (0.10595601792776159, 1.535676279175151),
    (0.11895340673703196, 1.4740571772894828),
    (0.13354515629298988, 1.4130129817475383),
    (0.14992684327860456, 1.3525039581867413),
    (0.16831803533309567, 1.2925035872022428),
    (0.18896523396912096, 1.2330010069979565),
    (0.212145178491063, 1.1740036083335517),
    (0.23816855519761584, 1.1155396902633168),
    (0.2673841615839947, 1.0576610426723627),
    (0.30018358135755896, 1.0004452718051855),
    (0.33700643292719284, 0.9439976300972838),
    (0.37834626171319297, 0.8884520561363034),
    (0.4247571552536899, 0.8339710819046559),
    (0.476861169771447, 0.7807442335075785),
    (0.5353566677410725, 0.7289845529456492),
    (0.6010276782070383, 0.6789229197026015),
    (0.6747544053110694, 0.6307999704785872),
    (0.7575250258771914, 0.5848556188056983),
    (0.8504489341802679, 0.541316469921342),
    (0.9547716114208058, 0.5003817993787453),
    (1.0718913192051278, 0.46220917994673005),
    (1.2033778407775895, 0.42690123197212965),
    (1.3509935211980268, 0.39449523794020785),
    (1.516716888470923, 0.3649573847333542),
    (1.7027691722259, 0.33818307054581503),
    (1.9116440753857022, 0.3140039867752723),
    (2.1461411978584044, 0.2922016125365222),
    (2.409403560239525, 0.2725255316288297),
    (2.704959730463135, 0.2547139130881904),
    (3.036771118035458, 0.23851294455051197),
    (3.409285069746812, 0.2236922347187049),
    (3.8274944785163125, 0.2100542270714142),
    (4.297004704320841, 0.19743719935050322),
    (4.82410870416537, 0.18571293869016253),
    (5.415871378079473, 0.1747811523997351),
    (6.080224261649423, 0.16456282769332023),
    (6.826071834272389, 0.15499420294865704),
    (7.663410868007458, 0.14602215584325512),
    (8.603464416684504, 0.1376010740124365),
    (9.658832241158702, 0.12969087662808682),
    (10.843659686896101, 0.12225577966763465),
    (12.173827277396613, 0.11526349205786594),
    (13.667163564620065, 0.10868465418695365),
    (15.343684089300123, 0.10249241943932898),
    (17.225859653987865, 0.09666212783440309),
    (19.33891750455231, 0.091171043817578),
    (21.71117945694504, 0.08599814113540605),
    (24.374441501222204, 0.08112392344285163),
    (27.364399970746703, 0.07653027267700672),
    (30.721129988617577, 0.07220031941221691),
    (34.48962260405758, 0.06811833088866968),
    (38.72038781812555, 0.06426961344180691),
    (43.47013158125024, 0.060640426804710316),
    (48.802515836544316, 0.05721790830285942),
    (54.78901179593942, 0.05399000536998735),
    (61.50985788580502, 0.05094541512463559),
    (69.05513520162327, 0.04807352998628149),
    (77.5259748862946, 0.04536438849624782),
    (87.03591361485162, 0.042808630655245074),
    (97.71241535346498, 0.04039745720588905),
    (109.69857978923837, 0.03812259238187273),
    (123.15506032928256, 0.03597624972083945),
    (138.2622173764656, 0.03395110059930155),
    (155.22253574270474, 0.03204024519813541),
    (174.26333860096503, 0.030237185648529296),
    (195.6398343517064, 0.02853580114252335),
    (219.63853724165463, 0.026930324820831682),
    (246.5811075822603, 0.025415322274554574),
    (276.82866303920656, 0.023985671517527864),
    (310.7866187782013, 0.02263654430309802),
    (348.9101213406773, 0.021363388673600943),
    (391.71014908092593, 0.020161912643200445),
    (439.760360930272, 0.01902806892536531),
    (493.70478528390026, 0.01795804062542205),
    (554.2664520663105, 0.01694822782655158),
    (622.257083673023, 0.01599523500449677),
    (698.5879746785247, 0.015095859212274817),
    (784.282206133768, 0.014247078981476645),
    (880.4883581643463, 0.013446043891395336),
    (988.4959046625584, 0.012690064761348424),
    (1109.7524964120719, 0.011976604425222012),
    (1245.8833642950078, 0.011303269050531837),
    (1398.7131026472384, 0.010667799967222029),
    (1570.290124729377, 0.010068065974051554),
    (1762.9141180959477, 0.009502056092790015),
    (1979.166867853557, 0.008967872742591029),
    (2221.9468609395235, 0.008463725308860507),
    (2494.5081352303164, 0.007987924082712792),
    (2800.5038941836306, 0.007538874548729577),
    (3144.0354715914996, 0.007115072000222538),
    (3529.7073027306496, 0.006715096462565494),
    (3962.688638701478, 0.006337607906418491),
    (4448.782831127585, 0.005981341733825849),
    (4994.50511585514, 0.005645104521242431),
    (5607.169938205458, 0.005327770004535889),
    (6294.988990221887, 0.005028275291934603),
    (7067.181273927491, 0.004745617291748224),
    (7934.096665797491, 0.004478849342485662),
    (8907.354638610439, 0.004227078033739309),
    (10000.0, 0.003989460206898684),
];

pub const KERNEL_REF: [(f64, f64); 19] = [
    (0.0, 1.2162802142575203),
    (1e-8, 1.2162802142575203),
    (1e-3, 1.2162799101875301),
    (0.1, 1.2132458390234888),
    (0.5, 1.1440776832446898),
    (1.0, 0.96706241560150699),
    (2.0, 0.60757435659772205),
    (3.5, 0.39358466810863636),
    (5.0, 0.32148251310237903),
    (10.0, 0.22446447288313695),
    (20.0, 0.15826293390594965),
    (29.5, 0.13024515245822121),
    (30.5, 0.12808861574514411),
    (50.0, 0.10001501314670921),
    (100.0, 0.070713330349372149),
    (1e3, 0.022360688160271155),
    (1e4, 0.0070710678383819801),
    (1e6, 0.00070710678118681269),
    (1e8, 7.0710678118654755e-5),
];

// @generated by examples/gen_tables.rs (40000 entities per cell)
// Delta-method null mean and variance of the seven normalized statistics
// for independent Gaussian random walks, indexed
// [constant|trend][regressors - 1][series length][statistic].

pub const PEDRONI_T: [usize; 8] = [30, 50, 75, 100, 150, 200, 300, 500];
pub const PEDRONI_MAX_REGRESSORS: usize = 7;

pub(super) const PEDRONI_MU: [[[[f64; 7]; 8]; 7]; 2] = [
    [
        [
            [8.636899308712428, -6.638158121993683, -1.9773478794799346, -1.9729281454962002, -8.515240908256539, -2.1945712747085304, -2.227264144756154],
            [8.719837767746355, -6.5757425941957415, -1.9045584416889036, -1.8750760192392326, -9.013874337827119, -2.1604220274872206, -2.130522112429067],
            [8.754078529716207, -6.45207594611606, -1.8515132067487323, -1.8225306020859076, -9.170645066396359, -2.124003536176849, -2.0859293998297086],
            [8.734371419634243, -6.360742899705757, -1.8245229080877807, -1.7997872054933588, -9.216572233772798, -2.1073349189376414, -2.071726852187157],
            [8.728400975786887, -6.370364344871496, -1.8149536243249242, -1.7891381506005986, -9.278402813988563, -2.0958194000511097, -2.055166265197057],
            [8.74139808234929, -6.324627855267586, -1.8014455381682226, -1.7801586577115152, -9.311853434995703, -2.0899557426984607, -2.0557665307816597],
            [8.748537719179778, -6.291593673237222, -1.7883832794712264, -1.7707040279094746, -9.314584117302376, -2.0776322393345414, -2.047779615322424],
            [8.697655435159263, -6.193738251207086, -1.7691269630997946, -1.7574906558211336, -9.263831103842106, -2.0640079094742934, -2.0440935596397476],
        ],
        [
            [11.381459719961688, -9.661387322025579, -2.4551413172735295, -2.4662928458147664, -11.421206955757897, -2.651293789144356, -2.717685244152685],
            [11.675788178160834, -9.991868645948367, -2.3882739696209394, -2.3581167268831136, -12.475930860244365, -2.6169863183028887, -2.5932235331199656],
            [11.656762050667494, -9.940706672185264, -2.331106964898769, -2.2947536734913028, -12.853743249470604, -2.583214805603246, -2.5406585166154123],
            [11.670469361676782, -9.87215612256052, -2.297452847527595, -2.262372376707663, -13.029302142594382, -2.5641226296781316, -2.5195038813117505],
            [11.817194174164687, -10.053747449171885, -2.2945394247235256, -2.2566993414347234, -13.292662707096765, -2.5561624994651577, -2.50365325186867],
            [11.788727446709045, -9.925605222736356, -2.2659803232175926, -2.234254055866123, -13.256506844648616, -2.533567260810014, -2.487930878956123],
            [11.927640550611246, -9.969925101409299, -2.257494131438217, -2.2279448279492917, -13.376335209368627, -2.527411670664767, -2.4845276477011153],
            [11.746526495950732, -9.773164847992213, -2.2254204640069646, -2.206553761894602, -13.202183872211974, -2.4970247890772788, -2.4682955925552594],
        ],
        [
            [14.11174374281579, -12.403739234843657, -2.870973142835658, -2.9053340533625986, -13.926375511731628, -3.0486145030779093, -3.140776944046557],
            [14.697437586037612, -13.29869969962264, -2.801298508498048, -2.776962979152045, -15.659536224342826, -3.0053502944398676, -2.9945685227008187],
            [14.89922311656954, -13.589227324916779, -2.7558349279794516, -2.7145786393225944, -16.463634747652996, -2.9808746592353335, -2.936259934034897],
            [15.092402560201654, -13.705191542284041, -2.730261167004067, -2.686656676823158, -16.796439201477426, -2.961681993856758, -2.9097305593877665],
            [15.130346621464861, -13.81226542404402, -2.701582836635129, -2.653174196372195, -17.122346589329474, -2.9385780330331848, -2.8763507641741675],
            [15.223960365655786, -13.817593162558246, -2.684754163053046, -2.6428486598339207, -17.25567455396607, -2.9262089249380656, -2.8705977393850213],
            [15.295861072704033, -13.863994039129832, -2.671457935255216, -2.6318423845176846, -17.375550400025578, -2.914298949429995, -2.8599532469975193],
            [15.239705356718652, -13.657111322060194, -2.635568130942707, -2.6082260621928097, -17.25966302090802, -2.8841391389575186, -2.846353801818198],
        ],
        [
            [16.78920780388995, -14.785706683718805, -3.2377266599622385, -3.294402292689585, -16.071061940079677, -3.4049432338964034, -3.5204078424791074],
            [17.886901542169117, -16.535836509193064, -3.1819813127694383, -3.1683075021910767, -18.646346238446924, -3.3591338695867026, -3.367712900632622],
            [18.35061622043044, -17.176031442398763, -3.134026766929458, -3.0929207322352057, -19.901542635555654, -3.3324517710018764, -3.294248520619087],
            [18.586211435739884, -17.479335210301574, -3.109523805239198, -3.0593467364234863, -20.480262151791237, -3.3150374203923008, -3.2602315279182212],
            [18.742766232566098, -17.815092732173444, -3.087268075142119, -3.029413864717092, -21.111379011754735, -3.3006298550125486, -3.2302823034578028],
            [18.76091263968563, -17.728558495449747, -3.053566521938688, -2.9994146380578073, -21.200487269847102, -3.274123281102613, -3.2072604904154605],
            [18.792285563321304, -17.7347870498967, -3.03005908246775, -2.979505016169456, -21.329287696342057, -3.2553015779193175, -3.19055641607458],
            [18.797016310706944, -17.55127458522752, -2.9938572202730955, -2.957976652324174, -21.22120179529701, -3.2206357747392405, -3.1737833772142183],
        ],
        [
            [19.538329017377894, -16.982491401056603, -3.593222421206587, -3.671615787710403, -18.02667031450657, -3.7539118526206865, -3.883519704756155],
            [20.969708765313023, -19.460714952314643, -3.5176557067108036, -3.521269516292097, -21.344130303436216, -3.676064774198345, -3.707224470529464],
            [21.625270149609168, -20.614624666720818, -3.474624715714996, -3.4366452330643407, -23.173910996506596, -3.652165469133562, -3.6209917209609976],
            [21.906644999757155, -21.041200215056392, -3.4420439964542258, -3.3908819359538938, -23.95987451957701, -3.6312505460054014, -3.579183512753162],
            [22.314707045781166, -21.667057670800915, -3.424703698609913, -3.3600591347926185, -24.836990464167897, -3.615014715792031, -3.5407680687763206],
            [22.31969827007229, -21.6502534057842, -3.3927884324707085, -3.329715590098177, -25.027391867872844, -3.589877583842497, -3.515104531915869],
            [22.440801305017434, -21.70500765139483, -3.361099727505417, -3.2988383552918705, -25.359489265056627, -3.570334828420778, -3.493990390307717],
            [22.63417408631123, -21.716160262892377, -3.3357419825969847, -3.291779009166121, -25.374426583412586, -3.540140714024514, -3.485274380536658],
        ],
        [
            [21.969404622821376, -18.752187231808108, -3.9067797178718617, -3.9959269623873874, -19.625965185810347, -4.067597737271722, -4.193908232734905],
            [24.001609239917233, -22.161930197322246, -3.826434717839859, -3.8476369510213675, -23.785051616134968, -3.9671847103910456, -4.019682340388702],
            [24.98091433041391, -23.90470006119205, -3.78934091909506, -3.759447327284406, -26.228376532133623, -3.945566269020447, -3.9272727474538445],
            [25.408784419847564, -24.600667065225768, -3.7567083801723133, -3.704791155515256, -27.347943060854682, -3.9255446384382675, -3.8756535758646753],
            [26.005906021415225, -25.51705349961246, -3.7421581918281412, -3.672320366698836, -28.517126185233803, -3.9106074717159034, -3.8342129313018494],
            [26.10075177441904, -25.57424923334064, -3.7029316733279076, -3.632310910167399, -28.92082535837714, -3.8858896845502047, -3.80459541684818],
            [26.347929714240156, -25.88836825000167, -3.6830599581818233, -3.612252637760043, -29.393119937858508, -3.867748019929566, -3.7837705901376926],
            [26.45308171385074, -25.729975391951346, -3.6367531054458797, -3.583279297487379, -29.443539174826423, -3.8304347426097176, -3.7653667266858477],
        ],
        [
            [24.320194650077582, -20.331996532318676, -4.220774920977658, -4.3129011663617165, -21.08498645525852, -4.392548164830977, -4.50466917312425],
            [26.87164302507755, -24.54701254476371, -4.103106576922076, -4.145766698802116, -26.005611345964283, -4.23693167362483, -4.3139714360420385],
            [28.345400836026545, -27.005204225116035, -4.078814174322894, -4.058952866027819, -29.132048714843258, -4.220666084764184, -4.215993379487914],
            [28.810436905513686, -27.945505317145006, -4.037471779720057, -3.988482423220575, -30.54393915562261, -4.192895435029642, -4.149261409017788],
            [29.606649617586672, -29.211829950173936, -4.0272046113191, -3.956579378541769, -32.148359891805164, -4.184983870288968, -4.109016347622444],
            [29.84611548531404, -29.466276479190846, -3.992755207324218, -3.9193022558224433, -32.72411718515133, -4.160994902790215, -4.078566391632462],
            [30.05782442453433, -29.882964301421367, -3.9708102062230677, -3.8915048986282232, -33.33966355464706, -4.1418234377923895, -4.049549522543463],
            [30.240507231183397, -29.685789863401148, -3.9146915033421092, -3.85335957835632, -33.41017116244583, -4.096194940236496, -4.023421697488916],
        ],
    ],
    [
        [
            [15.276616930818202, -11.477862367544372, -2.7039665872165077, -2.736905963106477, -12.413301028067258, -2.7907398848813925, -2.889798097488044],
            [16.529321474732395, -11.72612318500141, -2.5960901380481256, -2.554785534414652, -13.510043689686652, -2.741704425703537, -2.714140181129113],
            [17.12388892005315, -11.623708149194803, -2.5250203160562212, -2.468816632021736, -13.914103338625482, -2.7052511824326366, -2.6467159362716526],
            [17.33079511519189, -11.43769491768411, -2.474950947478847, -2.4204116293667446, -13.996995121103135, -2.673436876550742, -2.611450632379656],
            [17.45840150651023, -11.450555893940523, -2.448690959997644, -2.392023386507044, -14.150640798109094, -2.652285330795788, -2.582450146210554],
            [17.653902958632607, -11.341660816806186, -2.4238483980351493, -2.374681511943976, -14.197095788057203, -2.638266129455391, -2.5761345277882706],
            [17.626794516066603, -11.180563400291204, -2.3915229980128925, -2.3478143443471824, -14.162391680542482, -2.6136898213635256, -2.556593221339897],
            [17.79978108476011, -10.993607153421651, -2.360664430000342, -2.3323567018522957, -14.07150338426972, -2.5915864443644754, -2.553564949878406],
        ],
        [
            [17.26433321567422, -13.595489466904889, -3.0330758708600642, -3.088306557441395, -14.486520449988332, -3.1265462262807144, -3.2489654631931106],
            [19.039043148284442, -14.581654281671733, -2.945008649573439, -2.915279406430441, -16.340423705594667, -3.0823431118288185, -3.071571463384907],
            [19.862882675274527, -14.783172272584642, -2.8787514516040478, -2.8258706357691095, -17.182621483890525, -3.053363752862513, -3.0021059922216353],
            [20.22089583383707, -14.734398278473668, -2.8332531938403696, -2.777786331930643, -17.40617018949278, -3.0213527434392464, -2.95985561339967],
            [20.475363845979082, -14.912318595373963, -2.8109140063495754, -2.748693902881554, -17.835904021791038, -3.0085411328590577, -2.9336330050672426],
            [20.618213154815457, -14.735190062221282, -2.773052767095182, -2.7188537722875386, -17.83687412740111, -2.9817414306092718, -2.9146269184758515],
            [20.719229882972858, -14.714802482098927, -2.7518605895909607, -2.702209509734628, -17.942992876634808, -2.9656443760611437, -2.9018219241336705],
            [20.96269583363019, -14.563205907580603, -2.7226459585536933, -2.6864039801087936, -17.92485970882045, -2.945656861441765, -2.898515256678674],
        ],
        [
            [19.313469386354516, -15.665328630000818, -3.36307540368855, -3.4432829582446187, -16.462863894134475, -3.4595485503481362, -3.6028018502177717],
            [21.650159861981003, -17.40918518756712, -3.2758589963075817, -3.2606935150405603, -19.086475391423868, -3.406127998601185, -3.4150239623628633],
            [22.71417576998078, -18.002182734543833, -3.2118909841560863, -3.160985523128459, -20.358718770329887, -3.3740974815614004, -3.3279041688341837],
            [23.221834518421023, -18.232223890274472, -3.181226864215866, -3.1248138577363704, -20.931584948055313, -3.3579316012380347, -3.297823253244656],
            [23.554542646170713, -18.474338009021164, -3.1468712874046854, -3.079669087744167, -21.45027592300742, -3.332683220194707, -3.253937307470419],
            [23.847859829053537, -18.4067220696126, -3.1130674909320115, -3.0526009051769143, -21.56116063809549, -3.307133010185686, -3.233423921862947],
            [23.98953340748328, -18.42144424482242, -3.0873707661958796, -3.0299074734979974, -21.759004632066564, -3.288379227714947, -3.2166952018649004],
            [24.146815995682438, -18.162883223038705, -3.045379796074834, -3.0045405759149735, -21.66936459829924, -3.255884904862897, -3.2035397384565405],
        ],
        [
            [21.294992843568966, -17.48390973391672, -3.6687922427346917, -3.759474180347692, -18.184906130142615, -3.771727090378916, -3.911209763008468],
            [24.166676653015905, -20.10860173615486, -3.5855184902180537, -3.593131345520412, -21.628802250949963, -3.7055140061896132, -3.743018167108061],
            [25.60238023007781, -21.219565088998895, -3.532025546354628, -3.488892983175696, -23.48586735582962, -3.6828833652419806, -3.648191632706872],
            [26.257992114959908, -21.5905917073245, -3.489807199190084, -3.433629021092214, -24.2465574644603, -3.655211215859662, -3.599098402993126],
            [26.834833166654416, -22.19100066973936, -3.467859563971739, -3.3951492192605874, -25.13624116593597, -3.639359740401283, -3.556509112080515],
            [27.14926235376126, -22.17390460408527, -3.4336725985441396, -3.3663346613785112, -25.346927897212794, -3.614256485081679, -3.5350581672746064],
            [27.39720543137504, -22.26657046517749, -3.4034969600339733, -3.338196877953813, -25.63918709155232, -3.5906665591756326, -3.510962912290237],
            [27.747661481520293, -22.138312240045128, -3.36903083221857, -3.3223984731198994, -25.73924112660144, -3.5676355625017377, -3.508988256120158],
        ],
        [
            [23.250043958738996, -19.15740173947599, -3.9836645984442844, -4.081521806383697, -19.770674129638994, -4.098285017942538, -4.237093369357988],
            [26.706301780191527, -22.550924372347716, -3.865019163300418, -3.8891555727362834, -23.913172509252778, -3.9764923558380243, -4.03150951894792],
            [28.597622822407736, -24.4147611034016, -3.8336451392373525, -3.801303539467929, -26.49671000793652, -3.9683926553168303, -3.9491350938653467],
            [29.39539880603569, -24.999330244049066, -3.789043587656153, -3.734014679390533, -27.53447787204204, -3.9399213688531147, -3.8877487349464923],
            [30.079691815793808, -25.82391946458385, -3.763948626122796, -3.6906174063059316, -28.699329334065222, -3.921992540666489, -3.8418337942825307],
            [30.42547629509022, -25.863791048906208, -3.722963568033425, -3.649220972264223, -29.08568676394826, -3.896167315919275, -3.811778158515032],
            [30.895966777510992, -26.229308115766173, -3.7066181377990683, -3.6321024957345696, -29.619364653006937, -3.8825534637139434, -3.7945732901670444],
            [31.22304525879698, -26.023071513038467, -3.6596073821879007, -3.6040924493545035, -29.68596818230717, -3.8474594953122883, -3.779370273031604],
        ],
        [
            [25.078101788798676, -20.622146700080314, -4.27782988744813, -4.3736495544289316, -21.176838571116367, -4.406390155067309, -4.52534760682963],
            [29.296205988336236, -24.94647654377659, -4.14695477525262, -4.195856066502968, -26.169967424400674, -4.254942963996595, -4.3375113277294055],
            [31.50749124426454, -27.316070733533685, -4.104866277342974, -4.083571907273836, -29.25548447039324, -4.229231634647957, -4.225048232312252],
            [32.537231450250424, -28.35475002633105, -4.0718395601084705, -4.021244319918742, -30.768907012648935, -4.2106959593136155, -4.166324993606712],
            [33.3124274886719, -29.338970084730313, -4.03604761763377, -3.960324295313, -32.1253425009679, -4.182391520543295, -4.1007675620664035],
            [33.960960574839206, -29.740335152896904, -4.012535658126488, -3.9337159706355838, -32.89571923417426, -4.17285187550887, -4.085210241763156],
            [34.37713890213249, -30.106864313301802, -3.9841586630347967, -3.9013367770192584, -33.51243897967359, -4.150589011312228, -4.054463606905969],
            [34.78128596583554, -29.919698794730962, -3.9303334474597973, -3.8656450822312522, -33.584759369496915, -4.1070683846447755, -4.0302388997553775],
        ],
        [
            [26.798636047152016, -21.88141699436627, -4.570551499954237, -4.639871190769246, -22.3945364184745, -4.718317645745319, -4.797498613444171],
            [31.769294211720617, -27.085805727667015, -4.406954080705839, -4.465907117018051, -28.164309873047657, -4.51075594309907, -4.604172748252119],
            [34.405560898084914, -30.16093605610666, -4.3659148698437455, -4.359408225276077, -31.936987814364308, -4.480727367503068, -4.493830554330702],
            [35.66933821847565, -31.588110709378128, -4.337473785148214, -4.2932512014699835, -33.873575250803974, -4.466415863139461, -4.430929659671545],
            [36.693293853337885, -32.96720338850722, -4.304602214395475, -4.231578202644062, -35.63546658216878, -4.439267465127253, -4.363505403374731],
            [37.447503228245374, -33.5806845476112, -4.281612413791392, -4.197749633796338, -36.62249256282106, -4.428971601799247, -4.337413791746241],
            [37.987929236656534, -34.04449426484139, -4.2489631119495845, -4.158569458715544, -37.3547613921168, -4.402626039236413, -4.300687614398502],
            [38.51635140741947, -34.01346450876028, -4.197550001783648, -4.12693111395684, -37.61198169280691, -4.3611805995785415, -4.278812504757263],
        ],
    ],
];

pub(super) const PEDRONI_NU: [[[[f64; 7]; 8]; 7]; 2] = [
    [
        [
            [29.220695104464532, 22.544622474805216, 0.8150931830624748, 0.9171765031563438, 21.555121271171956, 0.7383385955077235, 0.9634661648976647],
            [39.936244570702755, 26.74988917090719, 0.8457687634503648, 0.8868995880478839, 28.435953437341393, 0.7184277127047346, 0.7923040233179112],
            [45.10306387894344, 28.965457113129915, 0.8824322922864474, 0.8966937487163171, 33.05469771454186, 0.7286995451915779, 0.7513920515620144],
            [50.7264093596487, 30.755524549848296, 0.91676664382932, 0.9242980011512562, 34.803349802673665, 0.7231476582159753, 0.7285964900076102],
            [50.994132628287524, 30.826071777305323, 0.8940689784391999, 0.8948606298955424, 35.987598931765596, 0.7020986030123242, 0.6970254263686173],
            [54.33840856982638, 31.447561357315102, 0.8953272816582891, 0.8879317271094084, 36.844384067175206, 0.694938030165828, 0.6811139340488306],
            [55.05664753777369, 32.048110793873995, 0.917128278915359, 0.9095564239338984, 37.67841293031381, 0.6903259457506344, 0.6765390549249967],
            [58.03755352232351, 32.375640502656275, 0.9479510458161925, 0.9444312385196064, 37.68769997239315, 0.6887323411389815, 0.6771121476243638],
        ],
        [
            [44.777160554810344, 32.73525565672508, 0.8718115267892076, 1.0141346970758773, 24.129074986528003, 0.7177607256029661, 0.9817213307535547],
            [62.89796545791127, 44.29785103665165, 0.9033980580546164, 0.956859695715564, 35.38135533589034, 0.6822647686611674, 0.7846257967159019],
            [74.74913083740839, 50.48318942424896, 0.9313797651270493, 0.9512716250197648, 42.951762944740516, 0.6778589772620484, 0.7216152493093425],
            [82.79292876066, 53.75187203332718, 0.9573579470349054, 0.9595654516085568, 47.45396653652081, 0.6813166044313358, 0.697746089748613],
            [85.57604307954544, 55.59793683767975, 0.9278038062644316, 0.9118001232152069, 50.90893889520924, 0.6642364035034902, 0.6590705086127382],
            [89.43988961881674, 56.72816355220624, 0.9602858889067823, 0.9470500564075639, 52.8640505449749, 0.6723902754296046, 0.660021110852131],
            [92.29847870786344, 58.4829302090978, 0.9533105868932568, 0.9381514662015158, 54.87257944749576, 0.6649663993315421, 0.6479708134393702],
            [96.63630861188379, 58.20914955917641, 0.9653602809562879, 0.952540914165696, 54.871277979380814, 0.6529981330773907, 0.6362277135918597],
        ],
        [
            [53.97311470537928, 36.7608669369567, 0.8912328311442315, 1.066411280641959, 25.487087400471314, 0.7544949781605034, 1.0070326072393896],
            [82.37978248062464, 55.51268687603631, 0.8972942328170268, 0.9753194462783291, 40.35190211814767, 0.6715025937161941, 0.7981134914545776],
            [101.26573731444036, 66.2512839507501, 0.9082345413423196, 0.9348162047195399, 51.070956163485725, 0.6519113459993331, 0.7121831318852293],
            [111.59970339319793, 71.52152365754789, 0.916319579339847, 0.9170061196501493, 57.34889598073428, 0.6476663782157337, 0.6754333173308038],
            [117.55985944868499, 78.07448808362265, 0.9381492905683945, 0.9295354989586513, 64.0038062425107, 0.6463437460173544, 0.6532928537818117],
            [125.9231929522266, 80.28894702630396, 0.9352316520161098, 0.919517897276573, 66.98070947966738, 0.6402855076794822, 0.6335373858873949],
            [130.39026412384547, 80.04503471599631, 0.9091374920449367, 0.8856712034497736, 69.11389431792503, 0.6291478237212732, 0.6111030450081378],
            [136.39789089185092, 85.15397589520843, 0.968490543123063, 0.9472969882377476, 69.64410440511709, 0.624254350279478, 0.6053498802664581],
        ],
        [
            [60.157226949117934, 37.16451710829939, 0.9175876096261758, 1.1083435082205433, 25.719497713352293, 0.8162578919486796, 1.0270306649033623],
            [96.03811254393554, 61.00360249248297, 0.8695510487062714, 0.9787606292753359, 42.66579146581613, 0.6649263810137663, 0.8169660328481438],
            [122.30098961890822, 77.48297628341534, 0.8864433954427242, 0.9318375520498905, 57.14937672398617, 0.6402865752185095, 0.724790248063013],
            [132.81020552855924, 83.84525188740997, 0.8574946964227765, 0.8759811024638053, 66.03918728959165, 0.6312995676989859, 0.6735748852178426],
            [149.22035824787702, 97.39436897937571, 0.9074360959212289, 0.9013786326888427, 75.4750716544585, 0.6274592383039058, 0.6416905110619897],
            [159.4721630421848, 101.93383370302247, 0.9117296953417963, 0.890947042907311, 80.33534182296623, 0.6268034677588262, 0.6222427634367318],
            [163.97894005171253, 105.50681668816341, 0.9209167845943973, 0.8888278284516342, 84.06857699012937, 0.6182680977187618, 0.6016726455614413],
            [170.0859417015394, 101.70145026204932, 0.8773003614427205, 0.8529741826665117, 86.16009157951649, 0.6091560983389928, 0.587025646311044],
        ],
        [
            [59.43979655545312, 34.17862214114423, 0.9387547484422756, 1.0999757490243336, 26.06528956603076, 0.9110507559634993, 1.0553181400509135],
            [101.40631084528104, 59.787621249009625, 0.8146601478962124, 0.9344456683359741, 44.16229626163107, 0.6732786618949627, 0.8339480129219007],
            [136.0600363025339, 85.46434891327519, 0.8572059464246651, 0.9190923627214235, 61.88531178658007, 0.6389359822397914, 0.7340218231473766],
            [157.4087850769892, 96.29693051718282, 0.8467703283698869, 0.8764932259697227, 72.8253271580325, 0.6231155110510521, 0.6849442282813232],
            [162.31745730743714, 104.43508580935513, 0.8151178590082311, 0.8240149131170549, 84.85958029458467, 0.614422567139847, 0.6440116465024349],
            [182.93092497277524, 115.11418993052818, 0.8412345526021114, 0.828930049261984, 91.53730560935524, 0.6093971762302549, 0.6111972304208744],
            [206.48417634984912, 128.68707512604817, 0.8989333009394637, 0.8673857144476915, 99.58120420789396, 0.6114919922005575, 0.5970005250036762],
            [204.67276477192144, 122.31043732205063, 0.8391533435869705, 0.8080868517716341, 101.80693918755513, 0.5972098970710207, 0.5745423072185752],
        ],
        [
            [57.84596595302003, 33.42496222950028, 1.009569655643693, 1.1385823420600485, 26.84168551403654, 1.0359314646581643, 1.0859539175647581],
            [105.18780869953439, 60.27435368547747, 0.8135115492909175, 0.9462074079452345, 44.19041452996761, 0.6889391350534058, 0.8416315655198401],
            [140.5280891219467, 85.21354081075961, 0.7912115661107556, 0.8705268165160719, 64.58656374178763, 0.6325836803151725, 0.7456818569308302],
            [165.2878409319948, 99.67958102743545, 0.7868880414069994, 0.829085455982304, 79.19216546661609, 0.6236589936772281, 0.696845077653384],
            [178.8028308583054, 113.62098561038265, 0.7673168272732077, 0.7856500289632579, 91.86212766575787, 0.5941997548190812, 0.6336738926208526],
            [205.30521837350543, 124.2733220461408, 0.7876507827892826, 0.777573382301746, 103.4225199753705, 0.6067537107458266, 0.6148951880558826],
            [209.0187316847398, 129.43217756896877, 0.7632881541532046, 0.7400933507187117, 112.69460084800103, 0.6017313219982774, 0.5913015699477138],
            [238.1254154394401, 138.48133717238142, 0.7913957652498871, 0.765008446587129, 117.71167353459386, 0.5913690688353346, 0.5706090240975334],
        ],
        [
            [57.27568192439473, 31.455234577364745, 1.0889658930437127, 1.1559075944822454, 27.014789517263836, 1.1835792208837066, 1.1217649863222703],
            [105.10090531931905, 58.07751674453144, 0.810959265466422, 0.9538022970056905, 45.213903687502324, 0.7260291190273632, 0.878179253160476],
            [148.83487280656422, 86.58321747154281, 0.7720455390815476, 0.8683836592750535, 66.55459619274373, 0.6368331128013414, 0.7597314612060623],
            [180.6642985356682, 105.89754622490497, 0.7659420801625285, 0.821424345534322, 81.83800392016396, 0.6097023008421348, 0.693725570966688],
            [200.5277013634339, 123.46630995428787, 0.7511885975500094, 0.7829856975816015, 100.08264401431227, 0.5955273795416992, 0.6479351141770922],
            [222.33247587884185, 138.1293043511508, 0.7699507182786219, 0.7690151331583663, 112.90763459965906, 0.602361316973167, 0.6208353645253345],
            [237.05261263212543, 144.19851804764096, 0.7439207666528259, 0.7239425373257589, 124.38257978492611, 0.5898584777365254, 0.584093011953469],
            [258.4811138163529, 152.45159270341014, 0.7548427612380175, 0.7227920253106878, 133.35813235461458, 0.5924709570982678, 0.5693007234998162],
        ],
    ],
    [
        [
            [22.928937775805284, 23.360133213605636, 0.6455410581411908, 0.8164833701951624, 21.175493941684703, 0.6159141137699796, 0.9236765211935468],
            [46.45437926102088, 34.124624731864614, 0.6436778161410802, 0.718161799181255, 33.7529709169859, 0.5979408378310319, 0.7301222523410644],
            [66.52917388652646, 39.45334091700362, 0.6459545101236467, 0.6793515021741637, 41.466213628949696, 0.5930944244850056, 0.6522982593699465],
            [77.74415799800839, 41.73436101727073, 0.6626779276304109, 0.6790954405969777, 45.90224422802184, 0.6027940029257135, 0.6339753595734363],
            [83.63460504068836, 43.909623059804346, 0.6647793323292743, 0.6688098652928075, 49.46973888535989, 0.594941813896497, 0.6035108358114823],
            [93.69294356290877, 45.130646932774475, 0.6648021237221929, 0.6628372856268618, 51.35753587187997, 0.5916287011386488, 0.5889536817878702],
            [99.45508491555425, 45.68082880545386, 0.6664398425962381, 0.659002091459908, 53.817438135511075, 0.5975636841534719, 0.5873966217309378],
            [108.5056750405004, 45.80286661884546, 0.6754556681797678, 0.6685386317838115, 53.945908292730394, 0.5902526665153087, 0.5775321414339888],
        ],
        [
            [27.193297164358846, 26.974528547382043, 0.7335803909925831, 0.9163950943136052, 23.259304852379962, 0.7069627724770341, 0.991635394974981],
            [56.05932216376675, 42.969974028946275, 0.6837556824002986, 0.7778261055189795, 38.06127101921554, 0.6109006565397466, 0.7615711608803905],
            [83.00180952423462, 53.62920729134206, 0.7022795931220709, 0.7416224120414783, 50.46887204386161, 0.6160892192847762, 0.6928898369602781],
            [96.87918742415668, 57.36812462049552, 0.6981519999094511, 0.7129871081499191, 56.63353429544862, 0.6105651637753566, 0.6487178302728938],
            [108.44702472103653, 62.81886853509343, 0.7028496709548091, 0.7037558421488699, 63.16654776519185, 0.6062147976932198, 0.6185563327097227],
            [117.74391480329709, 63.93692605742497, 0.702443349269387, 0.6943001022251842, 66.59566481195004, 0.6052598422402989, 0.6011301213097847],
            [126.79988431491695, 66.08694809414095, 0.7057926807726471, 0.6895747612978373, 69.90980895386036, 0.6049640011367218, 0.5891012912425176],
            [144.47939983854036, 69.63081534374223, 0.7364628482646876, 0.7199911996606646, 70.71699094190957, 0.5952779657057453, 0.5759885113516987],
        ],
        [
            [30.402450319726864, 28.52843066497284, 0.7925076219533701, 0.972648009101417, 24.345311157439173, 0.7867667206272384, 1.0222429732496081],
            [64.5892067174685, 49.407169606051994, 0.7159653612620377, 0.8276392325661384, 41.36147303011251, 0.6357526826588272, 0.7990614193370486],
            [96.86596540520571, 65.31658238203818, 0.7308674320488155, 0.7794553449730758, 56.3872270187685, 0.6207202255642971, 0.7083418955643229],
            [117.48842477801308, 73.45278361626134, 0.7313308197279578, 0.7534741944693824, 65.25937618477255, 0.6126660817242828, 0.6596039931934528],
            [129.0539466693542, 80.67398267295009, 0.7316232202117924, 0.7333671914738576, 74.29487125874682, 0.6053963131708651, 0.6236688814572392],
            [142.64777160137015, 82.9725914264612, 0.7259580739500673, 0.7132710715998603, 78.8817682690872, 0.6039196412972003, 0.601684769042976],
            [153.0937450791045, 87.34664538085397, 0.7349958323168753, 0.7177025857082215, 85.15525362109244, 0.6070349722976598, 0.5944395573714413],
            [173.37110472357318, 89.30118426911778, 0.7322809536182004, 0.7125860347870261, 86.72258630503832, 0.5948702950426986, 0.5750242427892738],
        ],
        [
            [32.393879392561935, 28.49644930816993, 0.8528897383913748, 1.006642732700814, 24.839901764307708, 0.8695251809883504, 1.0257548854392966],
            [69.49899049960675, 52.32413404268527, 0.7274433586497565, 0.8519253481491033, 42.52724094344931, 0.6515238226216125, 0.8202667421391999],
            [108.21632064787423, 73.1237976942881, 0.7365894530841227, 0.8027298396627495, 61.69175559413918, 0.6287233182397417, 0.7322833225141896],
            [132.8455531872967, 84.74381805031408, 0.7356911442459144, 0.7685571834317899, 71.83111537693289, 0.608012630268161, 0.6721496099483278],
            [150.13143075699642, 95.06829905834675, 0.7234152308070217, 0.7299799929535701, 84.06523559633882, 0.598746415512005, 0.627194925819286],
            [165.1981410140972, 99.81807029764381, 0.7237106254959543, 0.7160163523748548, 91.55518425942957, 0.6009721809364852, 0.6050569559226062],
            [176.60808527233138, 104.07432448805856, 0.7212213543590267, 0.7002542758562449, 98.88692556264725, 0.6025859796278796, 0.59074415040498],
            [204.01304939639783, 108.82958290078543, 0.725357534751205, 0.6996938489844865, 104.396012704987, 0.5979067445077547, 0.5764095352288137],
        ],
        [
            [34.24249552004898, 28.382473019492988, 0.9584121049121722, 1.0609880156236748, 25.695255728216228, 1.0182152264425686, 1.070770824588884],
            [72.78585400328161, 53.36624870330653, 0.7458492493697223, 0.8789027995203347, 43.760086777211335, 0.682898158585337, 0.8431966083061122],
            [115.32931600535296, 77.2182229842497, 0.7214085626158124, 0.8017110537973541, 63.45518531909862, 0.6171060967498163, 0.7352406530676668],
            [146.68769953332549, 93.9392439049386, 0.7339228026318185, 0.7792067900654963, 77.77267126545104, 0.6116745768123962, 0.6879420476783704],
            [164.9569341899621, 106.99538521114417, 0.7171307030962668, 0.7331047455976476, 92.57246013479671, 0.5958720016464778, 0.6387860521891526],
            [190.6740882893754, 117.2617001457881, 0.7380208175433719, 0.7343249310607693, 103.24291328533927, 0.6034205871632646, 0.6174068462972172],
            [205.89395847624093, 121.97369964093494, 0.7160132226104398, 0.6948702242469998, 111.85239850804766, 0.5926214945275485, 0.5836014436470939],
            [233.614925120209, 129.22679507007544, 0.7281389739776769, 0.7017334159002768, 120.11802420705986, 0.5979758794386524, 0.5766586031207577],
        ],
        [
            [35.503228452194925, 28.099051886122634, 1.0485073226550004, 1.084016746927844, 26.34097290236843, 1.156466419589903, 1.0828722725296194],
            [75.56479047713903, 53.39524229788718, 0.767531863051232, 0.9049359373910227, 44.11805991575728, 0.7166630543236132, 0.8675888858649567],
            [123.11744389476122, 80.03359758982101, 0.7150127186237549, 0.8080967418428489, 65.22085558521309, 0.6220036711578111, 0.7456119146326666],
            [153.72120499670928, 98.87624026211587, 0.722842928385524, 0.7803496200499935, 83.00935143044374, 0.6147768002120665, 0.7050418061409626],
            [177.77081275715156, 116.11782281289373, 0.7064197269777475, 0.7334153930622833, 99.7781298457166, 0.5930650363471024, 0.6453149338733221],
            [208.57723649897443, 128.72605745161025, 0.7163307042136033, 0.7191769175654192, 114.28804813604225, 0.5988701721344813, 0.6211950424823642],
            [229.28279529899964, 142.10237068267648, 0.7277063551751288, 0.7122889814631268, 126.10806692245956, 0.5959976799407907, 0.5940543108669323],
            [257.71759513903044, 145.61879419219335, 0.7138216892959653, 0.6900186550298683, 134.18931856047178, 0.5922515960053599, 0.5714416465199255],
        ],
        [
            [37.5880783468574, 28.71737254408162, 1.2165356454890974, 1.1671344153442662, 27.414993424584825, 1.3666416127081982, 1.1551124452008994],
            [75.34086846892073, 51.72150272402235, 0.7842233591343172, 0.9104622591821268, 44.298447809995615, 0.7573662718111867, 0.8815360664908577],
            [125.53003461614252, 81.45509880363764, 0.7191718889141185, 0.8257707291546912, 67.14832754231897, 0.6404535234994626, 0.775640646399159],
            [162.03029121918965, 103.24775224775942, 0.7132003546762771, 0.7847165654658859, 86.42427774867159, 0.6165036519244473, 0.7152558934567906],
            [189.31103882111088, 123.90032463080311, 0.6921224979794253, 0.7333801751574054, 105.93399096006199, 0.588461469043805, 0.6527381717048161],
            [221.4090083795867, 140.021499355497, 0.7033246798870955, 0.7115847770968453, 121.68675700249115, 0.5890244776966592, 0.6177902935634126],
            [245.87432810580037, 151.5640870362958, 0.690706945400013, 0.6838485715826104, 135.4787048639979, 0.5798184894134418, 0.5851573953475474],
            [276.3138182059533, 159.3481122054789, 0.6887090174602164, 0.6626654354914701, 148.12978193908157, 0.585294763713114, 0.5657078496703444],
        ],
    ],
];

// @generated by examples/gen_tables.rs (50000 replications per cell)
// Null moments of the ADF t statistic for Gaussian random walks,
// indexed [deterministic][series length][augmentation lags].
// Entries are NaN where the regression is infeasible.

pub const IPS_T: [usize; 17] = [15, 20, 25, 30, 35, 40, 45, 50, 60, 70, 80, 100, 125, 150, 200, 300, 500];
pub const IPS_LAGS: usize = 13;

pub(super) const IPS_MEAN: [[[f64; 13]; 17]; 3] = [
    [
        [-0.3790050979977844, -0.3961725760892804, -0.3017273870712685, -0.33063750831439553, -0.24577249723467648, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [-0.39610627804565585, -0.40560842702341265, -0.3295883883631061, -0.34749899411018653, -0.2765514064463652, -0.2970772467452611, -0.22960956825183504, -0.25195911168427637, -0.2044808647785762, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [-0.3924045725369122, -0.4002743691561986, -0.33928320841528403, -0.349707043554863, -0.29752575431776096, -0.31094633220079326, -0.259885531978427, -0.27490197051249576, -0.22481811134717714, -0.24005483062478009, -0.19799204392923003, f64::NAN, f64::NAN],
        [-0.39049184489716826, -0.3972866992880095, -0.34848309204559935, -0.35542611142738845, -0.30821863858023807, -0.3178422244463714, -0.272676335212582, -0.28520723060091013, -0.2442751994983668, -0.2567346994793145, -0.2147609562936544, -0.22949903190289125, -0.18729779686514436],
        [-0.403506886748548, -0.40706034753290543, -0.3674582730821907, -0.37434388754866454, -0.3331952102068482, -0.34116347468845803, -0.3004204353083788, -0.3119694877605514, -0.27267794733747225, -0.28218967186231186, -0.2499675813867581, -0.26016254509975023, -0.2248547377463717],
        [-0.40799561849197097, -0.4103573670757013, -0.371163445606817, -0.37702054661445755, -0.341008270873531, -0.34741070089825304, -0.3125551495671415, -0.32117540665000316, -0.2871529249726054, -0.29876136974553347, -0.26636105828150747, -0.2753247026157519, -0.2446338942317227],
        [-0.4096930000710106, -0.4122688083763875, -0.37960551161511125, -0.38545522534363047, -0.35343260264529336, -0.35900126814249284, -0.3256828824696891, -0.3347384163851089, -0.30317621602162226, -0.31011055040982977, -0.2815810711271221, -0.29098691951285033, -0.26640971819183046],
        [-0.3990390241918548, -0.4028918162674232, -0.3739927795830475, -0.3798325735623108, -0.34893275519439054, -0.3524829843149706, -0.32530479638166426, -0.3327504036173017, -0.30590810797694207, -0.30988614453667374, -0.28413450183535915, -0.2910169934730915, -0.26416067367958984],
        [-0.41984999657044936, -0.423030910808994, -0.39678646248257093, -0.40024081048616594, -0.3733466921638352, -0.37802170617612035, -0.353264926732371, -0.3586713290849548, -0.33601778290843953, -0.34113129485450744, -0.3182805614115318, -0.32598840510574156, -0.30339668123104896],
        [-0.4096912767645253, -0.4110370852747937, -0.39128026090927603, -0.39271464165547404, -0.36963928927109174, -0.3729878957193381, -0.3525475709392907, -0.3568461061508593, -0.3359831846884403, -0.3385921601616361, -0.3184146232001975, -0.3238337490999861, -0.3044667493646181],
        [-0.41846052217227436, -0.4197924555416905, -0.4000872138311396, -0.40353655720977916, -0.3833230304816561, -0.3851447871122074, -0.3658450729651237, -0.3693439728354141, -0.3516475753965125, -0.35533391208852677, -0.3367316927435259, -0.3400701083871877, -0.3237596297881358],
        [-0.4224627345165826, -0.4230957646776709, -0.4068196224764979, -0.40837423857885746, -0.39248580295727886, -0.39427351674304206, -0.37812035127360577, -0.3794828842939721, -0.3648325138030429, -0.3669101921902573, -0.3521054348524812, -0.35450473357782136, -0.3395437425343731],
        [-0.4267315477421119, -0.42780316371406063, -0.4152286319684261, -0.4155266245787442, -0.4040154608767829, -0.40405898140201535, -0.3915349299407449, -0.39241899306390454, -0.38023289345690464, -0.38304557999048555, -0.3714637030666402, -0.3722277327036066, -0.3607629873422764],
        [-0.4190311280494738, -0.4197759058611089, -0.40850288921238537, -0.41013768723754374, -0.4003464821804405, -0.40084694501762663, -0.3914311838675078, -0.393166043790758, -0.38310280978740446, -0.38481337919896397, -0.3745825469019215, -0.37503003220369296, -0.36401732794161173],
        [-0.42536461352961674, -0.4256121378649842, -0.41760707961486637, -0.41866550408969166, -0.4105447035132, -0.41056562204864405, -0.40327061782948825, -0.40323481048699616, -0.39590821063863535, -0.3971260929325618, -0.3897334203441953, -0.39055201733417144, -0.3834861086845187],
        [-0.4282706938095159, -0.428295166865278, -0.4236516634554008, -0.4241946111497378, -0.41909029928000957, -0.41958645695162683, -0.41447255928938503, -0.41451000072294664, -0.4092892894745556, -0.4103507695017139, -0.40528295133513215, -0.40639015200687933, -0.4014490646200933],
        [-0.4172795701690668, -0.4180587519960682, -0.41460060348495165, -0.4143720200569483, -0.41062016167253734, -0.41099923401829297, -0.4078899491627121, -0.40779229116587273, -0.40445475421970856, -0.40463764588107426, -0.4012208676068201, -0.4015440987005624, -0.398880060178716],
    ],
    [
        [-1.5153879200411382, -1.5016812060831295, -1.3579861449408182, -1.317900917862425, -1.1831523363072969, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [-1.5162267451811366, -1.5085716325120393, -1.4009211438196805, -1.3716586851360881, -1.2579051331822482, -1.224955405922123, -1.1103017352062463, -1.1027967224706177, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [-1.5243926453855698, -1.5091906688640968, -1.4331623731077212, -1.4150981898665163, -1.3297075231886242, -1.3028525884281534, -1.2070700634477107, -1.1709993040644093, -1.0649362979860582, -1.0409939288362078, -1.0766018016663434, f64::NAN, f64::NAN],
        [-1.5251500872348533, -1.5202288871011758, -1.4535481657830993, -1.4367809687936963, -1.3632053263256985, -1.3421539667014726, -1.2653333822880428, -1.2399526754077663, -1.1601130617552962, -1.128801292272601, -1.043638666565332, -1.0111939997774582, -0.9526830032075715],
        [-1.5186814086131037, -1.5108120989589888, -1.457220238184038, -1.4450384266818355, -1.385456943194531, -1.3723537178096847, -1.3118081186259687, -1.2899983666525223, -1.2196796383947492, -1.1941334905535486, -1.1259953274800911, -1.0986663837568604, -1.021450552212927],
        [-1.5200849940035144, -1.514713508896876, -1.4691003425440954, -1.459709751921549, -1.4090786639604294, -1.3978280084784518, -1.3441250101382811, -1.3266211347764616, -1.266296709339892, -1.2407720869909575, -1.1803370929451389, -1.1560965069857383, -1.093465668432301],
        [-1.5210678948255514, -1.5150090811419228, -1.4730083184830556, -1.4666202915637554, -1.4246824596383312, -1.4125187157071155, -1.3651817908508301, -1.3503916047869644, -1.2990997282365342, -1.2836222464587075, -1.2306154129665026, -1.2089862758660068, -1.1551507172767501],
        [-1.5288541818637087, -1.5267410591602375, -1.4863760717640633, -1.4802020630377202, -1.4450402838700123, -1.4360420746908595, -1.3953972963601549, -1.3857861220457997, -1.3420326361375505, -1.326339949156666, -1.283133804651086, -1.2650647572097116, -1.215498371573756],
        [-1.5231750540425584, -1.5189620563291144, -1.489053777291507, -1.4859437370569353, -1.4531529048632272, -1.4482384465836926, -1.412469803525531, -1.4031453254962907, -1.3688935511166374, -1.3558211223424368, -1.3209033006109547, -1.3083718078973634, -1.2682988951148535],
        [-1.5269905259534216, -1.5252030091318616, -1.5001561803024186, -1.4977324670784076, -1.472249258909668, -1.4678485536039, -1.4397790314740662, -1.4315763906890515, -1.4035450414071493, -1.3982115214714623, -1.3665866464153202, -1.3554156687756578, -1.323309762028611],
        [-1.5250967863975582, -1.5228736306863517, -1.5020380374156148, -1.4992745381501014, -1.4776348122640914, -1.4726858312924431, -1.4478753078132467, -1.4442512636181533, -1.4163036051825797, -1.4089928107033733, -1.3833839699507855, -1.3784207571571718, -1.3519101152006885],
        [-1.5301270196982257, -1.528257147283231, -1.5117290608281602, -1.511939567265837, -1.4936426596050512, -1.4915883270426857, -1.4711296047429747, -1.4680656384287265, -1.4502722269754205, -1.4459112583758522, -1.4232024631704001, -1.4198762413830435, -1.400637765027317],
        [-1.5266768218827713, -1.5254246669344051, -1.511227058528898, -1.508753784810444, -1.4950060164343035, -1.4943843459213115, -1.4793684768901276, -1.4775318439048148, -1.4622444527245935, -1.4596005017428484, -1.4448241852103136, -1.439914636877418, -1.4244798747860157],
        [-1.5286011833876525, -1.5267201324496553, -1.516422194208864, -1.5145993166897347, -1.5027589232662868, -1.5001953361391631, -1.488734407545593, -1.4868145783784124, -1.4738837620857645, -1.4715309151171294, -1.4595690562439996, -1.4569396541518107, -1.4438923902263452],
        [-1.5356697144549374, -1.533956984426616, -1.5252523839565666, -1.5247716562995106, -1.516342545629921, -1.5152640221473037, -1.507439336787762, -1.5064056193885678, -1.497561363627328, -1.4957506877569604, -1.4861803912504439, -1.4843047917260905, -1.4748331490065631],
        [-1.5295285078454608, -1.5300088186246492, -1.5248837756505964, -1.5246170086775903, -1.5181038560311846, -1.5167677796592491, -1.5111271524294143, -1.509867420621495, -1.5033141754509232, -1.5019830727169297, -1.4952883935403931, -1.4942230425854033, -1.4877556642948215],
        [-1.5376349296194936, -1.5373070519110386, -1.5340928458062129, -1.5334560382049325, -1.5303046212586897, -1.5301629843849425, -1.527169227562832, -1.526733018801645, -1.5234142068281473, -1.5230039815032625, -1.5201411959026714, -1.5196628412193605, -1.5154429403746175],
    ],
    [
        [-2.1608721137030584, -2.160901356247254, -1.9461016288569828, -1.9164229513687885, -1.7393062213889645, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [-2.1582531482897314, -2.162860081266011, -2.0183443482892507, -1.9856082913203912, -1.8210563907121546, -1.7867656395983218, -1.6342179436405733, -1.8699344843861108, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [-2.1655290926689834, -2.1674025579742104, -2.0603560963091163, -2.0404585545252356, -1.906211662716933, -1.8714411109563531, -1.7318521624489467, -1.6813255418234252, -1.5488342255916974, -1.5833920932864889, f64::NAN, f64::NAN, f64::NAN],
        [-2.173607314053554, -2.1738811044498716, -2.0915830359976306, -2.0733969605103257, -1.9773339117341557, -1.9500908822588996, -1.8389166778309078, -1.8059715240881213, -1.6857162639561607, -1.6387543870193249, -1.5175237496676768, -1.4999496554844072, -1.577248038594831],
        [-2.169989243862664, -2.172742207163281, -2.1024416759819964, -2.0938980160278144, -2.011321459734518, -1.9908561419211834, -1.9005544052744474, -1.8731771743444412, -1.7743465052605591, -1.7426416210150908, -1.6400558041594422, -1.5994047571671497, -1.4930061995438486],
        [-2.1740829345707944, -2.1761519339980544, -2.1136749233804824, -2.1062262669302405, -2.0369301563139643, -2.0215413700477916, -1.9444162909054024, -1.9219346404578526, -1.8418315659124398, -1.8136722821268503, -1.726349156100711, -1.6914570019785093, -1.6042048362443833],
        [-2.171401977179536, -2.1717372265663784, -2.1175949966329046, -2.1157004751806605, -2.055089365629239, -2.040966404510932, -1.9734617385980084, -1.9600336091076371, -1.890737458063781, -1.8680541516256275, -1.7933476479034278, -1.7647852559882562, -1.6855846242302968],
        [-2.1784732884540077, -2.180110041543444, -2.1302803667128694, -2.1292002689769745, -2.074506105192924, -2.06260575735809, -2.007083537066629, -1.994556600688244, -1.9361709081823253, -1.9192260450596748, -1.853758517147748, -1.8285207073931882, -1.7578274521363177],
        [-2.1817326687560468, -2.1820199620351612, -2.1440562030029797, -2.145968327283835, -2.10155449030643, -2.097272596818727, -2.0518525405443446, -2.0427852152820023, -1.9947165143836796, -1.9824184948018733, -1.9288777947511448, -1.9111127835506752, -1.856003111372317],
        [-2.177957396953031, -2.178800223238927, -2.147703720093592, -2.148325196445315, -2.1102471536734435, -2.105918718409855, -2.066936031151442, -2.061964363113903, -2.022267623973074, -2.012814002979765, -1.968482965581009, -1.9570912375384413, -1.9126848341608993],
        [-2.1766268036323746, -2.179353930870521, -2.1477054378460423, -2.1482176493453347, -2.11783443783249, -2.114230280722054, -2.0813348616766714, -2.0779678452371555, -2.046245670834632, -2.0402371647769413, -2.003946935788557, -1.9960961548623353, -1.9590107747351446],
        [-2.177312176985816, -2.1770877101557446, -2.1547067905218786, -2.1539961956647584, -2.1330783342941313, -2.133910668159746, -2.1106724271753636, -2.1075319665845464, -2.0815118579977714, -2.0768428753099157, -2.050393236203382, -2.0453196180202964, -2.0194183915662505],
        [-2.172523394731354, -2.1740605338049726, -2.1547442977195, -2.1572186477628263, -2.1396168138623897, -2.1401656650157013, -2.121266223457339, -2.119103054020716, -2.0998289140408035, -2.097905852972459, -2.0773690554282918, -2.0728727177332402, -2.0497484056176325],
        [-2.179369667407831, -2.1809695126846336, -2.1655183507513303, -2.167405663862787, -2.1527117942283533, -2.152274827444426, -2.135283234580478, -2.1343724647336053, -2.1189601966079623, -2.1167806222603067, -2.100611449449065, -2.100121758688555, -2.0828891046845963],
        [-2.1773028799562533, -2.1787254085733596, -2.1678459987670164, -2.167740135132456, -2.1570351396584773, -2.1568916118802917, -2.1451781072088445, -2.1449824146586534, -2.1351501432862423, -2.1345281343215547, -2.1221374461325975, -2.1212386009981214, -2.108736348525446],
        [-2.1846728541077267, -2.1846542739540875, -2.1774090984775194, -2.1787607844943793, -2.1724442471538876, -2.1727851466307095, -2.1655120796333662, -2.1653219256420906, -2.157727250009171, -2.157866453263206, -2.1497366155941275, -2.1507011477562967, -2.1423701119143237],
        [-2.182319015503316, -2.182773663844289, -2.1791191410769524, -2.1786251459873203, -2.172773070921549, -2.1717376646869178, -2.1674302565977777, -2.1667904755774154, -2.1628672108368865, -2.1624552072997028, -2.1570685930088853, -2.1570221926820796, -2.1514644505825897],
    ],
];

pub(super) const IPS_VAR: [[[f64; 13]; 17]; 3] = [
    [
        [1.0607062513262722, 1.0867365331941938, 1.1197415066029215, 1.183317438441544, 1.3773300167933595, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [1.0180612187689881, 1.0223444208947354, 1.033644178505949, 1.0535349081519823, 1.1048089385704296, 1.1752617389354147, 1.2785998738284954, 1.5664753448772168, 6.003068277527633, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [1.024944956545539, 1.022372476164653, 1.025368723459302, 1.0292215989278404, 1.0488868008441714, 1.0711263731854037, 1.1147417929883476, 1.1606401544332465, 1.2465488096862476, 1.4208464751181187, 2.1452280661938095, f64::NAN, f64::NAN],
        [1.010488916718895, 1.009515049257789, 1.0103396878844546, 1.0156025924346275, 1.0192370657219125, 1.0222890970214853, 1.0344321938042191, 1.0611544133918018, 1.0991532926129277, 1.1479509475611533, 1.213320591061963, 1.336539889594718, 1.654088789304071],
        [1.0032866401279, 1.0015044119728924, 0.9995192256069286, 1.0026208829488872, 1.0069365588207624, 1.006741560821289, 1.0152025703353338, 1.032059522795993, 1.0526800889565135, 1.0731086763480655, 1.1046774676960445, 1.1403961692994131, 1.1997600791726715],
        [0.9979521090337995, 0.9957404889924677, 0.9961862664737995, 1.0005161811194219, 1.0031671506635425, 1.0101746134890968, 1.0213526709747422, 1.0265149395585147, 1.037230349929997, 1.0442728455350618, 1.060664785822038, 1.0888475853247965, 1.1185758456516322],
        [0.9904635425417899, 0.9920205054744943, 0.9957521204736688, 0.9864127045648929, 0.9870168906319685, 0.9870306271912115, 0.9952565413603528, 0.9960988156262415, 1.008728948748916, 1.019278321605218, 1.0235717927735073, 1.041842832488365, 1.0596126523664309],
        [0.9879287940365452, 0.9863797316969236, 0.9836382805140086, 0.9791629358862584, 0.9814283790506659, 0.9817233474231778, 0.9938231794966215, 0.9928304879157867, 1.0012357672499452, 1.0087902169858616, 1.0150245786896734, 1.0242275409132828, 1.0328353710425546],
        [0.9886074821902676, 0.9897671815778283, 0.9918256260725294, 0.9917751001451378, 0.9963237336169755, 0.9940761418845567, 0.9911286119128857, 0.9918817033178056, 0.9951726614569874, 0.9934304939929516, 0.9975987139144794, 1.0020697130024099, 1.006777365535663],
        [0.9772957232128414, 0.9774263936683912, 0.9737803051778808, 0.9744103750438622, 0.9764241198670001, 0.979268430690381, 0.9812772327299208, 0.9784996519144316, 0.9785038264237679, 0.9751742754353382, 0.9831946543626722, 0.9889834072801057, 0.9907499428645793],
        [0.9740389363140003, 0.975234756782969, 0.9792552220154145, 0.97527193781248, 0.9784120727697758, 0.9784605420577268, 0.9799130243483756, 0.9781672640255864, 0.982604168266375, 0.9805096703732333, 0.9836573146409888, 0.9846397585838219, 0.9877425448116611],
        [0.9777991968144438, 0.9807983564111727, 0.9817346759927901, 0.9807224742256828, 0.9826523016460671, 0.9810969305295415, 0.9795641717172029, 0.9829149785849446, 0.9849616407366777, 0.9845836005955717, 0.9864908023071095, 0.9849494624472611, 0.9865023116463997],
        [0.9770918713695691, 0.9786843183934913, 0.980991297251172, 0.9800630715291376, 0.9785008902273432, 0.9769212880612673, 0.9746391097236696, 0.9726797973580746, 0.9756767806546203, 0.9768929606639497, 0.9796981061914285, 0.9789582012736534, 0.9761269185151152],
        [0.9709198850113059, 0.9729861300733983, 0.9741409499138766, 0.976885695276053, 0.9783028349111395, 0.9807774372863006, 0.9805124922331268, 0.9826137564644334, 0.9823805982428483, 0.982871054127258, 0.9836598929669409, 0.9792790395864944, 0.9773680010174107],
        [0.9672953683100615, 0.9697209971805878, 0.9714193254587474, 0.9700618274091478, 0.9697965109408301, 0.9713414214117015, 0.9728229288030817, 0.9741246430325989, 0.9744678041135321, 0.9732072809425623, 0.9731214438872634, 0.9742656870223634, 0.9749191054517558],
        [0.962325840116503, 0.9624344242241892, 0.9620820163694461, 0.9649639189117984, 0.9677762711656482, 0.967709405308924, 0.969421675815695, 0.9705739360089448, 0.9691558578313039, 0.9663692888929156, 0.9675633887327751, 0.9682211754188333, 0.9673060086687986],
        [0.9633617019607909, 0.9646924336084532, 0.9645557101575979, 0.9649787540944503, 0.965142568253051, 0.9643652701129682, 0.9645048185739069, 0.9633065648561612, 0.9638269343786473, 0.963133988263581, 0.9639940366091581, 0.963347644414763, 0.9633364484478666],
    ],
    [
        [0.9327179475027166, 1.0561938682463685, 1.228286109524278, 1.5038036084021509, 2.091134166235396, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [0.8688718432507094, 0.9438945971733262, 1.033066307382412, 1.1521669027397823, 1.2936503719919614, 1.501379447464485, 1.830774012138551, 3.316284630764934, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [0.8158672637116859, 0.8594917702431588, 0.9272306677074899, 0.9988147552805855, 1.0806604170026481, 1.1925704667159354, 1.3097741340455338, 1.4867027178674173, 1.7170056931938515, 2.308876382935539, 10.753986302890562, f64::NAN, f64::NAN],
        [0.7986560493259658, 0.8405345812690044, 0.8847637174850012, 0.9446889689082302, 0.9976416273221278, 1.0699102372127738, 1.144791743897496, 1.240970549302694, 1.3407648637346472, 1.4822924054551272, 1.6560546858509297, 1.9701497336507472, 3.9639116338205116],
        [0.7904701338461185, 0.8275920894217207, 0.862871920127871, 0.903804472857188, 0.948231159938601, 0.9999773488153312, 1.0591857562189042, 1.121075943575361, 1.1901749319487145, 1.2734411488367887, 1.364105385098913, 1.4906386972612553, 1.6193549517782908],
        [0.7728708320194377, 0.7985289000333106, 0.8338033298246259, 0.8707907697696289, 0.9170898307878524, 0.9568554644669356, 1.0028213340456649, 1.05871553014811, 1.1074961253658424, 1.1609540099471922, 1.224067215188058, 1.2961919240534077, 1.3714243558747332],
        [0.7679268086038883, 0.7940170105234571, 0.8259783707564552, 0.8513287936098111, 0.8909384695517664, 0.9281607637363807, 0.9667241645567121, 1.0034607614201165, 1.0437278481031087, 1.08987270673759, 1.1379967935878796, 1.1919027967392353, 1.2481224394824637],
        [0.7585295199377589, 0.783145930169551, 0.804054825606388, 0.8218861213948957, 0.8553852665283384, 0.8864844095410275, 0.9203172441099661, 0.9538984744430009, 0.9860982631024163, 1.0262728705642332, 1.0650763932608316, 1.1067258573742882, 1.153840092534713],
        [0.7502666691122298, 0.7658310581954569, 0.7881427268836105, 0.81398629334474, 0.8382062908957417, 0.8631678674219729, 0.8868994763830729, 0.9108791084966652, 0.9396874421482786, 0.9670756261533794, 0.9986968769069714, 1.0312496147374146, 1.0625787292530722],
        [0.7547305836930824, 0.7669893182552808, 0.7796144899252591, 0.7992123584698481, 0.8155012689353047, 0.8357175320177292, 0.8537523718796031, 0.871304513566753, 0.894633227951423, 0.9221734332570208, 0.9414931323300267, 0.9630061808371965, 0.9906273635871812],
        [0.7473410699214047, 0.7646097282442696, 0.7806718915789886, 0.7928545232356313, 0.8108506642482657, 0.8240559165181646, 0.8373189918710565, 0.8574703385717855, 0.8726371549989034, 0.8898086928097874, 0.9081958266152417, 0.928339682865052, 0.95183916424564],
        [0.7401271181496512, 0.7519399216030312, 0.7592374265002853, 0.7714250648852589, 0.7837594598181596, 0.7949006480934503, 0.8128980650177318, 0.823391207475695, 0.8383328998404902, 0.8514301018481217, 0.8652895861480423, 0.8820576192960341, 0.8959766751463706],
        [0.7355327043596555, 0.7443692271000413, 0.7546728828389614, 0.7647845225667907, 0.7757975970306152, 0.7857804077129221, 0.7940711586011284, 0.8039698185550742, 0.8113661774149081, 0.8208514274016845, 0.8332446348388635, 0.8437249130635165, 0.853084623800711],
        [0.7233870594922288, 0.7317477434864608, 0.7390363397602216, 0.748518001690987, 0.7580189502055985, 0.7661176064056212, 0.7735750561563892, 0.7844309543943528, 0.7908348713275496, 0.7972453608592116, 0.8082069822888818, 0.8159606330015372, 0.8227915510052908],
        [0.7161827838938641, 0.7174119255332541, 0.7227168064787094, 0.727861126072716, 0.7322296324421753, 0.7370419758980068, 0.74305685471336, 0.7502456991521966, 0.7559657550909912, 0.7600736265418356, 0.7648627085951681, 0.7684599369104672, 0.7762680458725753],
        [0.7057556180799377, 0.7083686489751987, 0.7140099886228377, 0.7177229118255962, 0.7230469172657256, 0.7267270879589929, 0.7311614503020315, 0.7350383227340614, 0.7387394076611659, 0.7434099522944324, 0.7495636900764241, 0.7531303373429555, 0.7566069843555169],
        [0.7108259363733812, 0.7121524213932903, 0.7157065646890817, 0.7172498702001474, 0.7193720623911618, 0.72112083110931, 0.7235570607441041, 0.7251841342684721, 0.7293440619388833, 0.7312812366764915, 0.7345442171745507, 0.7356105354610715, 0.7369370701156669],
    ],
    [
        [0.899652252249386, 1.0932335342464776, 1.2711731100148709, 1.9365889886416612, 3.67075484073879, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [0.7918555284642294, 0.9017721094105317, 0.9748447081955304, 1.156482720029463, 1.338519082396399, 1.7528359828818436, 2.4158366972290377, 13.497843358811204, f64::NAN, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
        [0.7347866618359243, 0.7981831935530292, 0.8547272516600897, 0.9708319507545173, 1.0631116655427182, 1.2257050414540385, 1.3774626742298175, 1.6871851686865316, 2.0943357437402605, 4.2321363323343855, f64::NAN, f64::NAN, f64::NAN],
        [0.6895421537322319, 0.7385237287098162, 0.7769351681192888, 0.8457421426449045, 0.9160737246787153, 1.026765218735664, 1.1291142094742985, 1.297912954624607, 1.423962029702682, 1.6330568682742377, 1.9264779470080098, 2.6989556139962683, 12.871803066280012],
        [0.6717534735245335, 0.7108391547995182, 0.7413801757010918, 0.7947900381560915, 0.8430477488606737, 0.9184526200798921, 0.9800980214108425, 1.0882549239501413, 1.186728168310645, 1.3129143709524604, 1.4316157814535573, 1.6276810047083927, 1.8435239161380361],
        [0.6523569072351733, 0.6913241127392131, 0.7081332297786467, 0.7517464497345869, 0.7919612667168459, 0.8452154454235855, 0.9057849258025262, 0.97563645057966, 1.0459905884390122, 1.1484612621583268, 1.2304602984076636, 1.347786944029025, 1.4632231289931124],
        [0.6417813835443391, 0.6676369129798547, 0.6880954018629004, 0.7248561426894687, 0.756196323617947, 0.8022024110315115, 0.8345698487340752, 0.8968336130704677, 0.9478331378444176, 1.020652517364493, 1.0846380043925081, 1.1760534993884102, 1.265371256139153],
        [0.6429857940750212, 0.6704766157642472, 0.67944922256806, 0.7039709306436881, 0.7313541176958583, 0.7629936891685715, 0.7988788593524057, 0.8401269248860437, 0.8780069312157099, 0.9321007137157641, 0.9901731825610288, 1.0635823487810414, 1.125845813489171],
        [0.6217380492394167, 0.6329262289375143, 0.6478568434950541, 0.6718762803154523, 0.6928354606227839, 0.7225107417457682, 0.7496579281723029, 0.7742684397155893, 0.8081034278722002, 0.8490873160165823, 0.8844548483992766, 0.927369187426167, 0.96862150741829],
        [0.6202147360797752, 0.6305607641807821, 0.641969306483899, 0.6648312460730357, 0.6771278543140182, 0.6952012056614018, 0.7097983072642186, 0.7351777113578388, 0.7570509288103681, 0.7877259957420895, 0.8130980375973056, 0.845421175697725, 0.8812290873880632],
        [0.599827477671957, 0.613256579148519, 0.6201317066094885, 0.6358889330119275, 0.6464545094773083, 0.6682045766281837, 0.6816670747627404, 0.7057109802767069, 0.7250450106865978, 0.7477417477891917, 0.7692454256200358, 0.7919087522371714, 0.8204018838490247],
        [0.5918068590277812, 0.5986876008608281, 0.6042873117343622, 0.6113971655569467, 0.6232149782119321, 0.6332795207898201, 0.6480664999021055, 0.6597518606207884, 0.6737191913947248, 0.6910047216108108, 0.7041266854338014, 0.7202365690756574, 0.7401454193814333],
        [0.5934572844941635, 0.6013789194578637, 0.6041911175786574, 0.6115361805635884, 0.6172829800312624, 0.6285453991566834, 0.6376170996666535, 0.6471639566202961, 0.6585573101584229, 0.6708862821872065, 0.6791526593018251, 0.6903075809059799, 0.6971382694564794],
        [0.5837185975380182, 0.5876092427983826, 0.5907634116866258, 0.59979577443453, 0.6033973592384593, 0.6117912195940446, 0.616067896923536, 0.6247339199660712, 0.6305681109794967, 0.6384655433703658, 0.6490830103828118, 0.6605567698822971, 0.6676545478593116],
        [0.5836145257867321, 0.5888714392424972, 0.594095866587352, 0.5982998672002147, 0.6014216150152304, 0.6052742988894874, 0.607397302320832, 0.6109287386552622, 0.6160717170189487, 0.618823399552397, 0.621913464523638, 0.6274683571864693, 0.6302703316905722],
        [0.5750297375355762, 0.5770968159289663, 0.577597975989926, 0.5781914447813955, 0.5806873934626599, 0.5822377040921229, 0.584734128275018, 0.589530953131335, 0.591923228822205, 0.5927672387878581, 0.5955907530126164, 0.5991605642799002, 0.603441518942417],
        [0.5699725636178101, 0.5707865606833116, 0.5721921348970039, 0.5731569211941935, 0.5747695166799873, 0.5753203561274121, 0.5765715162990622, 0.5778504136521303, 0.5780608420951039, 0.5789871835640863, 0.5788327906893831, 0.5798520881876661, 0.5802906127868046],
    ],
];

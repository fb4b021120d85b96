#pragma once

// Generated by generate_reference.py (mpmath, 50 digits). Do not edit.

namespace oracle {

struct ZetaRef {
  double sigma, t;
  const char* re; const char* im;
  const char* d_re; const char* d_im;
};

inline constexpr ZetaRef kGrid[] = {
    {-1.5, 0.25, "-0.02164473709961147042147027618233888800143", "-0.01865884847400120143160416419102754754156", "-0.07131890066919444322331230101178666679966", "-0.03041224348366463177960226825237842941647"},
    {-1.5, 0.43938196722020506, "-0.01386845837343516053351444149072615547767", "-0.03130049955784519236877439602684651989378", "-0.06138013844259436167079418508565121637346", "-0.05125515669089912719129833202832353277363"},
    {-1.5, 0.7722260524731894, "0.008234639809135642146539494122729414458118", "-0.04750061162040723771110117744920811397018", "-0.03433045702139151559697048823972992581217", "-0.07954019499916210373549424542347292367641"},
    {-1.5, 1.3572088082974532, "0.06228421635602714863587546111373979697625", "-0.05046916547846391940355812061548134750115", "0.02459807498186411509735613333652489124159", "-0.09920441392057290643041501543175784825851"},
    {-1.5, 2.385332304473301, "0.1570516708563062080199211686239886257951", "0.02064846077073994293368960492747879740136", "0.1069870166095427419373655989630560497138", "-0.07979166596015157578327277048280993623073"},
    {-1.5, 4.192288001653537, "0.275886648070764982237490731865406205029", "0.3000869456205108198384221919355868704403", "0.1999997250507549075135446920615804568213", "-0.06853505520684011896297778213695203959161"},
    {-1.5, 7.368062997280772, "0.9869272517713061286281775755734225600825", "1.105113282795646971270258355370283086161", "0.2071270798179763448467391941054991846232", "-0.5099155348634180734357384826407178143237"},
    {-1.5, 12.949576057390507, "-0.1656732341944618546512702936762996460089", "-3.66265913530734326779713876581437545733", "0.07454609997508476870352974755532744574413", "3.054372795583547720786286124103641410057"},
    {-1.5, 22.759240811055626, "10.07020691351629480201288879841655483522", "6.716081889275467851000087311604972600374", "-12.23852727456681244448851677940381685841", "-9.965830732590920102382764590651722499307"},
    {-1.5, 40.0, "-4.305763532490101250074111564397087295541", "-37.0867430620562528234317861275582981597", "9.622251956472245867136172810929843892899", "69.61330819830096708967053227147738087472"},
    {-1.0, 0.25, "-0.07563422766034628987797187733328704988657", "-0.04037412477863030417014836153951186448295", "-0.1537654785063439670333786409859273654694", "-0.06064938258521564745008486041068320281483"},
    {-1.0, 0.43938196722020506, "-0.06028870219616751881837402701721307572665", "-0.06751893262747457653122231637272552045847", "-0.1312208285048685193513894220403997837231", "-0.1000889519562562569573625865694290184071"},
    {-1.0, 0.7722260524731894, "-0.01836407420383937499145348969408153681588", "-0.1021145105054555518658643444051000630681", "-0.07426929883186088713179427769215939911894", "-0.1465664370754311261701374746918435275621"},
    {-1.0, 1.3572088082974532, "0.07487864713453798177298686085063250395999", "-0.1143466032296930983257942975558974295617", "0.02844056839606202072439499783612804187385", "-0.1604627856051481690467524025875938267132"},
    {-1.0, 2.385332304473301, "0.2147123090990700451706254197292268276658", "-0.0267226604307096562952383008859256332612", "0.125317786241187470004112327120059749074", "-0.1089971008916569007730231025920760534156"},
    {-1.0, 4.192288001653537, "0.3724467262567263462006497083377917263532", "0.2603764964668376575750182778927215827892", "0.1862292781164446854395593036249480628314", "-0.08832558791578964293661131517358270874329"},
    {-1.0, 7.368062997280772, "1.062675517031824382585429868625056029758", "0.8705758991659746282519965197060643796925", "0.1033780583466061667506780633831169068459", "-0.4280097544903518928674346892335061810981"},
    {-1.0, 12.949576057390507, "-0.05646748916178614612798616158181556472949", "-2.406659681961623162009749304000855780191", "0.3191657412651020841349728620412269667755", "2.033613607481538367887702857601688056357"},
    {-1.0, 22.759240811055626, "5.534982771215272325996044566453389627221", "3.205511093269337408245982545387859966396", "-6.474511289571372011999132819899865481015", "-4.723090719908793894161693690950066805247"},
    {-1.0, 40.0, "-1.098186088295518078924050934406202623347", "-14.57305356668125489935524844398914980119", "3.946897137703434139377384226504158526623", "27.05378024231263172490945141260257426973"},
    {-0.5, 0.25, "-0.1897540948186729606412606784798665885934", "-0.08719451945116330710266496141234788356811", "-0.3252748298399070406345746174721372964811", "-0.1411650084221099410197339262885009155308"},
    {-0.5, 0.43938196722020506, "-0.1548490202702985865786738851675766936288", "-0.1430340685931493101639688264754798153775", "-0.2604458753513538747135755698930031358974", "-0.2224882441903767653207242349891959062151"},
    {-0.5, 0.7722260524731894, "-0.06708604101497159521877996195495331540847", "-0.2062810506723808754407878412597448100414", "-0.1186820706245221106615170560437130138461", "-0.2889850549272587110684357975854944833119"},
    {-0.5, 1.3572088082974532, "0.09598113133736560518107910169519978029324", "-0.2156419627107705305212490166953813192156", "0.0649454885512913058393453126565267837903", "-0.2493484530531734316253837712830944476826"},
    {-0.5, 2.385332304473301, "0.2844395785984132433834994000118007030299", "-0.08694857388011971617460842123526679523143", "0.1559157903565341818279464391646843552928", "-0.1295838394824928872758277455875576045787"},
    {-0.5, 4.192288001653537, "0.4622141584852626643277544712844873850584", "0.2136645861971005194220321529713967335815", "0.1729925156267304604657036237958653286976", "-0.09671206913982021871400682333850867375736"},
    {-0.5, 7.368062997280772, "1.096727955731531471510615058194051660763", "0.6765672902990977018324061183415446352136", "0.03823747797032472372928169337107626449851", "-0.3491307279991713334277705958060273746028"},
    {-0.5, 12.949576057390507, "0.1230383156251890504501090769755582105546", "-1.574601112923512835005919751988794891774", "0.3783381752903288309416666494569422548603", "1.340328919134437325850346075689521658482"},
    {-0.5, 22.759240811055626, "3.161820323287382705069793821462736812496", "1.541026455230755296904839584500041724193", "-3.340121939396022284388517439871542867934", "-2.241794847724387347513432125418578847393"},
    {-0.5, 40.0, "0.1706070745578407351872082763724001143415", "-5.816616681681106596865213517338111845898", "1.488175624468632037699606702818230670107", "10.54159858597924702347337740603063539384"},
    {0.0, 0.25, "-0.4409773595371916273090625411808457756088", "-0.2150164841902247506137122414068532142642", "-0.7492411744262647493773581449796439328672", "-0.4445032397739061144175700273403322795588"},
    {0.0, 0.43938196722020506, "-0.337565176503349108169828281008793796357", "-0.3325990915975352143775250743794927965967", "-0.4854032422390858592842888448774130221744", "-0.6202106335455072443997726673482611387445"},
    {0.0, 0.7722260524731894, "-0.1244972021560764984286562562485190248751", "-0.4207911532467886223399769745096374737624", "-0.07594516934758535689329021667715371573574", "-0.6112095546777281537464609664116899071077"},
    {0.0, 1.3572088082974532, "0.1544090140302210559223833492215259931288", "-0.3655815325405734571333744020435050228116", "0.1896079773039734454675478146617893038748", "-0.3459349043906773691194133705089603433419"},
    {0.0, 2.385332304473301, "0.3727427311848606154439133696882407658274", "-0.1527728721473987084948579185464359751731", "0.1987166439192357491826476426205576672968", "-0.1288923017625743042609984779618331581565"},
    {0.0, 4.192288001653537, "0.5455713164436857739379903252366031301229", "0.1653529814485945704840123333993236808695", "0.1605084123578676337922257353461099613951", "-0.09499055133865244519320799367700955717332"},
    {0.0, 7.368062997280772, "1.105423531621145885840735893304779294026", "0.5199949474720633697943312055113304499196", "0.0002444427781152385499293801953801139371923", "-0.2788373837454505829754386264727052265732"},
    {0.0, 12.949576057390507, "0.3081564089130188722382130931840082446149", "-1.028088164268834142871954202208748402549", "0.3536549596925282873600255589778518734227", "0.8773316552607532486652769647491837865101"},
    {0.0, 22.759240811055626, "1.953427442241096217090922581378177735186", "0.7496152448747257446259136202997115100975", "-1.670547233055139109700599322768086349425", "-1.068960023530015441718730494074817512131"},
    {0.0, 40.0, "0.6337972539673052732833759304449578202842", "-2.394846950499271906182863389810039710665", "0.5210196751786543315077833025943324901124", "4.141563236447822925928052024171876808611"},
    {0.5, 0.25, "-1.060092915695705023575917318444978465941", "-0.7806529218726466186593618498830225276839", "-1.842542823295228410665875947036638947062", "-2.562096237820474540188554202423771633807"},
    {0.5, 0.43938196722020506, "-0.5880678597551056187878924672462497095273", "-0.9576717781367876459006597312421074426101", "-0.2124130002238569054457997971527372337823", "-2.242039181839991695241884938903760008003"},
    {0.5, 0.7722260524731894, "-0.04860680540326119078150133898269150663801", "-0.8524502634275882983166562599155117357868", "0.561848007471174014287919196096537203083", "-1.084767345211128143418255482589618655161"},
    {0.5, 1.3572088082974532, "0.3087220027359626509599812561230233510838", "-0.5424165405772909079816019512341234052018", "0.4440727654065029438297931872275744158614", "-0.3225900994497117387661872617254062331919"},
    {0.5, 2.385332304473301, "0.4829885616529520147450802515073893475494", "-0.2100320964145593105279235441855673972222", "0.2399599427337029397599304699210377689755", "-0.0939258126546015240319834170910366682461"},
    {0.5, 4.192288001653537, "0.6226954118395228450814908078026250148123", "0.1200323343478301462101778143743353256311", "0.1478505660934005506868196834680389096387", "-0.08514799115715104323641845213052653158158"},
    {0.5, 7.368062997280772, "1.099985106808245240095301624338215892002", "0.3959541362282295599163718084025362307751", "-0.01959373166949103293859485179713020124698", "-0.2191344568290750213711637517781421763544"},
    {0.5, 12.949576057390507, "0.4716754646981545449011243615964136252094", "-0.6711335809267438859746865466642051329193", "0.2979925920331444527896643629137225678749", "0.5718493764543425972139364487724901685713"},
    {0.5, 22.759240811055626, "1.359709431099133333459848314331116821267", "0.370977900361733753834147744275695655724", "-0.7998698160097910733610484043653311461434", "-0.5140295160292226979144831435480338096183"},
    {0.5, 40.0, "0.7930449525619286719648925888979369608057", "-1.041274614651065020051890595391055431328", "0.1777507723782887909734019225851668987186", "1.658050419090052770656029935990218579848"},
    {1.0, 0.25, "0.5775188673103404807472807562700784643886", "-3.98179069656441555752577830130111526914", "16.07287989850881367460443642196268084597", "-0.002428648388273717353106201329569653416432"},
    {1.0, 0.43938196722020506, "0.578154672325093792308613985275058130963", "-2.243901183993366035533553306667379039486", "5.252843284234637665402489819543289067198", "-0.004290678338501713800599184186017391147252"},
    {1.0, 0.7722260524731894, "0.5801395316701687063752502862270413330403", "-1.238571512287472389714522389834685373376", "1.750331520804343581746875844970828853181", "-0.007662159508801955583692654450857184988168"},
    {1.0, 1.3572088082974532, "0.58647128795948968585411614027107078969", "-0.637155558350925163271223650786099051512", "0.6174742438297588069856468977770702851003", "-0.01412931196795145477078834192326710095431"},
    {1.0, 2.385332304473301, "0.6079721607305202912906328226903911679848", "-0.2414491642070271606119842858981918423559", "0.2532079106225076251076098273628797870477", "-0.02849636075046532864730907057542696381714"},
    {1.0, 4.192288001653537, "0.693183225804363001494050668029815454287", "0.08109653988716989525009004811828905093655", "0.1337823465886491897875176425512641402838", "-0.06997403770668621156950887503592354688504"},
    {1.0, 7.368062997280772, "1.087734753458510631376711721619943540289", "0.2990881469190043833999086812680379258866", "-0.02793646584463239027742617553156786912639", "-0.1700342942805762614723548195917280151454"},
    {1.0, 12.949576057390507, "0.6053430393498350652037794252905782659851", "-0.4387239053678494082538692175540435822632", "0.2370299406195504431042393252250811004058", "0.3719906277887270014905435563817461096988"},
    {1.0, 22.759240811055626, "1.083176597297214308588823255199438846464", "0.1879260997261006213162842758253891175763", "-0.3568887137886853299785297428243862298704", "-0.2504455679501536500225229200250937021971"},
    {1.0, 40.0, "0.8497954792468067556329238958402008726903", "-0.4917762864607186887525844260441080886019", "0.07114544111167703557180113784634226108343", "0.6888486733182176473584652286914537560138"},
    {1.5, 0.25, "2.212702022791047340084858909368044608311", "-0.7830573527527516885375922070713308591166", "-1.852208813839061270411517596485892047136", "2.557384121457831790813843347409450081933"},
    {1.5, 0.43938196722020506, "1.741910625348910510804133603119955405893", "-0.9619197984502242593061170444327414050761", "-0.2222304743646259163968237201333398544734", "2.233713561280998407303228494667772950793"},
    {1.5, 0.7722260524731894, "1.206301531530694116062250951672982523006", "-0.8600369545156740862699989706660999084025", "0.5515604307053186883349379536999923357045", "1.069895502749324055458540323676378460384"},
    {1.5, 1.3572088082974532, "0.8612678940133907592440699916939897716959", "-0.5564108739783391100220827180004537831517", "0.4323140401873334048070826262500768583613", "0.2951409794833821714241783873679002058146"},
    {1.5, 2.385332304473301, "0.7288355373440498363186381549416929637259", "-0.238284798572584165138442638850405813683", "0.2235311001308294901043799637245866210917", "0.03839572834047582627762384149783726148415"},
    {1.5, 4.192288001653537, "0.7561286021837717697077253796639649337993", "0.05040111947722858199676894115153404072548", "0.1176576133149110701395824322659985389261", "-0.05273361543601567804874548172554888119622"},
    {1.5, 7.368062997280772, "1.073173814948797328274998308738127677403", "0.224313122286668771298019701063966305331", "-0.02947691203414840032420715732450766091877", "-0.130562701102579286996197280205750640861"},
    {1.5, 12.949576057390507, "0.7097134516028450501022911902864871399786", "-0.2875701769382543820071027086889182559869", "0.1818813051539643888866840106244766462013", "0.2419537136615503936917389551296465466801"},
    {1.5, 22.759240811055626, "0.9658479225810099491987502950122424648944", "0.09804656513089068641810840408691359124394", "-0.1387501684607018400338265151875162568838", "-0.1243173501915232476575304628519609239914"},
    {1.5, 40.0, "0.8769085364699138743125540668485002281633", "-0.2577122734439876201737933633138480328296", "0.04389919617361452219099810646111065971731", "0.3050318713744836881309943143281691690407"},
    {2.0, 0.25, "1.58644577199829574923052105948055763532", "-0.2196808082421805213634537508669210959028", "-0.767993659208882745303561217076019453516", "0.4402227631702741679032253318638989194199"},
    {2.0, 0.43938196722020506, "1.484154396253635196158411797540868982042", "-0.3408404910340893871460412048391830655051", "-0.5044545620917297926577067692395045041195", "0.6126455712094160802843375617749449048619"},
    {2.0, 0.7722260524731894, "1.274588011437175199982110160290909632438", "-0.4355137921542844504174811009656149249711", "-0.09592470460995438233087141029079358226915", "0.597684595043893005539520622047181240974"},
    {2.0, 1.3572088082974532, "1.006878974665486932034122512330554095724", "-0.3927626558446185568433697410613725650078", "0.1667155328683853442348410961997543895633", "0.3209022470662493854380287408543919552067"},
    {2.0, 2.385332304473301, "0.8268783643103410104288611744423028410106", "-0.207812474490963999341347519848649396659", "0.1664946502996596263092375642588081349047", "0.0777685032586724680505330558097039585553"},
    {2.0, 4.192288001653537, "0.8105618338610036980600149109713337056433", "0.02820433132648507164130541640006376726722", "0.09988854297189004861885011083246922416317", "-0.0364086107307437226394307496334875323964"},
    {2.0, 7.368062997280772, "1.058859965205194342222175867535662602884", "0.167146894723084844354360888455586406251", "-0.02736673388708276610023800835252149520343", "-0.09936129359470377755453373792570840616941"},
    {2.0, 12.949576057390507, "0.7888306748449802411551307981906041275435", "-0.1891999219829350486600499572079355710325", "0.1362617058601631992653540331657701984285", "0.1576058736187564079889178002855000187671"},
    {2.0, 22.759240811055626, "0.9253925532278055905956522743147151236557", "0.05296424034945272339045475236591633446868", "-0.03645507107619017984780951013956052576955", "-0.06325053715594619956762167135909622390667"},
    {2.0, 40.0, "0.897090206914265956714168524872515495049", "-0.1500060357058338593802944938300152662068", "0.03821311775211196640574655641205571111847", "0.1482449660039711231119574215455045361133"},
    {2.5, 0.25, "1.323801406724515805735346035908582919869", "-0.09383378604890169267793914365319771318173", "-0.3519708780660769698126379890433671931289", "0.1375895935414553313449281675474027183837"},
    {2.5, 0.43938196722020506, "1.289832749147621957831952139461458606213", "-0.1547666126536268830200862706091969015393", "-0.2875784621705238865272207778055058117969", "0.2161662372398495999723776278346995958412"},
    {2.5, 0.7722260524731894, "1.204998197950024743192346336408246543285", "-0.2272494248493394321433621085421831004654", "-0.1471726116836411662663822267980638180119", "0.2776654008844889157148194158978377778429"},
    {2.5, 1.3572088082974532, "1.051325372410002589410405573812968384126", "-0.2544082584408650585325123764856244013246", "0.03217372221126529696762261829684564974084", "0.2282945760404366400008096496388813329794"},
    {2.5, 2.385332304473301, "0.895383564189437864400150496538526773084", "-0.1658281690721223192112138934357508487094", "0.1092304898941316771319373265559303286595", "0.08584667755342891420155237975486781860937"},
    {2.5, 4.192288001653537, "0.8559501188329757894921683779612704350939", "0.01350483691629427008894357135609907031048", "0.08172321815115591912155259830730939511412", "-0.0229654227575170670010323490023270829427"},
    {2.5, 7.368062997280772, "1.046076512716519172687896494323207477742", "0.123809399762470022090583940282869135443", "-0.02361326816190688231168714477513209259961", "-0.0750184358837051510596689533939636347691"},
    {2.5, 12.949576057390507, "0.8476096756220770164228301172191804461133", "-0.1250458014617625498323452114559432961757", "0.1004055516256454814489806435889975974179", "0.1029499625864718019972252162137496443768"},
    {2.5, 22.759240811055626, "0.9198401927227384822092517674610049167514", "0.02972339734571807715286970792203693565202", "0.007642435968332748007817266176683634343387", "-0.03317994351803288428456876988335252712048"},
    {2.5, 40.0, "0.9155849555064022526889413249954146381977", "-0.09505851056712464645329828341282777513885", "0.03572056627095215673607600699927584113903", "0.08044966672086043179137962801086266942234"},
    {3.0, 0.25, "1.19468512647115532596359159783379684787", "-0.04857251778065634033253658458846131056095", "-0.1867361116772976028390019729282132338491", "0.05802649123133317183712327804295761777939"},
    {3.0, 0.43938196722020506, "1.18002680264874535579194323774843081171", "-0.0820092030640499644380481712291139099534", "-0.1647479955583844077996336018515078888524", "0.09544774092755726130548713649448356527993"},
    {3.0, 0.7722260524731894, "1.140254563808597715845654852356385793597", "-0.1280257277127683661471880660528660821838", "-0.109531279845193245556191270989983984307", "0.1382366748217291178528967888415758421018"},
    {3.0, 1.3572088082974532, "1.053951757098088190092537252645676175241", "-0.1623376665164689544055896677580867429415", "-0.01232595673645428515404374143483156043321", "0.1448481776232493211511523069520547864413"},
    {3.0, 2.385332304473301, "0.938577707810281206452753357350273369573", "-0.1250020167842148288273357865424189902833", "0.06629897147328818823404727925417222851897", "0.07562691499864644814613847712938808304768"},
    {3.0, 4.192288001653537, "0.8924614719728703954754759363831339835895", "0.004634751526506626637681669363888612352205", "0.06460248305143945524362499636330779570348", "-0.01311399425998649561928174984053651630262"},
    {3.0, 7.368062997280772, "1.035317963708986743074643542041137827296", "0.09120360684439087263038677830418273375433", "-0.01941428222487238643063573271268518935526", "-0.05623060568469418252786707298936394529145"},
    {3.0, 12.949576057390507, "0.8906665987731061533709128080712165822186", "-0.08306759646452703069042740324705615926083", "0.07312002481899951102880612305273045581996", "0.0675083397494158601082347583914080873165"},
    {3.0, 22.759240811055626, "0.9284099867580737179842678409601196192896", "0.01734091871845004097072660548271079153494", "0.02352253505896549125914643152798776031195", "-0.01803267642225884875247204008416623297097"},
    {3.0, 40.0, "0.9326091439284983605695287924938164623181", "-0.06375750607117759019147582076935661160887", "0.03213736410165416358310932491802510654504", "0.04842161220557241951541376449924900409182"},
};

inline constexpr const char* kZetaHalf = "-1.460354508809586812889499152515298012467";
inline constexpr const char* kZetaThree = "1.202056903159594285399738161511449990765";
inline constexpr const char* kZetaPrime2 = "-0.9375482543158437537025740945678649778979";
inline constexpr const char* kZeta1p1000i_re = "0.9409368682927533108010138002953008396331";
inline constexpr const char* kZeta1p1000i_im = "0.04522665207209509908865644410162026276807";

}  // namespace oracle

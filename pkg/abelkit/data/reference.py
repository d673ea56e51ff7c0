"""Published expansions and 100-digit constants used as regression targets."""

from fractions import Fraction as F
from typing import Dict, List, NamedTuple


def _grid(tau: int, first: int, values: List[F]) -> Dict[int, F]:
    """Map consecutive grid values to exponents ``tau*m + first``."""
    return {tau * m + first: F(v) for m, v in enumerate(values)}


class AbelTable(NamedTuple):
    pole: F
    log: F
    terms: List[F]


class Constant(NamedTuple):
    name: str
    function: str
    argument: str
    digits: str


## Julia series lambda, exponents tau*m + 1 for m = 1, 2, ...
LAMBDA = {
    "xexp-neg": _grid(
        1,
        2,
        [
            F(-1),
            F(-1, 2),
            F(-5, 12),
            F(-5, 12),
            F(-107, 240),
            F(-173, 360),
            F(-7577, 15120),
            F(-14867, 30240),
            F(-36461, 80640),
            F(-41891, 100800),
            F(-493013, 1108800),
        ],
    ),
    "lambert-w": _grid(
        1,
        2,
        [
            F(-1),
            F(1, 2),
            F(-5, 12),
            F(5, 12),
            F(-107, 240),
            F(173, 360),
            F(-7577, 15120),
            F(14867, 30240),
            F(-36461, 80640),
            F(41891, 100800),
            F(-493013, 1108800),
        ],
    ),
    "x-over-1px2": _grid(
        2,
        3,
        [
            F(-1),
            F(-1, 2),
            F(-1, 2),
            F(-7, 12),
            F(-2, 3),
            F(-13, 20),
            F(-9, 20),
            F(-71, 280),
            F(-121, 140),
            F(-19, 7),
            F(-11, 20),
            F(171569, 9240),
        ],
    ),
    "arcsinh": _grid(
        2,
        3,
        [
            F(-1, 6),
            F(1, 30),
            F(-41, 3780),
            F(4, 945),
            F(-3337, 1871100),
            F(28069, 36486450),
            F(-228859, 696559500),
        ],
    ),
}

## g' = 1/lambda, exponents -2 .. 12
RECIPROCAL = {
    "xexp-neg": _grid(
        1,
        -2,
        [
            F(-1),
            F(1, 2),
            F(1, 6),
            F(1, 8),
            F(19, 180),
            F(1, 12),
            F(41, 840),
            F(37, 17280),
            F(-18349, 453600),
            F(-443, 10080),
            F(55721, 2395008),
            F(84317, 691200),
            F(2594833561, 36324288000),
            F(-152043613, 479001600),
            F(-830066563, 1334361600),
        ],
    ),
    "lambert-w": _grid(
        1,
        -2,
        [
            F(-1),
            F(-1, 2),
            F(1, 6),
            F(-1, 8),
            F(19, 180),
            F(-1, 12),
            F(41, 840),
            F(-37, 17280),
            F(-18349, 453600),
            F(443, 10080),
            F(55721, 2395008),
            F(-84317, 691200),
            F(2594833561, 36324288000),
            F(152043613, 479001600),
            F(-830066563, 1334361600),
        ],
    ),
}

## Abel expansions in the internal convention G(theta(x)) = G(x) + 1
ABEL = {
    "logistic": AbelTable(
        F(1),
        F(1),
        [
            F(1, 2),
            F(1, 3),
            F(13, 36),
            F(113, 240),
            F(1187, 1800),
            F(877, 945),
            F(14569, 11760),
            F(176017, 120960),
            F(1745717, 1360800),
            F(88217, 259875),
            F(-147635381, 109771200),
            F(-3238110769, 1556755200),
        ],
    ),
    "sin": AbelTable(
        F(3),
        F(6, 5),
        [
            F(79, 1050),
            F(29, 2625),
            F(91543, 36382500),
            F(18222899, 28378350000),
            F(88627739, 573024375000),
            F(3899439883, 142468185234375),
            F(-32544553328689, 116721334798818750000),
        ],
    ),
    "xexp-neg": AbelTable(
        F(1),
        F(1, 2),
        [
            F(1, 6),
            F(1, 16),
            F(19, 540),
            F(1, 48),
            F(41, 4200),
            F(37, 103680),
            F(-18349, 3175200),
            F(-443, 80640),
            F(55721, 21555072),
            F(84317, 6912000),
            F(2594833561, 399567168000),
            F(-152043613, 5748019200),
        ],
    ),
    "lambert-w": AbelTable(
        F(1),
        F(-1, 2),
        [
            F(1, 6),
            F(-1, 16),
            F(19, 540),
            F(-1, 48),
            F(41, 4200),
            F(-37, 103680),
            F(-18349, 3175200),
            F(443, 80640),
            F(55721, 21555072),
            F(-84317, 6912000),
            F(2594833561, 399567168000),
            F(152043613, 5748019200),
        ],
    ),
    "x-over-1px2": AbelTable(
        F(1, 2),
        F(1, 2),
        [
            F(1, 8),
            F(5, 96),
            F(7, 288),
            F(-1, 1280),
            F(-671, 28800),
            F(-9607, 483840),
            F(10187, 225792),
            F(954907, 7741440),
            F(-10382759, 87091200),
            F(-299685973, 304128000),
            F(684110137, 14050713600),
            F(171403792979, 15941173248),
        ],
    ),
    "arcsinh": AbelTable(
        F(3),
        F(-6, 5),
        [
            F(79, 1050),
            F(-29, 2625),
            F(91543, 36382500),
            F(-18222899, 28378350000),
            F(88627739, 573024375000),
            F(-3899439883, 142468185234375),
            F(-32544553328689, 116721334798818750000),
        ],
    ),
}

## EJ-normalized Abel values, internal convention
EJ_VALUES = [
    Constant(
        "g1(1/2)",
        "logistic",
        "1/2",
        "1.7679937861361540504436344067811323310776814331319565155769860596260007646063875144448165163256825025",
    ),
    Constant(
        "g3(pi/2)",
        "sin",
        "pi/2",
        "2.0896227197295430595378472764175097853990195204433762593345954823058366250507039441172654894541567102",
    ),
    Constant(
        "g6(1/2)",
        "xexp-neg",
        "1/2",
        "1.7583425585897237206264380621011597759702711962509080917543312980057047235243525304830956768215851070",
    ),
    Constant(
        "g6(1)",
        "xexp-neg",
        "1",
        "1.2902472086877642916676156841611846372757644146733727282792783387848274298261878073817117283133623657",
    ),
    Constant(
        "g6(3/2)",
        "xexp-neg",
        "3/2",
        "1.5049279842833515000953933222336771313506075685178370693140248668083561715772083535204539601724490351",
    ),
    Constant(
        "g7(1)",
        "lambert-w",
        "1",
        "1.1259817765744955783852558789761564280072515098030563945245583299478474227705427041049529141887963750",
    ),
    Constant(
        "g7(4)",
        "lambert-w",
        "4",
        "-0.1149937237341008416918237871473955482828261003724821296567880346223422503807018752834650657738379829",
    ),
    Constant(
        "g8(1)",
        "x-over-1px2",
        "1",
        "0.6882843924287254031774733442236691598221350976461793168899434154492265236034277589425850733342338149",
    ),
    Constant(
        "g8(3)",
        "x-over-1px2",
        "3",
        "3.9652585503680934112415268662209871314066299495841278202764290285396844369745309712979065528562981062",
    ),
    Constant(
        "g9(1)",
        "arcsinh",
        "1",
        "3.0661932701728607872763960723695476512298471326089692066001665791268362518791257272894037050181877216",
    ),
    Constant(
        "g9(2)",
        "arcsinh",
        "2",
        "0.1225723550627613593674498535209677050945632114479642399460441294453007178151264750096558761008003016",
    ),
    Constant(
        "g10(1)",
        "tanh",
        "1",
        "1.5107917958692238844150418798379277168488043699130575867903266412969163121334944455560618488719683881",
    ),
    Constant(
        "g11(1)",
        "arctan",
        "1",
        "1.5110547706341955247468183837921765365660348300682045097278522747037923954184486447084322156741355942",
    ),
    Constant(
        "g12(1)",
        "x-over-sqrt1px",
        "1",
        "2.0037812946371416249179551894225669833303962507979755557419216169716071349148331180677424980811441121",
    ),
]

## principal (limit-normalized) Abel values
ML_VALUES = [
    Constant(
        "~g3(pi/2)",
        "sin",
        "pi/2",
        "1.4304553465286772447007001342639943626105251857497265882937788821233400491195385639930960365659174569",
    ),
    Constant(
        "~g8(1)",
        "x-over-1px2",
        "1",
        "0.8615711875687117305317813745882133018410101312362431304201134178225749290958514378440509050833384868",
    ),
    Constant(
        "~g9(1)",
        "arcsinh",
        "1",
        "3.7253606433737266021135432145230630740183414673026188776409831793093328278102911074135731579064269748",
    ),
    Constant(
        "~g10(1)",
        "tanh",
        "1",
        "1.4499720296529992271183399125182753463630058063936834571482244926753012114461573078658989846993713779",
    ),
    Constant(
        "~g11(1)",
        "arctan",
        "1",
        "1.5718745368504201820435203511118289070518333935875786393699544233254074961057857823985950798467326044",
    ),
    Constant(
        "~g12(1)",
        "x-over-sqrt1px",
        "1",
        "2.3503548849171142796265712501516552673681463179781031828022616217183039458996804758706741615793534559",
    ),
]

## half-iterates of x*exp(x), x + 1/x and arcsinh
HALF_ITERATES = [
    Constant(
        "b^[1/2](-3/2)",
        "xexp",
        "-3/2",
        "-0.4264166294176332515153118314959282016263288269779343063735255284490601822588280606246428889441780123",
    ),
    Constant(
        "b^[1/2](-1)",
        "xexp",
        "-1",
        "-0.4886648186650355287868051499783363426032437145420460274529527835852337101053917173648041964826593958",
    ),
    Constant(
        "b^[1/2](-1/2)",
        "xexp",
        "-1/2",
        "-0.3734798977577790519054197236844372051304606958133286554406703025989395393199161956685435603156864847",
    ),
    Constant(
        "b^[1/2](1/2)",
        "xexp",
        "1/2",
        "0.6260239513021067337184553317924634006735786718536452196041180904364827145223720139252799764700719890",
    ),
    Constant(
        "b^[1/2](1)",
        "xexp",
        "1",
        "1.5134281085001618745523784595802361360523303713302752630412064404423776816220701637052381526519832852",
    ),
    Constant(
        "d^[1/2](1)",
        "xplusinv",
        "1",
        "1.6682712581427341026136524455363262029030009626079545612116471428413629522821259531646886087189899654",
    ),
    Constant(
        "d^[1/2](2)",
        "xplusinv",
        "2",
        "2.2676941608146219556986675663267817404058977213864806150199155621095539006524575786194598054301929223",
    ),
    Constant(
        "d^[1/2](3)",
        "xplusinv",
        "3",
        "3.1715628805584589950794328878353040425425234867124085284281807613396012483190218839371168323598229023",
    ),
    Constant(
        "arcsinh^[1/2](1)",
        "arcsinh",
        "1",
        "0.9355612833589182616399920249225053056758840032520531674271170225577872426642048379958915233196045102",
    ),
    Constant(
        "arcsinh^[1/2](2)",
        "arcsinh",
        "2",
        "1.6665617031958385003364670121909423594133577955133330718956939445848951705893403956452533778340335331",
    ),
]


def lookup(name: str) -> Constant:
    for table in (EJ_VALUES, ML_VALUES, HALF_ITERATES):
        for constant in table:
            if constant.name == name:
                return constant
    raise KeyError(name)

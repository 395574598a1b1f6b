#pragma once

// Frozen fixture data: reference subdivision tables for the perturbed curve
// at scale 2^29 (levels 1-3), the exact projection crossings of both level-4
// subdivision-point polygons, and synthetic PL knots used by the topology
// tests. All values are exact integers.

#include <array>
#include <vector>

namespace knotcert::fixtures {

inline const std::vector<std::array<long long,3>> kK0 = {
    {0,9,20},{-15,-95,-50},{40,80,-20},{-10,-60,58},{-60,30,20},{40,-60,-60},{0,9,20}};
inline const std::vector<std::array<long long,3>> kK1 = {
    {0,9,20},{-15,-95,-50},{40,80,-20},{10,-60,58},{-60,30,20},{40,-60,-60},{0,9,20}};

inline const std::vector<std::vector<std::array<long long,3>>> kTableIVLevel1 = {
    {{0L, 4831838208L, 10737418240L}, {-4026531840L, -23085449216L, -8053063680L}, {1342177280L, -13555990528L, -13421772800L}, {5704253440L, -6442450944L, -8858370048L}, {5368709120L, -3388997632L, -1610612736L}, {2768240640L, -2952790016L, 3187671040L}, {419430400L, -3875536896L, 4529848320L}},
    {{419430400L, -3875536896L, 4529848320L}, {-1929379840L, -4798283776L, 5872025600L}, {-4026531840L, -7079985152L, 3758096384L}, {-3355443200L, -9462349824L, -2818572288L}, {2684354560L, -10871635968L, -10737418240L}, {10737418240L, -13690208256L, -10737418240L}, {0L, 4831838208L, 10737418240L}},
};

inline const std::vector<std::vector<std::array<long long,3>>> kTableIVLevel2 = {
    {{0L, 4831838208L, 10737418240L}, {-2013265920L, -9126805504L, 1342177280L}, {-1677721600L, -13723762688L, -4697620480L}, {-293601280L, -13941866496L, -7818182656L}, {1258291200L, -12375293952L, -8690597888L}, {2498232320L, -10327425024L, -8037335040L}, {3244032000L, -8410890240L, -6509035520L}},
    {{3244032000L, -8410890240L, -6509035520L}, {3989831680L, -6494355456L, -4980736000L}, {4241489920L, -4709154816L, -2577399808L}, {3816816640L, -3667918848L, 50331648L}, {2831155200L, -3292528640L, 2323644416L}, {1593835520L, -3414163456L, 3858759680L}, {419430400L, -3875536896L, 4529848320L}},
    {{419430400L, -3875536896L, 4529848320L}, {-754974720L, -4336910336L, 5200936960L}, {-1866465280L, -5138022400L, 5007998976L}, {-2600468480L, -6121586688L, 3825205248L}, {-2637168640L, -7141851136L, 1784676352L}, {-1840250880L, -8166834176L, -660602880L}, {-530841600L, -8882749440L, -2734161920L}},
    {{-530841600L, -8882749440L, -2734161920L}, {778567680L, -9598664704L, -4807720960L}, {2600468480L, -10005512192L, -6509559808L}, {4613734400L, -9789505536L, -7063207936L}, {6039797760L, -8355053568L, -5368709120L}, {5368709120L, -4429185024L, 0L}, {0L, 4831838208L, 10737418240L}},
};

inline const std::vector<std::vector<std::array<long long,3>>> kTableIIILevel3 = {
    {{0L, 4831838208L, 10737418240L}, {-1006632960L, -2147483648L, 6039797760L}, {-1426063360L, -6786383872L, 2181038080L}, {-1420820480L, -9707716608L, -893386752L}, {-1127219200L, -11385044992L, -3252682752L}, {-655933440L, -12176949248L, -4975001600L}, {-93900800L, -12353556480L, -6142648320L}},
    {{-93900800L, -12353556480L, -6142648320L}, {468131840L, -12530163712L, -7310295040L}, {1120911360L, -12091473920L, -7923269632L}, {1777500160L, -11307614208L, -8063877120L}, {2374696960L, -10360258560L, -7818575872L}, {2871132160L, -9369157632L, -7273185280L}, {3244032000L, -8410890240L, -6509035520L}},
    {{3244032000L, -8410890240L, -6509035520L}, {3616931840L, -7452622848L, -5744885760L}, {3866296320L, -6527188992L, -4761976832L}, {3969351680L, -5711167488L, -3641638912L}, {3921920000L, -5037965312L, -2460712960L}, {3735183360L, -4516569088L, -1287700480L}, {3431116800L, -4142518272L, -179855360L}},
    {{3431116800L, -4142518272L, -179855360L}, {3127050240L, -3768467456L, 927989760L}, {2705653760L, -3541762048L, 1970667520L}, {2188902400L, -3457941504L, 2890924032L}, {1609564160L, -3499098112L, 3642753024L}, {1006632960L, -3644850176L, 4194304000L}, {419430400L, -3875536896L, 4529848320L}},
    {{419430400L, -3875536896L, 4529848320L}, {-167772160L, -4106223616L, 4865392640L}, {-739246080L, -4421844992L, 4984930304L}, {-1255669760L, -4802740224L, 4872732672L}, {-1677393920L, -5229969408L, 4529192960L}, {-1970339840L, -5688508416L, 3972792320L}, {-2113228800L, -6162665472L, 3241123840L}},
    {{-2113228800L, -6162665472L, 3241123840L}, {-2256117760L, -6636822528L, 2509455360L}, {-2248949760L, -7126597632L, 1602519040L}, {-2070446080L, -7616299008L, 557907968L}, {-1712128000L, -8089567232L, -567672832L}, {-1185546240L, -8524791808L, -1697382400L}, {-530841600L, -8882749440L, -2734161920L}},
    {{-530841600L, -8882749440L, -2734161920L}, {123863040L, -9240707072L, -3770941440L}, {906690560L, -9521397760L, -4714790912L}, {1777500160L, -9685598208L, -5468651520L}, {2667560960L, -9676472320L, -5915246592L}, {3470991360L, -9407209472L, -5916999680L}, {4034867200L, -8740884480L, -5316894720L}},
    {{4034867200L, -8740884480L, -5316894720L}, {4598743040L, -8074559488L, -4716789760L}, {4923064320L, -7011172352L, -3514826752L}, {4854906880L, -5413797888L, -1553989632L}, {4194304000L, -3095396352L, 1342177280L}, {2684354560L, 201326592L, 5368709120L}, {0L, 4831838208L, 10737418240L}},
};

struct CrossingFixture { const char* u; const char* v; int over_edge; int under_edge; const char* over_depth; const char* under_depth; };
inline const std::vector<CrossingFixture> kK04CrossingsXY = {
    {"-70600874219532518400/90998355737", "-331936500725210686464/90998355737", 0, 6, "346821834258400839680/90998355737", "207997726826710599680/90998355737"},
    {"-2606810091676070400/2228701007", "-141298996572704411136/15600907049", 1, 12, "-695629074309606400/821100371", "-52849788807168394240/15600907049"},
    {"70736463317966883840/46441845451", "-2183313901438239630336/232209227255", 13, 3, "-243794174437404219392/46441845451", "-323382794228725225472/46441845451"}};

inline const std::vector<CrossingFixture> kK14CrossingsXY = {
    {"-2321511588927897600/2778711187", "-12860064917297823744/2778711187", 8, 0, "12962430019195371520/2778711187", "8365441128941486080/2778711187"},
    {"-8217249783839948800/7079707793", "-58835463893254373376/7079707793", 0, 11, "19688400558161920/7079707793", "-9115483450173358080/7079707793"},
    {"2736710937161450496/968030497", "-222045650166834551808/24200762425", 13, 3, "-25520268446884489216/4840152485", "-33199116883959801856/4840152485"}};

inline const std::vector<std::array<long long,3>> kBraidTrefoil = {
    {0L, 0L, 0L},
    {10L, 10L, 0L},
    {5L, 14L, -5L},
    {0L, 20L, 0L},
    {10L, 30L, 0L},
    {10L, 40L, 0L},
    {20L, 40L, 0L},
    {20L, -10L, 0L},
    {10L, -10L, 0L},
    {10L, 0L, 0L},
    {5L, 4L, -5L},
    {0L, 10L, 0L},
    {10L, 20L, 0L},
    {5L, 24L, -5L},
    {0L, 30L, 0L},
    {0L, 50L, 0L},
    {30L, 50L, 0L},
    {30L, -20L, 0L},
    {0L, -20L, 0L}};

inline const std::vector<std::array<long long,3>> kBraidTrefoil5 = {
    {0L, 0L, 0L},
    {10L, 10L, 0L},
    {5L, 14L, -5L},
    {0L, 20L, 0L},
    {10L, 30L, 0L},
    {5L, 34L, -5L},
    {0L, 40L, 0L},
    {5L, 44L, -5L},
    {10L, 50L, 0L},
    {10L, 60L, 0L},
    {20L, 60L, 0L},
    {20L, -10L, 0L},
    {10L, -10L, 0L},
    {10L, 0L, 0L},
    {5L, 4L, -5L},
    {0L, 10L, 0L},
    {10L, 20L, 0L},
    {5L, 24L, -5L},
    {0L, 30L, 0L},
    {10L, 40L, 0L},
    {0L, 50L, 0L},
    {0L, 70L, 0L},
    {30L, 70L, 0L},
    {30L, -20L, 0L},
    {0L, -20L, 0L}};

inline const std::vector<std::array<long long,3>> kBraidKink = {
    {0L, 0L, 0L},
    {10L, 10L, 0L},
    {10L, 20L, 0L},
    {20L, 20L, 0L},
    {20L, -10L, 0L},
    {10L, -10L, 0L},
    {10L, 0L, 0L},
    {5L, 4L, -5L},
    {0L, 10L, 0L},
    {0L, 30L, 0L},
    {30L, 30L, 0L},
    {30L, -20L, 0L},
    {0L, -20L, 0L}};

inline const std::vector<std::array<long long,3>> kGranny = {
    {0L, 0L, 0L},
    {10L, 10L, 0L},
    {5L, 14L, -5L},
    {0L, 20L, 0L},
    {20L, 40L, 0L},
    {15L, 44L, -5L},
    {10L, 50L, 0L},
    {20L, 60L, 0L},
    {20L, 70L, 0L},
    {30L, 70L, 0L},
    {30L, -10L, 0L},
    {20L, -10L, 0L},
    {20L, 30L, 0L},
    {15L, 34L, -5L},
    {10L, 40L, 0L},
    {20L, 50L, 0L},
    {15L, 54L, -5L},
    {10L, 60L, 0L},
    {10L, 80L, 0L},
    {40L, 80L, 0L},
    {40L, -20L, 0L},
    {10L, -20L, 0L},
    {10L, 0L, 0L},
    {5L, 4L, -5L},
    {0L, 10L, 0L},
    {10L, 20L, 0L},
    {5L, 24L, -5L},
    {0L, 30L, 0L},
    {0L, 90L, 0L},
    {50L, 90L, 0L},
    {50L, -30L, 0L},
    {0L, -30L, 0L}};

inline const std::vector<std::array<long long,3>> kFigureEight = {
    {3000L, 0L, 0L},
    {1651L, 2273L, 951L},
    {-714L, 2196L, 588L},
    {-1608L, 523L, -588L},
    {-964L, -700L, -951L},
    {0L, -1000L, 0L},
    {964L, -700L, 951L},
    {1608L, 523L, 588L},
    {714L, 2196L, -588L},
    {-1651L, 2273L, -951L},
    {-3000L, 0L, 0L},
    {-1651L, -2273L, 951L},
    {714L, -2196L, 588L},
    {1608L, -523L, -588L},
    {964L, 700L, -951L},
    {0L, 1000L, 0L},
    {-964L, 700L, 951L},
    {-1608L, -523L, 588L},
    {-714L, -2196L, -588L},
    {1651L, -2273L, -951L}};

} // namespace knotcert::fixtures

#pragma once

// generated by tests/oracle/make_oracle.py

#include <map>
#include <string>
#include <vector>

namespace oracle {

inline const std::map<std::string, std::vector<std::string>> named = {
    {"A", {"1", "5", "73", "1445", "33001", "819005", "21460825", "584307365", "16367912425", "468690849005", "13657436403073", "403676083788125", "12073365010564729"}},
    {"Ap", {"1", "3", "19", "147", "1251", "11253", "104959", "1004307", "9793891", "96918753", "970336269", "9807518757", "99912156111"}},
    {"D", {"1", "4", "28", "256", "2716", "31504", "387136", "4951552", "65218204", "878536624", "12046924528", "167595457792", "2359613230144"}},
    {"T", {"1", "4", "40", "544", "8536", "145504", "2618176", "48943360", "941244376", "18502137184", "370091343040", "7508629231360", "154145664817600"}},
    {"b", {"1", "-3", "9", "-3", "-279", "2997", "-19431", "65853", "292329", "-7202523", "69363009", "-407637387", "702049401"}},
    {"V", {"1", "8", "88", "1088", "14296", "195008", "2728384", "38879744", "561787864", "8206324928", "120929313088", "1794924383744", "26802975999424"}},
    {"V3", {"1", "15", "297", "6495", "149481", "3549015", "86045625", "2117846655", "52722318825", "1324182929415", "33496116147297", "852272490721095", "21791242255255929"}},
    {"V4", {"1", "40", "2008", "109120", "6173656", "357903040", "21090174400", "1257411781120", "75630327895000", "4580277582101440", "278915640538355008", "17061127317021130240", "1047543937631077672384"}},
    {"V6", {"1", "312", "114264", "44196288", "17571260376", "7102429365312", "2902756971524544", "1195767284675194368", "495517287120629380056", "206288841172365371349312", "86197993139642883062739264", "36126988632615966170624967168", "15179622609889691139626940597696"}},
    {"f", {"1", "2", "10", "56", "346", "2252", "15184", "104960", "739162", "5280932", "38165260", "278415920", "2046924400"}},
    {"S", {"1", "4", "20", "112", "676", "4304", "28496", "194240", "1353508", "9593104", "68906320", "500281280", "3664176400"}},
    {"a", {"1", "3", "15", "93", "639", "4653", "35169", "272835", "2157759", "17319837", "140668065", "1153462995", "9533639025"}},
    {"Q", {"1", "-6", "42", "-312", "2394", "-18756", "149136", "-1199232", "9729882", "-79527084", "654089292", "-5408896752", "44941609584"}},
    {"W", {"1", "-3", "9", "-21", "9", "297", "-2421", "12933", "-52407", "145293", "-35091", "-2954097", "25228971"}},
    {"G", {"1", "12", "164", "2352", "34596", "516912", "7806224", "118803648", "1818757924", "27972399792", "431824158864", "6686855325888", "103814819552016"}},
    {"G3", {"1", "21", "495", "12171", "305919", "7794171", "200412801", "5187646485", "134959966911", "3524983657419", "92361941457345", "2426431606623045", "63884757373175025"}},
    {"G4", {"1", "52", "2980", "176848", "10686244", "652902352", "40189571344", "2487237225280", "154556953742116", "9634809038248528", "602157223058676880", "37712959456186980160", "2366114462500053744400"}},
    {"G6", {"1", "372", "148644", "60907728", "25280259876", "10575105841872", "4447030619917584", "1877136216966773568", "794616311191696116516", "337119677970902288257872", "143279822479755708062208144", "60984728465076733497914818368", "25988880184223516709734917118736"}},
};

inline const std::vector<std::string> g_m1_2 = {"1", "3/4", "41/64", "147/256", "8649/16384", "32307/65536", "487889/1048576", "1856307/4194304", "454689481/1073741824"};
inline const std::vector<std::string> v_m1_2 = {"1", "1/2", "11/32", "17/64", "1787/8192", "3047/16384", "42631/262144", "75937/524288", "70223483/536870912"};
inline const std::vector<std::string> g_p2_7 = {"1", "67/49", "3805/2401", "205423/117649", "10819909/5764801", "561617023/282475249", "28869926401/13841287201", "72218973135355/33232930569601", "3667922112195091/1628413597910449"};
inline const std::vector<std::string> v_p2_7 = {"1", "85/49", "5533/2401", "327865/117649", "2647063/823543", "145398451/40353607", "7836068155/1977326743", "142899059666329/33232930569601", "7520363854836085/1628413597910449"};
inline const std::vector<std::string> g_m5_3 = {"1", "19/9", "241/81", "24451/6561", "260299/59049", "2678593/531441", "242557003/43046721", "2401728217/387420489", "23497908343/3486784401"};
inline const std::vector<std::string> v_m5_3 = {"1", "29/9", "167/27", "63041/6561", "790549/59049", "1031305/59049", "312824315/14348907", "3405169735/129140163", "12065842505/387420489"};

inline const std::vector<std::string> bernoulli = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730", "0", "7/6"};
inline const std::vector<std::string> euler = {"1", "0", "-1", "0", "5", "0", "-61", "0", "1385", "0", "-50521", "0", "2702765"};
inline const std::vector<std::string> U = {"1", "0", "-2", "0", "22", "0", "-602", "0", "30742", "0", "-2523002", "0", "303692662"};
inline const std::vector<std::string> s = {"1", "-1", "-3", "11", "57", "-361", "-2763", "24611", "250737"};
inline const std::string G3_6 = "200412801";
inline constexpr long V6_7_mod343 = 312;
inline constexpr long G3_6_mod343 = 302;
inline constexpr long G3_6_rhs_mod343 = 302;
inline constexpr long G6_sum13_mod2197 = 169;
inline const std::string H3 = "11/6";

}  // namespace oracle

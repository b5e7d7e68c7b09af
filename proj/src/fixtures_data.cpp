#include <initializer_list>
#include <string>
#include <vector>

#include "a1count/lattice.hpp"
#include "a1count/tables.hpp"

namespace a1c {

namespace {

// Emits one line per value: key (e; base + i extra simple points; tang),
// i = first_ones, first_ones+1, ...
void fam(std::string& out, int e, std::initializer_list<int> base, std::initializer_list<int> tang,
         int first_ones, std::initializer_list<const char*> values) {
  int i = first_ones;
  for (const char* v : values) {
    std::vector<int> a(base);
    a.insert(a.end(), i, 1);
    out += TangencyKey(e, a, std::vector<int>(tang)).str();
    out += '\t';
    out += v;
    out += '\n';
    ++i;
  }
}

std::string build() {
  std::string t;
  t += "# Contact counts n(e;a1,a2,...;b1,...) -- full printed table set.\n";
  t += "# Format: e;a1,...;b1,...<TAB>value, value affine in x as c0+c1x.\n";

  t += "# --- families equal to 1, e <= 4 ---\n";
  fam(t, 1, {}, {}, 0, {"1", "1", "1", "1"});
  fam(t, 2, {}, {}, 0, {"1", "1", "1", "1", "1", "1"});
  fam(t, 3, {2}, {}, 0, {"1", "1", "1", "1", "1", "1", "1", "1"});
  fam(t, 3, {}, {2}, 0, {"1", "1", "1", "1", "1", "1", "1", "1"});
  fam(t, 4, {3}, {}, 0, {"1", "1", "1", "1", "1", "1", "1", "1", "1", "1"});
  fam(t, 4, {}, {3}, 0, {"1", "1", "1", "1", "1", "1", "1", "1", "1", "1"});
  fam(t, 4, {2, 2, 2}, {}, 0, {"1", "1", "1", "1", "1", "1", "1"});
  fam(t, 4, {2, 2}, {2}, 0, {"1", "1", "1", "1", "1", "1", "1"});
  fam(t, 4, {2}, {2, 2}, 0, {"1", "1", "1", "1", "1", "1", "1"});
  fam(t, 4, {}, {2, 2, 2}, 0, {"1", "1", "1", "1", "1", "1", "1"});

  t += "# --- e <= 4 columns ---\n";
  fam(t, 3, {}, {}, 0, {"3", "4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 4, {2, 2}, {}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 4, {2}, {2}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 4, {}, {2, 2}, 0, {"2", "3", "4", "5", "6", "7", "8", "10", "10"});
  fam(t, 4, {2}, {}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 4, {}, {2}, 0, {"10", "14", "19", "25", "32", "40", "49", "59", "71", "93", "96"});
  fam(t, 4, {}, {}, 0,
      {"16", "26", "40", "59", "84", "116", "156", "205", "264", "335", "428", "620", "620"});

  t += "# --- degree 5 table ---\n";
  fam(t, 5, {3, 2, 2}, {}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 5, {3, 2}, {2}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 5, {2, 2}, {3}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 5, {2, 2, 2, 2, 2}, {}, 0, {"7", "8", "9", "10", "12", "12"});
  fam(t, 5, {2, 2, 2, 2}, {2}, 0, {"7", "8", "9", "10", "12", "12"});
  fam(t, 5, {3, 2}, {}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 5, {3}, {2}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 5, {2}, {3}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 5, {2, 2, 2, 2}, {}, 0, {"26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 5, {2, 2, 2}, {2}, 0, {"25", "32", "40", "49", "59", "71", "93", "96"});
  fam(t, 5, {2, 2, 2}, {}, 0,
      {"59", "84", "116", "156", "205", "264", "335", "428", "620", "620"});
  fam(t, 5, {2, 2}, {2}, 0,
      {"55", "79", "110", "149", "197", "255", "325", "416", "584", "620"});
  fam(t, 5, {3}, {}, 0,
      {"24", "35", "50", "70", "96", "129", "170", "220", "280", "352", "448", "640", "640"});
  fam(t, 5, {}, {3}, 0,
      {"23", "34", "49", "69", "95", "128", "169", "219", "279", "351", "447", "636", "640"});
  fam(t, 5, {2, 2}, {}, 0,
      {"100", "155", "234", "344", "493", "690", "945", "1270", "1686", "2270", "3510", "3510"});
  fam(t, 5, {2}, {2}, 0,
      {"89", "140", "214", "318", "460", "649", "895", "1210", "1614", "2174", "3222", "3510"});
  fam(t, 5, {2}, {}, 0,
      {"127", "216", "356", "570", "888", "1348", "1997", "2892", "4102", "5716", "7890", "11112",
       "18132", "18132"});
  fam(t, 5, {}, {2}, 0,
      {"104", "182", "307", "501", "793", "1220", "1828", "2673", "3823", "5365", "7443", "10476",
       "16212", "18132"});
  fam(t, 5, {}, {}, 0,
      {"113", "217", "399", "706", "1207", "2000", "3220", "5048", "7721", "11544", "16909",
       "24352", "34828", "51040", "87304", "87304"});

  t += "# --- degree 6 table ---\n";
  fam(t, 6, {4, 2, 2, 2}, {}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {4, 2, 2}, {2}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {2, 2, 2}, {4}, 0, {"4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {3, 3, 3}, {}, 0, {"3", "4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {3, 3}, {3}, 0, {"3", "4", "5", "6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {3, 3, 2, 2, 2}, {}, 0, {"6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {3, 3, 2, 2}, {2}, 0, {"6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {3, 2, 2, 2}, {3}, 0, {"6", "7", "8", "9", "10", "12", "12"});
  fam(t, 6, {3, 2, 2, 2, 2, 2, 2}, {}, 0, {"9", "10", "12", "12"});
  fam(t, 6, {3, 2, 2, 2, 2, 2}, {2}, 0, {"9", "10", "12", "12"});
  fam(t, 6, {2, 2, 2, 2, 2, 2}, {3}, 0, {"9", "10", "12", "12"});
  fam(t, 6, {2, 2, 2, 2, 2, 2, 2, 2, 2}, {}, 0, {"12"});
  fam(t, 6, {2, 2, 2, 2, 2, 2, 2, 2}, {2}, 0, {"12"});
  fam(t, 6, {4, 2, 2}, {}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 6, {4, 2}, {2}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 6, {2, 2}, {4}, 0, {"11", "15", "20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 6, {3, 3, 2, 2}, {}, 0, {"20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 6, {3, 2, 2}, {3}, 0, {"20", "26", "33", "41", "50", "60", "72", "96", "96"});
  fam(t, 6, {3, 3, 2}, {2}, 0, {"19", "25", "32", "40", "49", "59", "71", "93", "96"});
  fam(t, 6, {3, 2, 2, 2, 2, 2}, {}, 0, {"41", "50", "60", "72", "96", "96"});
  fam(t, 6, {2, 2, 2, 2, 2}, {3}, 0, {"41", "50", "60", "72", "96", "96"});
  fam(t, 6, {3, 2, 2, 2, 2}, {2}, 0, {"40", "49", "59", "71", "93", "96"});
  fam(t, 6, {4, 2}, {}, 0,
      {"24", "35", "50", "70", "96", "129", "170", "220", "280", "352", "448", "640", "640"});
  fam(t, 6, {4}, {2}, 0,
      {"24", "35", "50", "70", "96", "129", "170", "220", "280", "352", "448", "640", "640"});
  fam(t, 6, {2}, {4}, 0,
      {"24", "35", "50", "70", "96", "129", "170", "220", "280", "352", "448", "640", "640"});
  fam(t, 6, {3, 3, 2}, {}, 0,
      {"40", "59", "84", "116", "156", "205", "264", "335", "428", "620", "620"});
  fam(t, 6, {3, 2}, {3}, 0,
      {"40", "59", "84", "116", "156", "205", "264", "335", "428", "620", "620"});
  fam(t, 6, {3, 3}, {2}, 1,
      {"55", "79", "110", "149", "197", "255", "325", "416", "584", "620"});
  fam(t, 6, {3, 3}, {2}, 0, {"37"});
  fam(t, 6, {3, 2, 2, 2, 2}, {}, 0,
      {"116", "156", "205", "264", "335", "428", "620", "620"});
  fam(t, 6, {2, 2, 2, 2, 2, 2, 2, 2}, {}, 0, {"-24+1x", "0+1x", "0+1x"});
  fam(t, 6, {2, 2, 2, 2, 2, 2, 2}, {2}, 0, {"-25+1x", "-3+1x", "0+1x"});
  fam(t, 6, {2, 2, 2, 2, 2, 2, 2}, {}, 0, {"604-4x", "579-3x", "576-2x", "576", "576"});
  fam(t, 6, {2, 2, 2, 2, 2, 2}, {2}, 0, {"595-4x", "569-3x", "564-2x", "540", "576"});
  fam(t, 6, {3, 3}, {}, 1,
      {"100", "155", "234", "344", "493", "690", "945", "1270", "1686", "2270", "3510", "3510"});
  fam(t, 6, {3}, {3}, 1,
      {"100", "155", "234", "344", "493", "690", "945", "1270", "1686", "2270", "3510", "3510"});
  fam(t, 6, {3, 3}, {}, 0, {"63"});
  fam(t, 6, {3}, {3}, 0, {"63"});
  fam(t, 6, {3, 2, 2, 2}, {}, 0,
      {"234", "344", "493", "690", "945", "1270", "1686", "2270", "3510", "3510"});
  fam(t, 6, {3, 2, 2}, {2}, 0,
      {"214", "318", "460", "649", "895", "1210", "1614", "2174", "3222", "3510"});
  fam(t, 6, {4}, {}, 0,
      {"46", "70", "105", "155", "225", "321", "450", "620", "840", "1120", "1472", "1920", "2560",
       "3840", "3840"});
  fam(t, 6, {}, {4}, 0,
      {"45", "69", "104", "154", "224", "320", "449", "619", "839", "1119", "1471", "1919", "2559",
       "3835", "3840"});
  fam(t, 6, {2, 2, 2}, {3}, 0,
      {"230", "339", "487", "683", "937", "1261", "1676", "2258", "3462", "3510"});
  fam(t, 6, {2, 2, 2, 2, 2, 2}, {}, 0,
      {"-180+9x", "415+5x", "984+2x", "1548", "2088", "3240", "3240"});
  fam(t, 6, {2, 2, 2, 2, 2}, {2}, 0,
      {"-221+9x", "365+5x", "924+2x", "1476", "1992", "2952", "3240"});
  fam(t, 6, {3, 2, 2}, {}, 0,
      {"356", "570", "888", "1348", "1997", "2892", "4102", "5716", "7890", "11112", "18132",
       "18132"});
  fam(t, 6, {3, 2}, {2}, 0,
      {"316", "511", "804", "1232", "1841", "2687", "3838", "5381", "7462", "10492", "16272",
       "18132"});
  fam(t, 6, {2, 2}, {3}, 0,
      {"345", "555", "868", "1322", "1964", "2851", "4052", "5656", "7818", "11016", "17748",
       "18132"});
  fam(t, 6, {2, 2, 2, 2, 2}, {}, 0,
      {"2640-16x", "2419-7x", "2784-2x", "3708", "5184", "7176", "10128", "16608", "16608"});
  fam(t, 6, {2, 2, 2, 2}, {2}, 0,
      {"2525-16x", "2264-7x", "2580-2x", "3445", "4850", "6749", "9512", "14748", "16608"});
  fam(t, 6, {3, 2}, {}, 0,
      {"444", "760", "1271", "2075", "3307", "5148", "7835", "11673", "17054", "24516", "35008",
       "51280", "87544", "87544"});
  fam(t, 6, {3}, {2}, 0,
      {"381", "660", "1116", "1841", "2963", "4655", "7145", "10728", "15784", "22830", "32738",
       "47770", "77014", "87544"});
  fam(t, 6, {2}, {3}, 0,
      {"420", "725", "1221", "2005", "3211", "5019", "7665", "11453", "16774", "24164", "34560",
       "50640", "84984", "87544"});
  fam(t, 6, {2, 2, 2, 2}, {}, 0,
      {"-473+25x", "2052+9x", "4316+2x", "6896", "10341", "15191", "21940", "31452", "46200",
       "79416", "79416"});
  fam(t, 6, {2, 2, 2}, {2}, 0,
      {"-703+25x", "1713+9x", "3829+2x", "6213", "9404", "13930", "20264", "29194", "42738",
       "68886", "79416"});
  fam(t, 6, {3}, {}, 0,
      {"459", "840", "1500", "2616", "4457", "7420", "12075", "19220", "29948", "45732", "68562",
       "101300", "149070", "226084", "401172", "401172"});
  t += "# The source prints 441072 for the last entry below; the degree-zero\n";
  t += "# conversion forces it to equal the final entry of the previous column\n";
  t += "# (401172), so the printed digits are a transposition typo.\n";
  fam(t, 6, {}, {3}, 0,
      {"414", "771", "1396", "2462", "4233", "7100", "11626", "18601", "29109", "44613", "67091",
       "99381", "146511", "222249", "385812", "401172"});
  fam(t, 6, {2, 2, 2}, {}, 0,
      {"5340-36x", "4637-11x", "6350-2x", "10179", "16392", "25796", "39726", "59990", "89184",
       "131922", "200808", "359640", "359640"});
  fam(t, 6, {2, 2}, {2}, 0,
      {"4995-36x", "4082-11x", "5482-2x", "8857", "14428", "22945", "35674", "54334", "81366",
       "120906", "183060", "305244", "359640"});
  fam(t, 6, {2, 2}, {}, 0,
      {"-2381+49x", "2614+13x", "6696+2x", "12178", "21035", "35463", "58408", "94082", "148416",
       "229782", "350688", "533748", "838992", "1558272", "1558272"});
  fam(t, 6, {2}, {2}, 0,
      {"-2801+49x", "1889+13x", "5475+2x", "10173", "17824", "30444", "50743", "82629", "131642",
       "205618", "316128", "483108", "754008", "1295640", "1558272"});
  fam(t, 6, {2}, {}, 0,
      {"7336-64x", "4535-15x", "6424-2x", "11899", "22072", "39896", "70340", "121083", "203712",
       "335354", "540972", "857100", "1340208", "2094216", "3389856", "6506400", "6506400"});
  fam(t, 6, {}, {2}, 0,
      {"6922-64x", "3764-15x", "5028-2x", "9437", "17839", "32796", "58714", "102482", "174603",
       "290741", "473881", "757719", "1193697", "1871967", "3004044", "5302884", "6506400"});
  fam(t, 6, {}, {}, 0,
      {"-6342+81x", "580+17x", "4344+2x", "9372", "18809", "36648", "69444", "128158", "230640",
       "405243", "695984", "1169865", "1927584", "3121281", "4993248", "7997292", "13300176",
       "26312976", "26312976"});
  return t;
}

}  // namespace

const std::string& embedded_fixtures() {
  static const std::string text = build();
  return text;
}

}  // namespace a1c

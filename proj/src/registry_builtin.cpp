// Copyright 2026 The Mathspeak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mathspeak/registry.hpp"

namespace mathspeak {

// Shipped English data set, in the registry text format. One row per line:
//   C <tab> name <tab> min <tab> max <tab> fixity <tab> terse <tab> medium <tab> verbose
//   X <tab> character <tab> spoken name
//   U <tab> symbol <tab> singular <tab> plural
//   E <tab> symbol <tab> element name
// Overridable at runtime: files passed to load_registry replace rows with
// the same key.
std::string_view builtin_registry_text() {
  static const char* const kText =
      "# concept speech templates (English)\n"
      "C\tabsolute-value\t1\t1\tfunction\tabsolute value #1\tabsolute value of #1\tthe absolute value of #1\n"
      "C\tdeterminant\t1\t1\tfunction\tdeterminant #1\tdeterminant of #1\tthe determinant of #1\n"
      "C\tpower\t2\t2\tfunction\t#1 to the #2\t#1 to the #2 power\t#1 raised to the #2 power\n"
      "C\tfraction\t2\t2\tfunction\t#1 over #2\t#1 over #2\tthe fraction #1 over #2\n"
      "C\tsquare-root\t1\t1\tfunction\tsquare root #1\tsquare root of #1\tthe square root of #1\n"
      "C\troot\t2\t2\tfunction\t#2 root of #1\t#2 root of #1\tthe #2 root of #1\n"
      "C\tevaluated-at\t2\t2\tinfix\t#1 evaluated at #2\t#1 evaluated at #2\t#1 evaluated at #2\n"
      "C\tcross-product\t2\t\xE2\x88\x9E\tinfix\t#all{ cross }\t#all{ cross }\tthe cross product of #all{, }#last{ and }\n"
      "C\tcartesian-product\t2\t\xE2\x88\x9E\tinfix\t#all{ cross }\t#all{ cross }\tthe cartesian product of #all{, }#last{ and }\n"
      "C\tdirect-product\t2\t\xE2\x88\x9E\tinfix\t#all{ direct product }\t#all{ direct product }\tthe direct product of #all{, }#last{ and }\n"
      "C\ttimes\t2\t\xE2\x88\x9E\tinfix\t#all{ times }\t#all{ times }\t#all{ times }\n"
      "C\tplus\t2\t\xE2\x88\x9E\tinfix\t#all{ plus }\t#all{ plus }\t#all{ plus }\n"
      "C\tminus\t2\t2\tinfix\t#1 minus #2\t#1 minus #2\t#1 minus #2\n"
      "C\tdivide\t2\t2\tinfix\t#1 divided by #2\t#1 divided by #2\t#1 divided by #2\n"
      "C\tgcd\t2\t\xE2\x88\x9E\tfunction\tgcd #all{ }\tgcd of #all{, }#last{ and }\tthe greatest common divisor of #all{, }#last{ and }\n"
      "C\tlcm\t2\t\xE2\x88\x9E\tfunction\tlcm #all{ }\tlcm of #all{, }#last{ and }\tthe least common multiple of #all{, }#last{ and }\n"
      "C\topen-interval\t2\t2\tfunction\topen interval #1 to #2\topen interval from #1 to #2\tthe open interval from #1 to #2\n"
      "C\tclosed-interval\t2\t2\tfunction\tclosed interval #1 to #2\tclosed interval from #1 to #2\tthe closed interval from #1 to #2\n"
      "C\topen-closed-interval\t2\t2\tfunction\topen closed interval #1 to #2\topen closed interval from #1 to #2\tthe open closed interval from #1 to #2\n"
      "C\tclosed-open-interval\t2\t2\tfunction\tclosed open interval #1 to #2\tclosed open interval from #1 to #2\tthe closed open interval from #1 to #2\n"
      "C\tpoint\t2\t\xE2\x88\x9E\tfunction\tpoint #all{ comma }\tpoint #all{ comma }\tthe point #all{ comma }\n"
      "C\tdivides\t2\t2\tinfix\t#1 divides #2\t#1 divides #2\t#1 divides #2\n"
      "C\tsuch-that\t2\t2\tinfix\t#1 such that #2\t#1 such that #2\t#1 such that #2\n"
      "C\tgiven\t2\t2\tinfix\t#1 given #2\t#1 given #2\t#1 given #2\n"
      "C\tconditional-probability\t2\t2\tfunction\tprobability #1 given #2\tprobability of #1 given #2\tthe probability of #1 given #2\n"
      "C\ttranspose\t1\t1\tpostfix\t#1 transpose\t#1 transpose\t#1 transpose\n"
      "C\tderivative\t1\t1\tfunction\tderivative #1\tderivative of #1\tthe derivative of #1\n"
      "C\tsecond-derivative\t1\t1\tfunction\tsecond derivative #1\tsecond derivative of #1\tthe second derivative of #1\n"
      "C\tpartial-derivative\t1\t1\tfunction\tpartial derivative #1\tpartial derivative of #1\tthe partial derivative of #1\n"
      "C\tline-segment\t1\t\xE2\x88\x9E\tfunction\tline segment #all{ }\tline segment #all{ }\tthe line segment #all{ }\n"
      "C\tmean\t1\t1\tfunction\tmean #1\tmean of #1\tthe mean of #1\n"
      "C\tbinomial\t2\t2\tfunction\t#1 choose #2\t#1 choose #2\t#1 choose #2\n"
      "C\tfactorial\t1\t1\tpostfix\t#1 factorial\t#1 factorial\t#1 factorial\n"
      "C\tnorm\t1\t1\tfunction\tnorm #1\tnorm of #1\tthe norm of #1\n"
      "C\tfloor\t1\t1\tfunction\tfloor #1\tfloor of #1\tthe floor of #1\n"
      "C\tceiling\t1\t1\tfunction\tceiling #1\tceiling of #1\tthe ceiling of #1\n"
      "C\tsum\t1\t\xE2\x88\x9E\tfunction\tsum #all{ }\tsum of #all{, }#last{ and }\tthe sum of #all{, }#last{ and }\n"
      "C\tproduct\t1\t\xE2\x88\x9E\tfunction\tproduct #all{ }\tproduct of #all{, }#last{ and }\tthe product of #all{, }#last{ and }\n"
      "C\tintegral\t1\t1\tfunction\tintegral #1\tintegral of #1\tthe integral of #1\n"
      "C\tlimit\t1\t1\tfunction\tlimit #1\tlimit of #1\tthe limit of #1\n"
      "C\tsine\t1\t1\tfunction\tsine #1\tsine of #1\tthe sine of #1\n"
      "C\tcosine\t1\t1\tfunction\tcosine #1\tcosine of #1\tthe cosine of #1\n"
      "C\ttangent\t1\t1\tfunction\ttangent #1\ttangent of #1\tthe tangent of #1\n"
      "C\tlogarithm\t1\t1\tfunction\tlog #1\tlog of #1\tthe logarithm of #1\n"
      "C\tnatural-logarithm\t1\t1\tfunction\tnatural log #1\tnatural log of #1\tthe natural logarithm of #1\n"
      "C\texponential\t1\t1\tfunction\texponential #1\texponential of #1\tthe exponential of #1\n"
      "C\tunion\t2\t\xE2\x88\x9E\tinfix\t#all{ union }\t#all{ union }\t#all{ union }\n"
      "C\tintersection\t2\t\xE2\x88\x9E\tinfix\t#all{ intersect }\t#all{ intersect }\t#all{ intersect }\n"
      "C\tsubset\t2\t2\tinfix\t#1 subset #2\t#1 is a subset of #2\t#1 is a subset of #2\n"
      "C\telement-of\t2\t2\tinfix\t#1 in #2\t#1 is an element of #2\t#1 is an element of #2\n"
      "C\tequals\t2\t\xE2\x88\x9E\tinfix\t#all{ equals }\t#all{ equals }\t#all{ equals }\n"
      "C\tnot-equals\t2\t2\tinfix\t#1 not equal to #2\t#1 is not equal to #2\t#1 is not equal to #2\n"
      "C\tapproximately-equals\t2\t2\tinfix\t#1 approximately #2\t#1 is approximately equal to #2\t#1 is approximately equal to #2\n"
      "C\tcomplex-conjugate\t1\t1\tfunction\tconjugate #1\tcomplex conjugate of #1\tthe complex conjugate of #1\n"
      "C\tprime\t1\t1\tpostfix\t#1 prime\t#1 prime\t#1 prime\n"
      "C\tinverse\t1\t1\tfunction\tinverse #1\tinverse of #1\tthe inverse of #1\n"
      "C\tvector\t1\t1\tfunction\tvector #1\tvector #1\tthe vector #1\n"
      "# character names\n"
      "X\t+\tplus\n"
      "X\t-\tminus\n"
      "X\t=\tequals\n"
      "X\t<\tless than\n"
      "X\t>\tgreater than\n"
      "X\t*\ttimes\n"
      "X\t/\tslash\n"
      "X\t|\tvertical bar\n"
      "X\t(\topen paren\n"
      "X\t)\tclose paren\n"
      "X\t[\topen bracket\n"
      "X\t]\tclose bracket\n"
      "X\t{\topen brace\n"
      "X\t}\tclose brace\n"
      "X\t,\tcomma\n"
      "X\t:\tcolon\n"
      "X\t;\tsemicolon\n"
      "X\t!\tfactorial\n"
      "X\t?\tquestion mark\n"
      "X\t%\tpercent\n"
      "X\t^\tcaret\n"
      "X\t~\ttilde\n"
      "X\t'\tprime\n"
      "X\t&\tampersand\n"
      "X\t.\tpoint\n"
      "X\t_\tunderscore\n"
      "X\t@\tat\n"
      "X\t\\\tbackslash\n"
      "X\t$\tdollar sign\n"
      "X\t#\tnumber sign\n"
      "X\t\xC3\x97\ttimes\n"
      "X\t\xC3\xB7\tdivided by\n"
      "X\t\xC2\xB7\tdot\n"
      "X\t\xE2\x8B\x85\tdot\n"
      "X\t\xE2\x88\x92\tminus\n"
      "X\t\xC2\xB1\tplus or minus\n"
      "X\t\xE2\x88\x93\tminus or plus\n"
      "X\t\xE2\x89\xA4\tless than or equal to\n"
      "X\t\xE2\x89\xA5\tgreater than or equal to\n"
      "X\t\xE2\x89\xA0\tnot equal to\n"
      "X\t\xE2\x89\x88\tapproximately equal to\n"
      "X\t\xE2\x89\xA1\tidentical to\n"
      "X\t\xE2\x88\x9E\tinfinity\n"
      "X\t\xE2\x88\x88\tin\n"
      "X\t\xE2\x88\x89\tnot in\n"
      "X\t\xE2\x8A\x82\tsubset of\n"
      "X\t\xE2\x8A\x86\tsubset of or equal to\n"
      "X\t\xE2\x88\xAA\tunion\n"
      "X\t\xE2\x88\xA9\tintersect\n"
      "X\t\xE2\x88\xA7\tand\n"
      "X\t\xE2\x88\xA8\tor\n"
      "X\t\xC2\xAC\tnot\n"
      "X\t\xE2\x88\x80\tfor all\n"
      "X\t\xE2\x88\x83\tthere exists\n"
      "X\t\xE2\x88\x82\tpartial\n"
      "X\t\xE2\x88\x87\tdel\n"
      "X\t\xE2\x88\x91\tsum\n"
      "X\t\xE2\x88\x8F\tproduct\n"
      "X\t\xE2\x88\xAB\tintegral\n"
      "X\t\xE2\x88\x9A\tsquare root\n"
      "X\t\xE2\x88\x9D\tproportional to\n"
      "X\t\xE2\x86\x92\tright arrow\n"
      "X\t\xE2\x86\x90\tleft arrow\n"
      "X\t\xE2\x87\x92\timplies\n"
      "X\t\xE2\x87\x94\tif and only if\n"
      "X\t\xE2\x86\xA6\tmaps to\n"
      "X\t\xE2\x88\x98\tcomposed with\n"
      "X\t\xE2\x8A\x97\ttensor\n"
      "X\t\xE2\x8A\x95\tdirect sum\n"
      "X\t\xE2\x88\xA3\tvertical bar\n"
      "X\t\xE2\x94\x82\tvertical bar\n"
      "X\t\xE2\x80\x96\tdouble vertical bar\n"
      "X\t\xE2\x9F\xA8\topen angle bracket\n"
      "X\t\xE2\x9F\xA9\tclose angle bracket\n"
      "X\t\xE2\x80\xA6\tdot dot dot\n"
      "X\t\xE2\x8B\xAF\tdot dot dot\n"
      "X\t\xE2\x80\xB2\tprime\n"
      "X\t\xE2\x80\xB3\tdouble prime\n"
      "X\t\xC2\xB0\tdegrees\n"
      "X\t\xC2\xAF\tline\n"
      "X\t\xE2\x80\xBE\tline\n"
      "X\t\xCE\xB1\talpha\n"
      "X\t\xCE\xB2\tbeta\n"
      "X\t\xCE\xB3\tgamma\n"
      "X\t\xCE\xB4\tdelta\n"
      "X\t\xCE\xB5\tepsilon\n"
      "X\t\xCE\xB8\ttheta\n"
      "X\t\xCE\xBB\tlambda\n"
      "X\t\xCE\xBC\tmu\n"
      "X\t\xCF\x80\tpi\n"
      "X\t\xCF\x81\trho\n"
      "X\t\xCF\x83\tsigma\n"
      "X\t\xCF\x84\ttau\n"
      "X\t\xCF\x86\tphi\n"
      "X\t\xCF\x89\tomega\n"
      "X\t\xCE\x93\tcapital gamma\n"
      "X\t\xCE\x94\tcapital delta\n"
      "X\t\xCE\x98\tcapital theta\n"
      "X\t\xCE\x9B\tcapital lambda\n"
      "X\t\xCE\xA0\tcapital pi\n"
      "X\t\xCE\xA3\tcapital sigma\n"
      "X\t\xCE\xA6\tcapital phi\n"
      "X\t\xCE\xA8\tcapital psi\n"
      "X\t\xCE\xA9\tcapital omega\n"
      "# unit names\n"
      "U\tm\tmeter\tmeters\n"
      "U\tkm\tkilometer\tkilometers\n"
      "U\tcm\tcentimeter\tcentimeters\n"
      "U\tmm\tmillimeter\tmillimeters\n"
      "U\tg\tgram\tgrams\n"
      "U\tkg\tkilogram\tkilograms\n"
      "U\tmg\tmilligram\tmilligrams\n"
      "U\ts\tsecond\tseconds\n"
      "U\tms\tmillisecond\tmilliseconds\n"
      "U\tmin\tminute\tminutes\n"
      "U\th\thour\thours\n"
      "U\tHz\thertz\thertz\n"
      "U\tN\tnewton\tnewtons\n"
      "U\tJ\tjoule\tjoules\n"
      "U\tW\twatt\twatts\n"
      "U\tV\tvolt\tvolts\n"
      "U\tA\tampere\tamperes\n"
      "U\tK\tkelvin\tkelvins\n"
      "U\tmol\tmole\tmoles\n"
      "U\tPa\tpascal\tpascals\n"
      "U\tL\tliter\tliters\n"
      "U\tmL\tmilliliter\tmilliliters\n"
      "U\tft\tfoot\tfeet\n"
      "U\tin\tinch\tinches\n"
      "U\tmi\tmile\tmiles\n"
      "U\tlb\tpound\tpounds\n"
      "# chemical elements\n"
      "E\tH\thydrogen\n"
      "E\tHe\thelium\n"
      "E\tLi\tlithium\n"
      "E\tBe\tberyllium\n"
      "E\tB\tboron\n"
      "E\tC\tcarbon\n"
      "E\tN\tnitrogen\n"
      "E\tO\toxygen\n"
      "E\tF\tfluorine\n"
      "E\tNe\tneon\n"
      "E\tNa\tsodium\n"
      "E\tMg\tmagnesium\n"
      "E\tAl\taluminum\n"
      "E\tSi\tsilicon\n"
      "E\tP\tphosphorus\n"
      "E\tS\tsulfur\n"
      "E\tCl\tchlorine\n"
      "E\tAr\targon\n"
      "E\tK\tpotassium\n"
      "E\tCa\tcalcium\n"
      "E\tSc\tscandium\n"
      "E\tTi\ttitanium\n"
      "E\tV\tvanadium\n"
      "E\tCr\tchromium\n"
      "E\tMn\tmanganese\n"
      "E\tFe\tiron\n"
      "E\tCo\tcobalt\n"
      "E\tNi\tnickel\n"
      "E\tCu\tcopper\n"
      "E\tZn\tzinc\n"
      "E\tGa\tgallium\n"
      "E\tGe\tgermanium\n"
      "E\tAs\tarsenic\n"
      "E\tSe\tselenium\n"
      "E\tBr\tbromine\n"
      "E\tKr\tkrypton\n"
      "E\tRb\trubidium\n"
      "E\tSr\tstrontium\n"
      "E\tY\tyttrium\n"
      "E\tZr\tzirconium\n"
      "E\tNb\tniobium\n"
      "E\tMo\tmolybdenum\n"
      "E\tTc\ttechnetium\n"
      "E\tRu\truthenium\n"
      "E\tRh\trhodium\n"
      "E\tPd\tpalladium\n"
      "E\tAg\tsilver\n"
      "E\tCd\tcadmium\n"
      "E\tIn\tindium\n"
      "E\tSn\ttin\n"
      "E\tSb\tantimony\n"
      "E\tTe\ttellurium\n"
      "E\tI\tiodine\n"
      "E\tXe\txenon\n"
      "E\tCs\tcesium\n"
      "E\tBa\tbarium\n"
      "E\tLa\tlanthanum\n"
      "E\tCe\tcerium\n"
      "E\tPr\tpraseodymium\n"
      "E\tNd\tneodymium\n"
      "E\tPm\tpromethium\n"
      "E\tSm\tsamarium\n"
      "E\tEu\teuropium\n"
      "E\tGd\tgadolinium\n"
      "E\tTb\tterbium\n"
      "E\tDy\tdysprosium\n"
      "E\tHo\tholmium\n"
      "E\tEr\terbium\n"
      "E\tTm\tthulium\n"
      "E\tYb\tytterbium\n"
      "E\tLu\tlutetium\n"
      "E\tHf\thafnium\n"
      "E\tTa\ttantalum\n"
      "E\tW\ttungsten\n"
      "E\tRe\trhenium\n"
      "E\tOs\tosmium\n"
      "E\tIr\tiridium\n"
      "E\tPt\tplatinum\n"
      "E\tAu\tgold\n"
      "E\tHg\tmercury\n"
      "E\tTl\tthallium\n"
      "E\tPb\tlead\n"
      "E\tBi\tbismuth\n"
      "E\tPo\tpolonium\n"
      "E\tAt\tastatine\n"
      "E\tRn\tradon\n"
      "E\tFr\tfrancium\n"
      "E\tRa\tradium\n"
      "E\tAc\tactinium\n"
      "E\tTh\tthorium\n"
      "E\tPa\tprotactinium\n"
      "E\tU\turanium\n"
      "E\tNp\tneptunium\n"
      "E\tPu\tplutonium\n"
      "E\tAm\tamericium\n"
      "E\tCm\tcurium\n"
      "E\tBk\tberkelium\n"
      "E\tCf\tcalifornium\n"
      "E\tEs\teinsteinium\n"
      "E\tFm\tfermium\n"
      "E\tMd\tmendelevium\n"
      "E\tNo\tnobelium\n"
      "E\tLr\tlawrencium\n"
      "E\tRf\trutherfordium\n"
      "E\tDb\tdubnium\n"
      "E\tSg\tseaborgium\n"
      "E\tBh\tbohrium\n"
      "E\tHs\thassium\n"
      "E\tMt\tmeitnerium\n"
      "E\tDs\tdarmstadtium\n"
      "E\tRg\troentgenium\n"
      "E\tCn\tcopernicium\n"
      "E\tNh\tnihonium\n"
      "E\tFl\tflerovium\n"
      "E\tMc\tmoscovium\n"
      "E\tLv\tlivermorium\n"
      "E\tTs\ttennessine\n"
      "E\tOg\toganesson\n";
  return kText;
}

}  // namespace mathspeak

// Published values for Γ_3, Γ_4 and Γ_5, transcribed with thousands
// separators removed. Symbolic R-index forms are expanded with the constants
// printed next to them.

#include <utility>

#include "graphlab/claims.hpp"

namespace graphlab {

namespace {

BigInt power(unsigned long base, unsigned exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigRational ratio(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

// (sum of c_i sqrt(d_i)) / denominator
RadicalSum radical(long denominator, std::initializer_list<std::pair<long, std::uint64_t>> terms) {
  std::vector<std::pair<BigRational, std::uint64_t>> scaled;
  for (const auto& [coefficient, radicand] : terms) {
    scaled.emplace_back(ratio(coefficient, denominator), radicand);
  }
  return RadicalSum::from_terms(scaled);
}

// Constants printed beside the Γ_3 R-index values.
struct SmallConstants {
  BigInt s = 7 * power(4, 6) + 31;
  BigInt t = power(7, 2) * power(4, 5) + 34;
};

// Constants printed beside the Γ_4 and Γ_5 R-index values. Only s and t are
// printed under Γ_4; w is printed under Γ_5.
struct LargeConstants {
  BigInt s = 31 * power(16, 10) * power(10, 20) + 391;
  BigInt t = power(31, 2) * power(16, 9) * power(10, 20) + 406;
  BigInt w = power(31, 2) * power(16, 10) * power(10, 19) + 412;
};

Claim make(std::string id, unsigned k, IndexId index, std::string printed, IndexValue claimed, std::string source,
           std::string note = {}) {
  return Claim{std::move(id), k, index, std::move(printed), std::move(claimed), std::move(source), std::move(note)};
}

std::vector<Claim> build_registry() {
  const SmallConstants c3;
  const LargeConstants big;
  const std::string small_rs = " where s=7\\cdot{4^6}+31 and t={7^2}\\cdot{4^5}+34";
  const std::string large_st = " where s=31\\cdot {16^{10}}\\cdot{10^{20}}+391, t={31^2}\\cdot {16^9}\\cdot{10^{20}}+406";
  const std::string large_w = " and w={31^2}\\cdot {16^10}\\cdot{10^19}+412";

  std::vector<Claim> claims;

  // Γ_3: distance-matrix example and closed-form remark.
  claims.push_back(make("gamma3.wiener", 3, IndexId::wiener, "W(\\Gamma_3)=37", 37,
                        "closed-form remark for Γ3, '$W(\\Gamma_3)=37$'"));
  claims.push_back(make("gamma3.hyper_wiener", 3, IndexId::hyper_wiener, "WW(\\Gamma_3)=46", 46,
                        "closed-form remark for Γ3, '$WW(\\Gamma_3)=46$'"));
  claims.push_back(make("gamma3.harary", 3, IndexId::harary, "H(\\Gamma_3)=23.5", ratio(47, 2),
                        "closed-form remark for Γ3, '$H(\\Gamma_3)=23.5$'"));

  // Γ_3 theorem.
  claims.push_back(make("gamma3.balaban", 3, IndexId::balaban,
                        "J(\\Gamma_3)=\\frac{19}{26}\\biggl[\\frac{52+12\\sqrt{70}}{35}\\biggr]",
                        radical(35, {{52, 1}, {12, 70}}).scaled(ratio(19, 26)),
                        "Γ3 theorem, 'J(\\Gamma_3)=\\frac{19}{26}\\biggl[\\frac{52+12\\sqrt{70}}{35}\\biggr]'",
                        "printed prefactor 19/26 is half of m/(mu+1) = 19/13; the bracket carries the factor 2, so the "
                        "full printed product is compared"));
  claims.push_back(make("gamma3.degree_distance", 3, IndexId::degree_distance, "DD(\\Gamma_3)=338", 338,
                        "Γ3 theorem, 'DD(\\Gamma_3)=338'"));
  claims.push_back(make("gamma3.gutman", 3, IndexId::gutman, "Gut(\\Gamma_3)=769", 769,
                        "Γ3 theorem, 'Gut(\\Gamma_3)=769'"));
  claims.push_back(make("gamma3.harmonic", 3, IndexId::harmonic, "Hm(\\Gamma_3)=\\frac{589}{154}", ratio(589, 154),
                        "Γ3 theorem, 'Hm(\\Gamma_3)=\\frac{589}{154}'"));
  claims.push_back(make("gamma3.r1", 3, IndexId::r1, "{R^1}(\\Gamma_3)=2s^2+6t^2" + small_rs,
                        BigInt(2 * c3.s * c3.s + 6 * c3.t * c3.t), "Γ3 theorem, '{R^1}(\\Gamma_3)=2s^2+6t^2'"));
  claims.push_back(make("gamma3.r2", 3, IndexId::r2, "{R^2}(\\Gamma_3)=s^2+12st+15t^2" + small_rs,
                        BigInt(c3.s * c3.s + 12 * c3.s * c3.t + 15 * c3.t * c3.t),
                        "Γ3 theorem, '{R^2}(\\Gamma_3)=s^2+12st+15t^2'",
                        "derivation uses neighbour sums 3t(2s+5t) for the degree-4 vertices"));
  claims.push_back(make("gamma3.r3", 3, IndexId::r3, "{R^3}(\\Gamma_3)=14s+42t" + small_rs,
                        BigInt(14 * c3.s + 42 * c3.t), "Γ3 theorem, '{R^3}(\\Gamma_3)=14s+42t'",
                        "derivation uses neighbour sums 2(t+s)+5(t+t) for the degree-4 vertices"));
  claims.push_back(make("gamma3.randic", 3, IndexId::randic,
                        "R(\\Gamma_3)=\\biggl[\\frac{23+12\\sqrt{7}}{14}\\biggr]", radical(14, {{23, 1}, {12, 7}}),
                        "Γ3 theorem, 'R(\\Gamma_3)=\\biggl[\\frac{23+12\\sqrt{7}}{14}\\biggr]'"));
  claims.push_back(make("gamma3.zagreb2", 3, IndexId::zagreb2, "{M_2}(\\Gamma_3)=481", 481,
                        "Γ3 theorem, '{M_2}(\\Gamma_3)=481'"));
  claims.push_back(make("gamma3.mostar", 3, IndexId::mostar, "Mo(\\Gamma_3)=36", 36, "Γ3 theorem, 'Mo(\\Gamma_3)=36'"));

  // Γ_4 theorem.
  const std::string r4_note =
      "printed s and t are the Γ5-scale constants; w is not printed under this theorem, the value printed under "
      "the Γ5 theorem is substituted";
  claims.push_back(make(
      "gamma4.balaban", 4, IndexId::balaban,
      "J(\\Gamma_4)=\\frac{65}{102}\\biggl[\\frac{202+16\\sqrt{330}+66\\sqrt{10}+60\\sqrt{33}}{165}\\biggr]",
      radical(165, {{202, 1}, {16, 330}, {66, 10}, {60, 33}}).scaled(ratio(65, 102)),
      "Γ4 theorem, 'J(\\Gamma_4)=\\frac{65}{102}\\biggl[\\frac{202+16\\sqrt{330}+66\\sqrt{10}+60\\sqrt{33}}{165}"
      "\\biggr]'"));
  claims.push_back(make("gamma4.degree_distance", 4, IndexId::degree_distance, "DD(\\Gamma_4)=3 712", 3712,
                        "Γ4 theorem, 'DD(\\Gamma_4)=3 712'"));
  claims.push_back(make("gamma4.gutman", 4, IndexId::gutman, "Gut(\\Gamma_4)=10 557", 10557,
                        "Γ4 theorem, 'Gut(\\Gamma_4)=10 557'; the proof's final line reads '=3712'",
                        "theorem and proof disagree; see gamma4.gutman_proof"));
  claims.push_back(make("gamma4.gutman_proof", 4, IndexId::gutman, "Gut(\\Gamma_4)=...=3712", 3712,
                        "Γ4 proof of the Gutman index, final line '=3712'; the theorem states 'Gut(\\Gamma_4)=10 557'",
                        "theorem and proof disagree; see gamma4.gutman"));
  claims.push_back(make("gamma4.harmonic", 4, IndexId::harmonic, "Hm(\\Gamma_4)=\\frac{36 367}{4 830}",
                        ratio(36367, 4830), "Γ4 theorem, 'Hm(\\Gamma_4)=\\frac{36 367}{4 830}'"));
  claims.push_back(make("gamma4.r1", 4, IndexId::r1, "{R^1}(\\Gamma_4)=2s^2+8t^2+6w^2" + large_st + large_w,
                        BigInt(2 * big.s * big.s + 8 * big.t * big.t + 6 * big.w * big.w),
                        "Γ4 theorem, '{R^1}(\\Gamma_4)=2s^2+8t^2+6w^2'", r4_note));
  claims.push_back(make("gamma4.r2", 4, IndexId::r2,
                        "{R^2}(\\Gamma_4)=s^2+16st+6sw+15t^2+24tw" + large_st + large_w,
                        BigInt(big.s * big.s + 16 * big.s * big.t + 6 * big.s * big.w + 15 * big.t * big.t +
                               24 * big.t * big.w),
                        "Γ4 theorem, '{R^2}(\\Gamma_4)=s^2+16st+6sw+15t^2+24tw'", r4_note));
  claims.push_back(make("gamma4.r3", 4, IndexId::r3, "{R^3}(\\Gamma_4)=24s+70t+30w" + large_st + large_w,
                        BigInt(24 * big.s + 70 * big.t + 30 * big.w), "Γ4 theorem, '{R^3}(\\Gamma_4)=24s+70t+30w'",
                        r4_note));
  claims.push_back(make("gamma4.randic", 4, IndexId::randic,
                        "R(\\Gamma_4)=\\biggl[\\frac{47+60\\sqrt{3}+12\\sqrt{10}+8\\sqrt{30}}{30}\\biggr]",
                        radical(30, {{47, 1}, {60, 3}, {12, 10}, {8, 30}}),
                        "Γ4 theorem, 'R(\\Gamma_4)=\\biggl[\\frac{47+60\\sqrt{3}+12\\sqrt{10}+8\\sqrt{30}}{30}\\biggr]'"));
  claims.push_back(make("gamma4.zagreb2", 4, IndexId::zagreb2, "{M_2}(\\Gamma_4)=3993", 3993,
                        "Γ4 theorem, '{M_2}(\\Gamma_4)=3993'"));
  claims.push_back(make("gamma4.mostar", 4, IndexId::mostar, "Mo(\\Gamma_4)=268", 268, "Γ4 theorem, 'Mo(\\Gamma_4)=268'"));

  // Γ_5 theorem.
  claims.push_back(make(
      "gamma5.balaban", 5, IndexId::balaban,
      "J(\\Gamma_5)=\\frac{211}{362}\\biggl[\\frac{19353+260\\sqrt{1426}+920\\sqrt{403}+1550\\sqrt{598}}{9269}\\biggr]",
      radical(9269, {{19353, 1}, {260, 1426}, {920, 403}, {1550, 598}}).scaled(ratio(211, 362)),
      "Γ5 theorem, 'J(\\Gamma_5)=\\frac{211}{362}\\biggl[\\frac{19353+260\\sqrt{1426}+920\\sqrt{403}+1550\\sqrt{598}}"
      "{9269}\\biggr]'"));
  claims.push_back(make("gamma5.degree_distance", 5, IndexId::degree_distance, "DD(\\Gamma_5)=19 682", 19682,
                        "Γ5 theorem, 'DD(\\Gamma_5)=19 682'"));
  claims.push_back(make("gamma5.gutman", 5, IndexId::gutman, "Gut(\\Gamma_5)=124 201", 124201,
                        "Γ5 theorem, 'Gut(\\Gamma_5)=124 201'"));
  claims.push_back(make("gamma5.harmonic", 5, IndexId::harmonic, "Hm(\\Gamma_5)=\\frac{45901681}{3106324}",
                        ratio(45901681, 3106324), "Γ5 theorem, 'Hm(\\Gamma_5)=\\frac{45901681}{3106324}'"));
  claims.push_back(make("gamma5.r1", 5, IndexId::r1, "{R^1}(\\Gamma_5)=2s^2+10t^2+20w^2" + large_st + large_w,
                        BigInt(2 * big.s * big.s + 10 * big.t * big.t + 20 * big.w * big.w),
                        "Γ5 theorem, '{R^1}(\\Gamma_5)=2s^2+10t^2+20w^2'"));
  claims.push_back(make("gamma5.r2", 5, IndexId::r2,
                        "{R^2}(\\Gamma_5)=s^2+20st+30sw+20t^2+100tw+30w^2" + large_st + large_w,
                        BigInt(big.s * big.s + 20 * big.s * big.t + 30 * big.s * big.w + 20 * big.t * big.t +
                               100 * big.t * big.w + 30 * big.w * big.w),
                        "Γ5 theorem, '{R^2}(\\Gamma_5)=s^2+20st+30sw+20t^2+100tw+30w^2'"));
  claims.push_back(make("gamma5.r3", 5, IndexId::r3, "{R^3}(\\Gamma_5)=52s+160t+190w" + large_st + large_w,
                        BigInt(52 * big.s + 160 * big.t + 190 * big.w), "Γ5 theorem, '{R^3}(\\Gamma_5)=52s+160t+190w'"));
  claims.push_back(make("gamma5.randic", 5, IndexId::randic,
                        "R(\\Gamma_5)=\\biggl[\\frac{531+20\\sqrt{31}+16\\sqrt{310}+310\\sqrt{10}}{124}\\biggr]",
                        radical(124, {{531, 1}, {20, 31}, {16, 310}, {310, 10}}),
                        "Γ5 theorem, 'R(\\Gamma_5)=\\biggl[\\frac{531+20\\sqrt{31}+16\\sqrt{310}+310\\sqrt{10}}{124}"
                        "\\biggr]'"));
  claims.push_back(make("gamma5.zagreb2", 5, IndexId::zagreb2, "{M_2}(\\Gamma_4)=47 401", 47401,
                        "Γ5 theorem, '{M_2}(\\Gamma_4)=47 401'",
                        "printed with subscript Γ4 under the Γ5 theorem; the accompanying proof computes M_2(Γ5)"));
  claims.push_back(make("gamma5.mostar", 5, IndexId::mostar, "Mo(\\Gamma_5)=1 720", 1720,
                        "Γ5 theorem, 'Mo(\\Gamma_5)=1 720.'"));
  return claims;
}

}  // namespace

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

}  // namespace graphlab

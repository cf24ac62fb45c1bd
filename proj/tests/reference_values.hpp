#pragma once

// Generated by tests/oracles/make_reference.py (mpmath, 40 digits).

#include <vector>

#include "expskew/distributions.hpp"

namespace reference {

struct ExpectileValue {
  expskew::DistributionSpec dist;
  double alpha;
  double value;
};

struct ScalarValue {
  expskew::DistributionSpec dist;
  double value;
};

struct CurveValue {
  expskew::DistributionSpec dist;
  double param;
  double value;
};

using expskew::DistributionSpec;

inline const std::vector<ExpectileValue>& expectiles() {
  static const std::vector<ExpectileValue> v{
      {DistributionSpec::gamma(0.1, 1.0), 0.01, 0.0019538414907085850268},
      {DistributionSpec::gamma(0.1, 1.0), 0.1, 0.016483538382827633398},
      {DistributionSpec::gamma(0.1, 1.0), 0.25, 0.041863149563784218692},
      {DistributionSpec::gamma(0.1, 1.0), 0.4, 0.073175024757138859303},
      {DistributionSpec::gamma(0.5, 1.0), 0.01, 0.034327370811288413275},
      {DistributionSpec::gamma(0.5, 1.0), 0.1, 0.15242911480408270268},
      {DistributionSpec::gamma(0.5, 1.0), 0.25, 0.28422962103112518376},
      {DistributionSpec::gamma(0.5, 1.0), 0.4, 0.40900744652809875209},
      {DistributionSpec::gamma(2.0, 1.0), 0.01, 0.48967580056281744948},
      {DistributionSpec::gamma(2.0, 1.0), 0.1, 1.0535267000702163674},
      {DistributionSpec::gamma(2.0, 1.0), 0.25, 1.4669498390753711899},
      {DistributionSpec::gamma(2.0, 1.0), 0.4, 1.7889033053863453769},
      {DistributionSpec::gamma(10.0, 1.0), 0.01, 5.5408120972561343448},
      {DistributionSpec::gamma(10.0, 1.0), 0.1, 7.5375690920460242072},
      {DistributionSpec::gamma(10.0, 1.0), 0.25, 8.6938635316163930499},
      {DistributionSpec::gamma(10.0, 1.0), 0.4, 9.5016393873672757012},
      {DistributionSpec::gamma(2.0, 3.0), 0.01, 1.4690274016884523484},
      {DistributionSpec::gamma(2.0, 3.0), 0.1, 3.1605801002106491021},
      {DistributionSpec::gamma(2.0, 3.0), 0.25, 4.4008495172261135696},
      {DistributionSpec::gamma(2.0, 3.0), 0.4, 5.3667099161590361308},
      {DistributionSpec::lognormal(0.0, 2.25), 0.01, 0.29011966505374654695},
      {DistributionSpec::lognormal(0.0, 2.25), 0.1, 0.94462776186484528382},
      {DistributionSpec::lognormal(0.0, 2.25), 0.25, 1.6936175746614381717},
      {DistributionSpec::lognormal(0.0, 2.25), 0.4, 2.4680852052393965786},
      {DistributionSpec::lognormal(0.0, 0.01), 0.01, 0.84647706603263469776},
      {DistributionSpec::lognormal(0.0, 0.01), 0.1, 0.92207996684955368375},
      {DistributionSpec::lognormal(0.0, 0.01), 0.25, 0.96212155167152415423},
      {DistributionSpec::lognormal(0.0, 0.01), 0.4, 0.98890301340169728421},
      {DistributionSpec::lognormal(0.5, 1.0), 0.01, 0.5220848031373305466},
      {DistributionSpec::lognormal(0.5, 1.0), 0.1, 1.1886436688087292687},
      {DistributionSpec::lognormal(0.5, 1.0), 0.25, 1.7881243396507063623},
      {DistributionSpec::lognormal(0.5, 1.0), 0.4, 2.3275860965069153448},
      {DistributionSpec::student_t(5.0), 0.01, -2.5028666986116389541},
      {DistributionSpec::student_t(5.0), 0.1, -1.0767821021123046274},
      {DistributionSpec::student_t(5.0), 0.25, -0.52554456662532384896},
      {DistributionSpec::student_t(5.0), 0.4, -0.19260951974454099162},
      {DistributionSpec::student_t(3.0), 0.01, -3.6255655170573629891},
      {DistributionSpec::student_t(3.0), 0.1, -1.3197869913370122832},
      {DistributionSpec::student_t(3.0), 0.25, -0.61894634236703149991},
      {DistributionSpec::student_t(3.0), 0.4, -0.22420638758819581835},
      {DistributionSpec::normal(1.0, 4.0), 0.01, -2.4348737192295638296},
      {DistributionSpec::normal(1.0, 4.0), 0.1, -0.72318422483165762335},
      {DistributionSpec::normal(1.0, 4.0), 0.25, 0.12734687241269682248},
      {DistributionSpec::normal(1.0, 4.0), 0.4, 0.67668498650829112673},
  };
  return v;
}

inline const std::vector<ScalarValue>& l_skewness() {
  static const std::vector<ScalarValue> v{
      {DistributionSpec::gamma(0.1, 1.0), 0.7893863070710398034},
      {DistributionSpec::gamma(0.5, 1.0), 0.46410161513775458705},
      {DistributionSpec::gamma(2.0, 1.0), 0.23456790123456790123},
      {DistributionSpec::gamma(10.0, 1.0), 0.10350338014390298545},
      {DistributionSpec::lognormal(0.0, 2.25), 0.64880994081862685091},
      {DistributionSpec::lognormal(0.0, 0.01), 0.048833116784438476454},
  };
  return v;
}

inline const std::vector<CurveValue>& skewness_function() {
  static const std::vector<CurveValue> v{
      {DistributionSpec::gamma(2.0, 1.0), 0.5, 0.17685386657608035399},
      {DistributionSpec::gamma(2.0, 1.0), 1, 0.14529701832499275011},
      {DistributionSpec::gamma(2.0, 1.0), 2, 0.054946916666202540881},
      {DistributionSpec::gamma(0.5, 1.0), 0.5, 0.25780829037030957268},
      {DistributionSpec::gamma(0.5, 1.0), 1, 0.070915813140218874956},
      {DistributionSpec::gamma(0.5, 1.0), 2, 0.011265137727347953851},
      {DistributionSpec::lognormal(0.0, 1.0), 0.5, 0.36645632578560548246},
      {DistributionSpec::lognormal(0.0, 1.0), 1, 0.31382718572506450853},
      {DistributionSpec::lognormal(0.0, 1.0), 2, 0.13838475347359075855},
      {DistributionSpec::student_t(5.0), 0.5, 0.0},
      {DistributionSpec::student_t(5.0), 1, 0.0},
      {DistributionSpec::student_t(5.0), 2, 0.0},
  };
  return v;
}

}  // namespace reference


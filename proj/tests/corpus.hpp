#pragma once

#include <string>
#include <vector>

#include "termpred/parser.hpp"
#include "termpred/predict.hpp"

namespace corpus {

inline const char* kP0 =
    "p :- \\+ q.\n"
    "q.\n"
    "q :- q.\n";

inline const char* kP1 =
    "p(a).\n"
    "p(f(X)) :- p(X).\n";

inline const char* kP2 =
    "append([],X,X).\n"
    "append([X|Y],U,[X|Z]) :- append(Y,U,Z).\n";

inline const char* kP3 =
    "mult(s(X),Y,Z) :- mult(X,Y,U), add(U,Y,Z).\n"
    "mult(0,Y,0).\n"
    "add(s(X),Y,s(Z)) :- add(X,Y,Z).\n"
    "add(0,Y,Y).\n";

inline const char* kP4 =
    "member1(X,[Y|Xs]) :- member1(X,Xs).\n"
    "member1(X,[X|Xs]).\n"
    "subset1([X|Xs],Ys) :- member1(X,Ys), subset1(Xs,Ys).\n"
    "subset1([],Ys).\n";

inline const char* kP5 =
    "p(X) :- q(f(Y)), p(Y).\n"
    "p(g(X)) :- p(X).\n"
    "q(g(Y)).\n";

inline const char* kP6 =
    "f(X) :- g(s(s(s(X)))).\n"
    "f(s(X)) :- f(X).\n"
    "g(s(s(s(s(X))))) :- f(X).\n";

inline std::string p7_text() {
  std::string tower = "0";
  for (int i = 0; i < 100; ++i) tower = "s(" + tower + ")";
  return "p(f(X),Y) :- p(X,s(Y)).\np(Z," + tower + ") :- q.\nq :- q.\n";
}

struct GoldenCase {
  const char* program_name;
  std::string program_text;
  std::string query;
  termpred::Verdict expected;
};

// Expected verdicts at r = 3.
inline std::vector<GoldenCase> golden_cases() {
  using termpred::Verdict;
  const Verdict T = Verdict::Terminating;
  const Verdict PT = Verdict::PredictedTerminating;
  const Verdict PNT = Verdict::PredictedNonTerminating;
  return {
      {"p0", kP0, "p", T},
      {"p1", kP1, "p(i)", PT},
      {"p1", kP1, "p(X)", PNT},
      {"p2", kP2, "append(i,o,o)", PT},
      {"p2", kP2, "append(o,i,o)", PNT},
      {"p2", kP2, "append(o,o,i)", PT},
      {"p3", kP3, "add(i,o,o)", PT},
      {"p3", kP3, "add(o,i,o)", PNT},
      {"p3", kP3, "add(o,o,i)", PT},
      {"p3", kP3, "add(i,i,o)", PT},
      {"p3", kP3, "add(i,o,i)", PT},
      {"p3", kP3, "add(o,i,i)", PT},
      {"p3", kP3, "add(i,i,i)", PT},
      {"p3", kP3, "mult(i,o,o)", PNT},
      {"p3", kP3, "mult(o,i,o)", PNT},
      {"p3", kP3, "mult(o,o,i)", PNT},
      {"p3", kP3, "mult(i,i,o)", PT},
      {"p3", kP3, "mult(i,o,i)", PNT},
      {"p3", kP3, "mult(o,i,i)", PNT},
      {"p3", kP3, "mult(i,i,i)", PT},
      {"p4", kP4, "subset1(o,i)", PNT},
      {"p5", kP5, "p(i)", PT},
      {"p6", kP6, "f(i)", PT},
      {"p7", p7_text(), "p(i,0)", PT},
  };
}

inline termpred::PredictorConfig test_config(unsigned r,
                                             termpred::Pruning pruning) {
  termpred::PredictorConfig cfg;
  cfg.r = r;
  cfg.pruning = pruning;
  cfg.limits.max_nodes = 200'000;
  cfg.limits.timeout_seconds = 20.0;
  return cfg;
}

}  // namespace corpus

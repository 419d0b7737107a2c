#pragma once

#include <string>
#include <vector>

namespace tabtype::verify {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // counts covered, first counterexample, ...
};

using Suite = std::vector<CheckLine>;

// Each suite covers one of the headline identities; max_n bounds the sweep
// size (each suite clamps it to its own safe default when max_n <= 0).
Suite suite_oracle(int max_n);       // |Tab(T_sigma)| == |Red(sigma)|, plus random S_{max_n+1}
Suite suite_balanced(int max_n);     // |Bal| == |SYT| == hook length formula
Suite suite_hook(int max_n);         // hook shapes: every type counts f^lambda
Suite suite_expectation(int max_n);  // sum over types == |S|!, mean == n!/prod h
Suite suite_exchange(int max_n);     // vexillary shape/count under full exchange
Suite suite_swap(int samples);       // transported tableau sets match
Suite suite_bridge(int max_n);       // falling construction round trip
Suite suite_equivalence(int max_n);  // equal exchanged types <=> equal bar forms
Suite suite_schur(int max_n);        // sst polynomial == classical Schur
Suite suite_partial(int max_n);      // partial fills, corner sums, position of 1

// name in {oracle, balanced, hook, expectation, exchange, swap, bridge,
// equivalence, schur, partial, all}.  Throws "malformed-input" on others.
Suite run_suite(const std::string& name, int max_n);

bool all_pass(const Suite& s);

}  // namespace tabtype::verify

#include "tabtype/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tabtype/bridge.hpp"
#include "tabtype/error.hpp"
#include "tabtype/exchange.hpp"
#include "tabtype/filling.hpp"
#include "tabtype/numbers.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"
#include "tabtype/schur.hpp"

namespace tabtype::verify {

namespace {

// Deterministic xorshift64; std::mt19937 + distributions would be fine for
// randomness but their draw sequences are not pinned across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(rng.below(i + 1))]);
  return Permutation(std::move(w));
}

std::string one_line_str(const Permutation& p) {
  std::string s = "[";
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) s += ",";
    s += std::to_string(p.apply(i));
  }
  return s + "]";
}

std::string parts_str(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

int clamp_n(int max_n, int dflt) { return max_n <= 0 ? dflt : max_n; }

}  // namespace

Suite suite_oracle(int max_n) {
  max_n = clamp_n(max_n, 5);
  Suite out;
  for (int n = 1; n <= max_n; ++n) {
    std::string bad;
    int checked = 0;
    for (const Permutation& sigma : all_permutations(n)) {
      ++checked;
      if (count_tableaux(type_of_permutation(sigma)) != count_reduced_words(sigma)) {
        bad = one_line_str(sigma);
        break;
      }
    }
    out.push_back({"tableau count equals reduced-word count, all of S_" + std::to_string(n),
                   bad.empty(),
                   bad.empty() ? std::to_string(checked) + " permutations" : "fails at " + bad});
  }
  Rng rng(0x0A11CE5EEDull);
  std::string bad;
  const int samples = 50;
  for (int i = 0; i < samples && bad.empty(); ++i) {
    Permutation sigma = random_permutation(max_n + 1, rng);
    if (count_tableaux(type_of_permutation(sigma)) != count_reduced_words(sigma))
      bad = one_line_str(sigma);
  }
  out.push_back({"tableau count equals reduced-word count, sampled S_" + std::to_string(max_n + 1),
                 bad.empty(),
                 bad.empty() ? std::to_string(samples) + " samples" : "fails at " + bad});
  return out;
}

Suite suite_balanced(int max_n) {
  max_n = clamp_n(max_n, 8);
  Suite out;
  for (int n = 1; n <= max_n; ++n) {
    std::string bad;
    int checked = 0;
    for (const Partition& lambda : partitions_of(n)) {
      ++checked;
      BigInt f = lambda.hook_length_formula();
      std::size_t nbal = enumerate_tableaux(balanced_type(lambda.ferrers())).size();
      std::size_t nstd = enumerate_tableaux(standard_type(lambda.ferrers())).size();
      if (BigInt(nbal) != f || BigInt(nstd) != f) {
        bad = parts_str(lambda) + " balanced " + std::to_string(nbal) + " standard " +
              std::to_string(nstd) + " formula " + f.str();
        break;
      }
    }
    out.push_back({"balanced and standard counts match the hook formula, partitions of " +
                       std::to_string(n),
                   bad.empty(),
                   bad.empty() ? std::to_string(checked) + " partitions" : bad});
  }
  return out;
}

Suite suite_hook(int max_n) {
  max_n = clamp_n(max_n, 7);
  Suite out;
  for (int total = 1; total <= max_n; ++total) {
    std::string bad;
    long long types_checked = 0;
    for (int k = 1; k <= total && bad.empty(); ++k) {
      int p = total - k;
      std::vector<int> parts{k};
      parts.insert(parts.end(), static_cast<std::size_t>(p), 1);
      Partition lambda(std::move(parts));
      BigInt f = lambda.hook_length_formula();
      for_each_type(lambda.ferrers(), [&](const TypeFilling& t) {
        ++types_checked;
        if (count_tableaux(t) != f) {
          bad = "a type on " + parts_str(lambda) + " misses " + f.str();
          return false;
        }
        return true;
      });
    }
    out.push_back({"every type on a hook shape with " + std::to_string(total) +
                       " boxes counts like the standard one",
                   bad.empty(),
                   bad.empty() ? std::to_string(types_checked) + " types" : bad});
  }
  return out;
}

namespace {

bool is_ferrers(const Diagram& d) {
  if (d.empty()) return true;
  std::vector<int> lens = d.row_lengths();
  for (std::size_t i = 0; i + 1 < lens.size(); ++i)
    if (lens[i] < lens[i + 1]) return false;
  if (!lens.empty() && lens.back() == 0) return false;
  for (const Box& b : d.boxes())
    if (b.col > 1 && !d.contains({b.row, b.col - 1})) return false;
  return d.max_row() == static_cast<int>(lens.size());
}

CheckLine expectation_line(const std::string& name, const std::vector<Diagram>& diagrams) {
  std::string bad;
  for (const Diagram& d : diagrams) {
    BigInt sum = 0;
    for_each_type(d, [&](const TypeFilling& t) {
      sum += count_tableaux(t);
      return true;
    });
    BigInt fact = factorial(static_cast<int>(d.size()));
    TypeStatistics stats = type_statistics(d);
    if (sum != fact || stats.mean != Rational(fact, stats.type_count)) {
      bad = "diagram with " + std::to_string(d.size()) + " boxes: sum " + sum.str() + " vs " +
            fact.str();
      break;
    }
  }
  return {name, bad.empty(), bad.empty() ? std::to_string(diagrams.size()) + " diagrams" : bad};
}

}  // namespace

Suite suite_expectation(int max_n) {
  max_n = clamp_n(max_n, 5);
  Suite out;
  std::vector<Diagram> ferrers;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : partitions_of(n)) ferrers.push_back(lambda.ferrers());
  out.push_back(expectation_line(
      "type counts add up to n! with exact mean, Ferrers shapes up to " + std::to_string(max_n),
      ferrers));

  Rng rng(0xD1A6D1CE5EEDull);
  std::vector<Diagram> randoms;
  while (randoms.size() < 20) {
    int size = 2 + rng.below(std::max(1, max_n - 1));
    std::set<Box> boxes;
    while (static_cast<int>(boxes.size()) < size)
      boxes.insert({1 + rng.below(4), 1 + rng.below(4)});
    Diagram d{std::vector<Box>(boxes.begin(), boxes.end())};
    if (is_ferrers(d)) continue;
    randoms.push_back(std::move(d));
  }
  out.push_back(
      expectation_line("type counts add up to n! with exact mean, 20 sampled ragged diagrams",
                       randoms));
  return out;
}

Suite suite_exchange(int max_n) {
  max_n = clamp_n(max_n, 6);
  Suite out;
  for (int n = 1; n <= max_n; ++n) {
    std::string bad;
    int checked = 0;
    for (const Permutation& sigma : all_permutations(n)) {
      VexillaryData vd = vexillary_data(sigma);
      if (!vd.is_vexillary) continue;
      ++checked;
      ExchangeResult full = full_exchange(type_of_permutation(sigma));
      if (full.type.shape() != vd.lambda.conjugate().ferrers() ||
          count_tableaux(full.type) != vd.lambda.hook_length_formula()) {
        bad = "fails at " + one_line_str(sigma);
        break;
      }
    }
    out.push_back({"exchanged vexillary types take the conjugate shape with hook-formula count, S_" +
                       std::to_string(n),
                   bad.empty(),
                   bad.empty() ? std::to_string(checked) + " vexillary permutations" : bad});
  }
  return out;
}

namespace {

std::vector<std::vector<int>> tableau_keys(const std::vector<Tableau>& ts) {
  std::vector<std::vector<int>> keys;
  keys.reserve(ts.size());
  for (const Tableau& t : ts) {
    std::vector<int> key;
    for (std::size_t i = 0; i < t.shape().size(); ++i) {
      key.push_back(t.shape().boxes()[i].row);
      key.push_back(t.shape().boxes()[i].col);
      key.push_back(t.entries()[i]);
    }
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

Suite suite_swap(int samples) {
  if (samples <= 0) samples = 100;
  std::vector<Diagram> pool;
  for (int n = 2; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n)) pool.push_back(lambda.ferrers());
  for (const Permutation& sigma : all_permutations(4)) {
    Diagram d = type_of_permutation(sigma).shape();
    if (!d.empty()) pool.push_back(d);
  }
  pool.push_back(Diagram({{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}}));
  pool.push_back(Diagram({{1, 1}, {2, 1}, {2, 2}, {3, 2}}));

  int done = 0, row_cases = 0, col_cases = 0;
  std::string bad;
  for (const Diagram& d : pool) {
    if (done >= samples || !bad.empty()) break;
    for_each_type(d, [&](const TypeFilling& t) {
      for (int a = 1; a < d.max_row() && done < samples; ++a) {
        if (!is_dominant_row(t, a)) continue;
        ExchangeResult step = swap_down(t, a);
        std::vector<Tableau> source = enumerate_tableaux(t);
        std::vector<Tableau> target = enumerate_tableaux(step.type);
        std::vector<Tableau> moved, back;
        for (const Tableau& T : source) moved.push_back(tableau_swap_rows(T, a));
        for (const Tableau& T : target) back.push_back(transport_tableau(T, step.to_origin));
        if (tableau_keys(moved) != tableau_keys(target) ||
            tableau_keys(back) != tableau_keys(source)) {
          bad = "row swap mismatch on a " + std::to_string(d.size()) + "-box diagram";
          return false;
        }
        ++done;
        ++row_cases;
      }
      for (int b = 1; b < d.max_col() && done < samples; ++b) {
        if (!is_dominant_col(t, b)) continue;
        ExchangeResult step = swap_right(t, b);
        std::vector<Tableau> source = enumerate_tableaux(t);
        std::vector<Tableau> target = enumerate_tableaux(step.type);
        std::vector<Tableau> moved, back;
        for (const Tableau& T : source) moved.push_back(tableau_swap_cols(T, b));
        for (const Tableau& T : target) back.push_back(transport_tableau(T, step.to_origin));
        if (tableau_keys(moved) != tableau_keys(target) ||
            tableau_keys(back) != tableau_keys(source)) {
          bad = "column swap mismatch on a " + std::to_string(d.size()) + "-box diagram";
          return false;
        }
        ++done;
        ++col_cases;
      }
      return done < samples;
    });
  }
  Suite out;
  out.push_back({"single swaps transport the tableau sets bijectively",
                 bad.empty() && done == samples,
                 bad.empty() ? std::to_string(done) + " instances (" + std::to_string(row_cases) +
                                   " row, " + std::to_string(col_cases) + " column)"
                             : bad});
  return out;
}

Suite suite_bridge(int max_n) {
  max_n = clamp_n(max_n, 8);
  Suite out;
  for (int n = 1; n <= max_n; ++n) {
    std::string bad;
    int checked = 0;
    for (const Partition& lambda : partitions_of(n)) {
      ++checked;
      try {
        Permutation sig = sigma_lambda(lambda);
        if (!is_vexillary(sig)) {
          bad = parts_str(lambda) + ": permutation not vexillary";
          break;
        }
        if (shape_lambda(sig).conjugate() != lambda) {
          bad = parts_str(lambda) + ": conjugate shape mismatch";
          break;
        }
        if (!verify_bridge(lambda)) {
          bad = parts_str(lambda) + ": exchanged type is not the balanced type";
          break;
        }
      } catch (const error& e) {
        bad = parts_str(lambda) + ": " + e.what();
        break;
      }
    }
    out.push_back({"falling construction reaches the balanced type, partitions of " +
                       std::to_string(n),
                   bad.empty(),
                   bad.empty() ? std::to_string(checked) + " partitions" : bad});
  }
  return out;
}

Suite suite_equivalence(int max_n) {
  max_n = clamp_n(max_n, 5);
  Suite out;
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Permutation> vex;
    std::vector<TypeFilling> exchanged;
    for (const Permutation& sigma : all_permutations(n)) {
      if (!is_vexillary(sigma)) continue;
      vex.push_back(sigma);
      exchanged.push_back(full_exchange(type_of_permutation(sigma)).type);
    }
    std::string bad;
    long long pairs = 0;
    for (std::size_t i = 0; i < vex.size() && bad.empty(); ++i)
      for (std::size_t j = 0; j < vex.size(); ++j) {
        ++pairs;
        bool same_type = exchanged[i] == exchanged[j];
        bool same_bar = equivalent_v(vex[i], vex[j]);
        if (same_type != same_bar) {
          bad = one_line_str(vex[i]) + " vs " + one_line_str(vex[j]);
          break;
        }
      }
    out.push_back({"equal exchanged types exactly match equal bar normal forms, S_" +
                       std::to_string(n),
                   bad.empty(), bad.empty() ? std::to_string(pairs) + " pairs" : bad});
  }
  return out;
}

Suite suite_schur(int max_n) {
  max_n = clamp_n(max_n, 5);
  Suite out;
  for (int n = 2; n <= max_n; ++n)
    for (int m = 2; m <= 3; ++m) {
      std::string bad;
      int checked = 0;
      for (const Permutation& sigma : all_permutations(n)) {
        if (!is_vexillary(sigma)) continue;
        ++checked;
        TypeFilling ex = full_exchange(type_of_permutation(sigma)).type;
        Polynomial lhs = sst_polynomial(ex, m);
        // The exchanged type's shape stacks to the conjugate of the code
        // partition; the identity is with the Schur polynomial of that shape.
        Polynomial rhs = classical_schur(shape_lambda(sigma).conjugate(), m);
        if (lhs != rhs || !lhs.is_symmetric()) {
          bad = "fails at " + one_line_str(sigma);
          break;
        }
      }
      out.push_back({"column-strict labellings expand as the Schur polynomial, S_" +
                         std::to_string(n) + " in " + std::to_string(m) + " variables",
                     bad.empty(),
                     bad.empty() ? std::to_string(checked) + " vexillary permutations" : bad});
    }
  return out;
}

namespace {

// All ordered tuples of <= max_k distinct boxes, visited depth-first.
void for_each_prefix(const std::vector<Box>& boxes, std::size_t max_k, std::vector<Box>& cur,
                     const std::function<bool(const std::vector<Box>&)>& fn, bool& keep_going) {
  if (!keep_going) return;
  if (!fn(cur)) {
    keep_going = false;
    return;
  }
  if (cur.size() == max_k) return;
  for (const Box& b : boxes) {
    if (std::find(cur.begin(), cur.end(), b) != cur.end()) continue;
    cur.push_back(b);
    for_each_prefix(boxes, max_k, cur, fn, keep_going);
    cur.pop_back();
    if (!keep_going) return;
  }
}

Partition remove_block_box(const Partition& lambda, const Block& blk) {
  std::vector<int> parts = lambda.parts();
  parts[static_cast<std::size_t>(blk.last_row - 1)] -= 1;
  std::erase(parts, 0);
  return Partition(std::move(parts));
}

}  // namespace

Suite suite_partial(int max_n) {
  max_n = clamp_n(max_n, 5);
  Suite out;

  for (int n = 2; n <= max_n; ++n) {
    std::string bad;
    long long checked = 0;
    for (const Permutation& sigma : all_permutations(n)) {
      if (!is_vexillary(sigma) || !bad.empty()) continue;
      TypeFilling ex = full_exchange(type_of_permutation(sigma)).type;
      TableauCounter counter(ex);
      std::vector<Box> cur;
      bool keep_going = true;
      for_each_prefix(
          ex.shape().boxes(), 3, cur,
          [&](const std::vector<Box>& u) {
            ++checked;
            BigInt count = counter.count_with_prefix(u);
            // The shared counter keeps the sweep fast; cross-check it against
            // the public entry point on the short prefixes.
            if (u.size() <= 2 && partial_fill_count(sigma, u) != count) {
              bad = "count entry point disagrees at " + one_line_str(sigma);
              return false;
            }
            std::optional<Permutation> omega = partial_fill_witness(sigma, u);
            if (count > 0) {
              if (!omega || count_reduced_words(*omega) != count) {
                bad = "witness mismatch at " + one_line_str(sigma);
                return false;
              }
            } else if (omega) {
              bad = "witness for an unreachable prefix at " + one_line_str(sigma);
              return false;
            }
            if (std::optional<Partition> mu = nice_partial(sigma, u))
              if (mu->hook_length_formula() != count) {
                bad = "stacked remainder count mismatch at " + one_line_str(sigma);
                return false;
              }
            return true;
          },
          keep_going);
    }
    out.push_back({"pinned low entries count reduced words of the quotient, vexillary S_" +
                       std::to_string(n),
                   bad.empty(), bad.empty() ? std::to_string(checked) + " prefixes" : bad});
  }

  {
    int cap = max_n + 2;
    std::string bad;
    int checked = 0;
    for (int n = 1; n <= cap && bad.empty(); ++n)
      for (const Partition& lambda : partitions_of(n)) {
        ++checked;
        BigInt total = count_tableaux(balanced_type(lambda.ferrers()));
        BigInt corner_sum = 0;
        for (const Box& c : lambda.corners()) {
          std::vector<int> parts = lambda.parts();
          parts[static_cast<std::size_t>(c.row - 1)] -= 1;
          std::erase(parts, 0);
          corner_sum += count_tableaux(balanced_type(Partition(parts).ferrers()));
        }
        if (total != corner_sum) {
          bad = parts_str(lambda);
          break;
        }
      }
    out.push_back({"balanced counts satisfy the corner-removal recurrence, partitions up to " +
                       std::to_string(cap),
                   bad.empty(), bad.empty() ? std::to_string(checked) + " partitions" : bad});
  }

  {
    int cap = max_n + 2;
    std::string bad;
    long long checked = 0;
    for (int n = 1; n <= cap && bad.empty(); ++n)
      for (const Partition& lambda : partitions_of(n)) {
        if (!bad.empty()) break;
        std::vector<Block> blks = blocks(lambda);
        const Diagram shape = lambda.ferrers();
        for (const Box& c : shape.boxes()) {
          ++checked;
          BigInt expected = 0;
          for (const Block& blk : blks)
            if (blk.corner == c) expected = remove_block_box(lambda, blk).hook_length_formula();
          if (count_balanced_with_one_at(lambda, c) != expected) {
            bad = parts_str(lambda) + " at (" + std::to_string(c.row) + "," +
                  std::to_string(c.col) + ")";
            break;
          }
        }
      }
    out.push_back({"entry 1 sits only at block corners, counted by the reduced shape, partitions up to " +
                       std::to_string(cap),
                   bad.empty(), bad.empty() ? std::to_string(checked) + " boxes" : bad});
  }

  return out;
}

Suite run_suite(const std::string& name, int max_n) {
  if (name == "oracle") return suite_oracle(max_n);
  if (name == "balanced") return suite_balanced(max_n);
  if (name == "hook") return suite_hook(max_n);
  if (name == "expectation") return suite_expectation(max_n);
  if (name == "exchange") return suite_exchange(max_n);
  if (name == "swap") return suite_swap(max_n <= 0 ? 100 : max_n);
  if (name == "bridge") return suite_bridge(max_n);
  if (name == "equivalence") return suite_equivalence(max_n);
  if (name == "schur") return suite_schur(max_n);
  if (name == "partial") return suite_partial(max_n);
  if (name == "all") {
    Suite all;
    for (const char* each : {"oracle", "balanced", "hook", "expectation", "exchange", "swap",
                             "bridge", "equivalence", "schur", "partial"}) {
      Suite s = run_suite(each, max_n);
      all.insert(all.end(), s.begin(), s.end());
    }
    return all;
  }
  throw error("malformed-input", "unknown suite " + name);
}

bool all_pass(const Suite& s) {
  return std::all_of(s.begin(), s.end(), [](const CheckLine& c) { return c.pass; });
}

}  // namespace tabtype::verify

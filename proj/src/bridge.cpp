#include "tabtype/bridge.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tabtype/error.hpp"
#include "tabtype/exchange.hpp"
#include "tabtype/filling.hpp"

namespace tabtype {

StaircaseEmbedding embed_in_staircase(const Partition& lambda) {
  if (lambda.empty()) throw error("empty-partition", "cannot embed the empty partition");
  StaircaseEmbedding out;
  for (const Box& c : lambda.corners()) {
    int value = c.row + c.col - 1;  // lambda_a + lambda'_b - 1 at a corner (a,b)
    if (value > out.k) {
      out.k = value;
      out.anchor = c;
    }
  }
  return out;
}

namespace {

bool in_staircase(const Box& b, int k) { return b.row >= 1 && b.col >= 1 && b.row + b.col <= k + 1; }

// Outer corners of an arbitrary diagram: boxes with no box directly right
// and none directly below.
std::vector<Box> outer_corners(const std::set<Box>& d) {
  std::vector<Box> out;
  for (const Box& b : d)
    if (!d.count({b.row, b.col + 1}) && !d.count({b.row + 1, b.col})) out.push_back(b);
  return out;
}

}  // namespace

Diagram build_s_lambda(const Partition& lambda) {
  const int k = embed_in_staircase(lambda).k;
  const Diagram start = lambda.ferrers();
  std::set<Box> d(start.boxes().begin(), start.boxes().end());

  while (true) {
    // Anchored region R: everything weakly north-west of a corner that
    // touches the staircase boundary.
    std::vector<Box> boundary;
    for (const Box& c : outer_corners(d))
      if (c.row + c.col == k + 1) boundary.push_back(c);
    std::set<Box> anchored;
    for (const Box& b : d)
      for (const Box& c : boundary)
        if (b.row <= c.row && b.col <= c.col) {
          anchored.insert(b);
          break;
        }
    std::vector<Box> loose;
    for (const Box& b : d)
      if (!anchored.count(b)) loose.push_back(b);
    if (loose.empty()) break;

    // Components fall one at a time, smallest box first, straight down as
    // far as consecutive steps stay in the staircase and clear of the rest.
    bool moved = false;
    for (const Diagram& comp : connected_components(Diagram(loose))) {
      std::set<Box> rest = d;
      for (const Box& b : comp.boxes()) rest.erase(b);
      int steps = 0;
      for (int s = 1;; ++s) {
        bool ok = true;
        for (const Box& b : comp.boxes()) {
          Box moved_box{b.row + s, b.col};
          if (!in_staircase(moved_box, k) || rest.count(moved_box)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        steps = s;
      }
      if (steps == 0) continue;
      d = std::move(rest);
      for (const Box& b : comp.boxes()) d.insert({b.row + steps, b.col});
      moved = true;
      break;
    }
    if (!moved)
      throw error("falling-stuck", "no loose component can fall for partition of " +
                                       std::to_string(lambda.size()));
  }

  Diagram result{std::vector<Box>(d.begin(), d.end())};
  // The whole point of the construction: the pair coordinates must form an
  // inversion set.  Fail loudly here rather than downstream.
  InversionSet pairs;
  pairs.n = k + 1;
  for (const Box& b : result.boxes()) pairs.pairs.push_back(pair_for_box(b, k + 1));
  std::sort(pairs.pairs.begin(), pairs.pairs.end());
  if (!is_inversion_set(pairs))
    throw error("falling-stuck", "settled diagram is not an inversion set");
  return result;
}

Permutation sigma_lambda(const Partition& lambda) {
  const int k = embed_in_staircase(lambda).k;
  Diagram s = build_s_lambda(lambda);
  InversionSet pairs;
  pairs.n = k + 1;
  for (const Box& b : s.boxes()) pairs.pairs.push_back(pair_for_box(b, k + 1));
  std::sort(pairs.pairs.begin(), pairs.pairs.end());
  return permutation_from_inversion_set(pairs);
}

bool verify_bridge(const Partition& lambda) {
  if (lambda.empty()) return true;
  TypeFilling exchanged = line_exchange(type_of_permutation(sigma_lambda(lambda))).type;
  return exchanged == balanced_type(lambda.ferrers());
}

std::vector<Block> blocks(const Partition& lambda) {
  std::vector<Block> out;
  int r = 1;
  while (r <= lambda.rows()) {
    int part = lambda.part(r);
    int last = r;
    while (lambda.part(last + 1) == part) ++last;
    out.push_back({r, last, part, Box{r, part}});
    r = last + 1;
  }
  return out;
}

BigInt count_balanced_with_one_at(const Partition& lambda, const Box& c) {
  Diagram shape = lambda.ferrers();
  if (!shape.contains(c))
    throw error("box-not-in-shape",
                "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
  BigInt count = 0;
  for_each_tableau(balanced_type(shape), [&](const Tableau& t) {
    if (t.entry_at(c) == 1) ++count;
    return true;
  });
  return count;
}

namespace {

struct ExchangedType {
  TypeFilling type;
  BoxMapping to_origin;
};

ExchangedType exchanged_type_of(const Permutation& sigma) {
  if (!is_vexillary(sigma)) throw error("not-vexillary", "permutation is not vexillary");
  ExchangeResult full = full_exchange(type_of_permutation(sigma));
  return {full.type, full.to_origin};
}

}  // namespace

BigInt partial_fill_count(const Permutation& sigma, const PartialFill& u) {
  ExchangedType ex = exchanged_type_of(sigma);
  for (const Box& b : u)
    if (!ex.type.shape().contains(b))
      throw error("box-outside-shape",
                  "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")");
  return count_tableaux_with_prefix(ex.type, u);
}

std::optional<Permutation> partial_fill_witness(const Permutation& sigma, const PartialFill& u) {
  ExchangedType ex = exchanged_type_of(sigma);
  for (const Box& b : u)
    if (!ex.type.shape().contains(b))
      throw error("box-outside-shape",
                  "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")");
  // Pull the prescribed boxes back to inversion pairs of sigma.  Every
  // prefix of the pair sequence must be an inversion set: entries 1..i of a
  // tableau always trace a weak-order chain, so one bad prefix means no
  // tableau realizes U and there is no witness.
  InversionSet prefix;
  prefix.n = sigma.n();
  Permutation tau = Permutation::identity(sigma.n());
  for (const Box& b : u) {
    prefix.pairs.push_back(pair_for_box(ex.to_origin.apply(b), sigma.n()));
    std::sort(prefix.pairs.begin(), prefix.pairs.end());
    try {
      tau = permutation_from_inversion_set(prefix);
    } catch (const error&) {
      return std::nullopt;
    }
  }
  return tau.inverse() * sigma;
}

std::optional<Partition> nice_partial(const Permutation& sigma, const PartialFill& u) {
  ExchangedType ex = exchanged_type_of(sigma);
  std::set<Box> remaining(ex.type.shape().boxes().begin(), ex.type.shape().boxes().end());
  for (const Box& b : u)
    if (!remaining.erase(b)) return std::nullopt;  // outside the shape or repeated
  // The hook-length count only applies when U is actually reachable as an
  // entry-1..k prefix; a stacked remainder alone does not guarantee that.
  if (!prefix_feasible(ex.type, u)) return std::nullopt;
  Diagram rest{std::vector<Box>(remaining.begin(), remaining.end())};
  Partition yx = stack_yx(rest);
  Partition xy = stack_xy(rest);
  if (yx != xy) return std::nullopt;
  return yx;
}

}  // namespace tabtype

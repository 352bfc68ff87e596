#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finbool/independence.hpp"
#include "finbool/mask.hpp"

namespace finbool {

// Boolean term over variables x0, x1, ...: constants, negation, binary
// conjunction and disjunction.  Text form is a prefix s-expression, e.g.
// "(or (and x0 (not x1)) x2)".
class BooleanPolynomial {
 public:
  static BooleanPolynomial parse(std::string_view text,
                                 std::optional<std::uint32_t> arity = {});

  static BooleanPolynomial var(std::uint32_t index);
  static BooleanPolynomial constant(bool value);
  static BooleanPolynomial negation(BooleanPolynomial p);
  static BooleanPolynomial conjunction(BooleanPolynomial a, BooleanPolynomial b);
  static BooleanPolynomial disjunction(BooleanPolynomial a, BooleanPolynomial b);

  // Number of argument slots: one past the highest variable mentioned, or
  // the wider value requested at parse time.
  std::uint32_t arity() const { return arity_; }

  // Evaluates over the subset algebra: variables become the argument masks,
  // connectives the set operations.  args.size() must equal arity().
  Mask eval(std::size_t ground, std::span<const Mask> args) const;

  std::string str() const;

 private:
  enum class Op : std::uint8_t { kVar, kZero, kOne, kNot, kAnd, kOr };
  struct Node {
    Op op;
    std::uint32_t a = 0;  // variable index, or first child
    std::uint32_t b = 0;  // second child
  };
  std::vector<Node> nodes_;
  std::uint32_t root_ = 0;
  std::uint32_t arity_ = 0;

  std::uint32_t graft(const BooleanPolynomial& p);
  Mask eval_node(std::uint32_t at, std::size_t ground, std::span<const Mask> args) const;
  void print_node(std::uint32_t at, std::string& out) const;
};

// Images p(a_{i_1},...,a_{i_r}) over all index tuples, in odometer order with
// the last position fastest, keeping the first occurrence of each distinct set.
SetFamily poly_image(const SetFamily& f, const BooleanPolynomial& p,
                     std::uint64_t tuple_cap = 1u << 20);

struct PolyBoundResult {
  enum class Status { holds, violated, precondition_failed };
  Status status = Status::holds;
  std::uint64_t threshold = 0;        // independence_threshold(n, arity)
  MaxIndependentResult precondition;  // independent subfamily of size n, iff precondition_failed
  SetFamily image;
  MaxIndependentResult image_best;    // largest independent subfamily of the image (capped at threshold)
};

// If no n members of `f` are independent, then no `threshold` members of the
// polynomial image are independent.  Returns the exact image together with
// either the confirmation or a counterexample witness.
PolyBoundResult check_poly_bound(const SetFamily& f, std::uint64_t n,
                                 const BooleanPolynomial& p);

}  // namespace finbool

#include "finbool/polynomial.hpp"

#include <unordered_set>

#include "finbool/errors.hpp"

namespace finbool {

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({std::string(1, c), i});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t' &&
             text[j] != '\n' && text[j] != '\r' && text[j] != '(' && text[j] != ')')
        ++j;
      out.push_back({std::string(text.substr(i, j - i)), i});
      i = j;
    }
  }
  return out;
}

[[noreturn]] void parse_fail(const std::string& what, std::size_t offset) {
  throw input_error("polynomial parse error at byte " + std::to_string(offset) +
                    ": " + what);
}

}  // namespace

BooleanPolynomial BooleanPolynomial::var(std::uint32_t index) {
  BooleanPolynomial p;
  p.nodes_.push_back({Op::kVar, index, 0});
  p.root_ = 0;
  p.arity_ = index + 1;
  return p;
}

BooleanPolynomial BooleanPolynomial::constant(bool value) {
  BooleanPolynomial p;
  p.nodes_.push_back({value ? Op::kOne : Op::kZero, 0, 0});
  p.root_ = 0;
  p.arity_ = 0;
  return p;
}

BooleanPolynomial BooleanPolynomial::negation(BooleanPolynomial p) {
  BooleanPolynomial r;
  std::uint32_t child = r.graft(p);
  r.nodes_.push_back({Op::kNot, child, 0});
  r.root_ = static_cast<std::uint32_t>(r.nodes_.size() - 1);
  r.arity_ = p.arity_;
  return r;
}

BooleanPolynomial BooleanPolynomial::conjunction(BooleanPolynomial a, BooleanPolynomial b) {
  BooleanPolynomial r;
  std::uint32_t ca = r.graft(a);
  std::uint32_t cb = r.graft(b);
  r.nodes_.push_back({Op::kAnd, ca, cb});
  r.root_ = static_cast<std::uint32_t>(r.nodes_.size() - 1);
  r.arity_ = std::max(a.arity_, b.arity_);
  return r;
}

BooleanPolynomial BooleanPolynomial::disjunction(BooleanPolynomial a, BooleanPolynomial b) {
  BooleanPolynomial r;
  std::uint32_t ca = r.graft(a);
  std::uint32_t cb = r.graft(b);
  r.nodes_.push_back({Op::kOr, ca, cb});
  r.root_ = static_cast<std::uint32_t>(r.nodes_.size() - 1);
  r.arity_ = std::max(a.arity_, b.arity_);
  return r;
}

std::uint32_t BooleanPolynomial::graft(const BooleanPolynomial& p) {
  std::uint32_t shift = static_cast<std::uint32_t>(nodes_.size());
  for (Node n : p.nodes_) {
    if (n.op != Op::kVar) {
      n.a += shift;
      if (n.op == Op::kAnd || n.op == Op::kOr) n.b += shift;
    }
    nodes_.push_back(n);
  }
  return p.root_ + shift;
}

BooleanPolynomial BooleanPolynomial::parse(std::string_view text,
                                           std::optional<std::uint32_t> arity) {
  std::vector<Token> toks = tokenize(text);
  if (toks.empty()) parse_fail("empty input", 0);

  BooleanPolynomial p;
  std::size_t pos = 0;
  std::uint32_t max_var = 0;
  bool any_var = false;

  // Recursive descent; returns the node index.
  auto build = [&](auto&& self) -> std::uint32_t {
    if (pos >= toks.size()) parse_fail("unexpected end of input", text.size());
    Token t = toks[pos++];
    if (t.text == "(") {
      if (pos >= toks.size()) parse_fail("operator expected", text.size());
      Token op = toks[pos++];
      std::uint32_t node;
      if (op.text == "not") {
        std::uint32_t c = self(self);
        p.nodes_.push_back({Op::kNot, c, 0});
        node = static_cast<std::uint32_t>(p.nodes_.size() - 1);
      } else if (op.text == "and" || op.text == "or") {
        std::uint32_t a = self(self);
        std::uint32_t b = self(self);
        p.nodes_.push_back({op.text == "and" ? Op::kAnd : Op::kOr, a, b});
        node = static_cast<std::uint32_t>(p.nodes_.size() - 1);
      } else {
        parse_fail("unknown operator '" + op.text + "'", op.offset);
      }
      if (pos >= toks.size() || toks[pos].text != ")")
        parse_fail("')' expected", pos < toks.size() ? toks[pos].offset : text.size());
      ++pos;
      return node;
    }
    if (t.text == ")") parse_fail("unexpected ')'", t.offset);
    if (t.text == "0" || t.text == "1") {
      p.nodes_.push_back({t.text == "1" ? Op::kOne : Op::kZero, 0, 0});
      return static_cast<std::uint32_t>(p.nodes_.size() - 1);
    }
    if (t.text.size() >= 2 && t.text[0] == 'x') {
      std::uint32_t idx = 0;
      for (std::size_t i = 1; i < t.text.size(); ++i) {
        if (t.text[i] < '0' || t.text[i] > '9')
          parse_fail("bad variable '" + t.text + "'", t.offset);
        idx = idx * 10 + static_cast<std::uint32_t>(t.text[i] - '0');
        if (idx > 1000000) parse_fail("variable index too large", t.offset);
      }
      max_var = std::max(max_var, idx);
      any_var = true;
      p.nodes_.push_back({Op::kVar, idx, 0});
      return static_cast<std::uint32_t>(p.nodes_.size() - 1);
    }
    parse_fail("unexpected token '" + t.text + "'", t.offset);
  };

  p.root_ = build(build);
  if (pos != toks.size()) parse_fail("trailing input", toks[pos].offset);
  p.arity_ = any_var ? max_var + 1 : 0;
  if (arity) {
    if (*arity < p.arity_)
      throw input_error("declared arity " + std::to_string(*arity) +
                        " below highest variable x" + std::to_string(max_var));
    p.arity_ = *arity;
  }
  return p;
}

Mask BooleanPolynomial::eval_node(std::uint32_t at, std::size_t ground,
                                  std::span<const Mask> args) const {
  const Node& n = nodes_[at];
  switch (n.op) {
    case Op::kVar:
      return args[n.a];
    case Op::kZero:
      return Mask(ground);
    case Op::kOne:
      return Mask::full(ground);
    case Op::kNot:
      return ~eval_node(n.a, ground, args);
    case Op::kAnd:
      return eval_node(n.a, ground, args) & eval_node(n.b, ground, args);
    case Op::kOr:
      return eval_node(n.a, ground, args) | eval_node(n.b, ground, args);
  }
  throw std::logic_error("corrupt polynomial node");
}

Mask BooleanPolynomial::eval(std::size_t ground, std::span<const Mask> args) const {
  if (args.size() != arity_)
    throw input_error("polynomial of arity " + std::to_string(arity_) + " applied to " +
                      std::to_string(args.size()) + " arguments");
  for (const Mask& a : args)
    if (a.ground() != ground) throw input_error("argument ground mismatch");
  return eval_node(root_, ground, args);
}

void BooleanPolynomial::print_node(std::uint32_t at, std::string& out) const {
  const Node& n = nodes_[at];
  switch (n.op) {
    case Op::kVar:
      out += "x" + std::to_string(n.a);
      return;
    case Op::kZero:
      out += "0";
      return;
    case Op::kOne:
      out += "1";
      return;
    case Op::kNot:
      out += "(not ";
      print_node(n.a, out);
      out += ")";
      return;
    case Op::kAnd:
    case Op::kOr:
      out += n.op == Op::kAnd ? "(and " : "(or ";
      print_node(n.a, out);
      out += " ";
      print_node(n.b, out);
      out += ")";
      return;
  }
}

std::string BooleanPolynomial::str() const {
  std::string out;
  print_node(root_, out);
  return out;
}

SetFamily poly_image(const SetFamily& f, const BooleanPolynomial& p,
                     std::uint64_t tuple_cap) {
  const std::uint32_t r = p.arity();
  const std::size_t k = f.size();
  if (r > 0 && k == 0) return SetFamily(f.ground, {});

  std::uint64_t tuples = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    tuples *= k;
    if (tuples > tuple_cap)
      throw resource_error("image needs more than " + std::to_string(tuple_cap) +
                           " tuples");
  }

  std::vector<Mask> image;
  std::unordered_set<Mask, MaskHash> seen;
  std::vector<std::size_t> idx(r, 0);
  std::vector<Mask> args(r, Mask(f.ground));
  for (std::uint64_t t = 0; t < tuples; ++t) {
    for (std::uint32_t i = 0; i < r; ++i) args[i] = f.members[idx[i]];
    Mask val = p.eval(f.ground, args);
    if (seen.insert(val).second) image.push_back(std::move(val));
    // Odometer step, last position fastest.
    for (std::uint32_t i = r; i-- > 0;) {
      if (++idx[i] < k) break;
      idx[i] = 0;
    }
  }
  return SetFamily(f.ground, std::move(image));
}

PolyBoundResult check_poly_bound(const SetFamily& f, std::uint64_t n,
                                 const BooleanPolynomial& p) {
  if (n == 0) throw input_error("independence length must be positive");
  if (p.arity() == 0) throw input_error("polynomial must mention a variable");
  PolyBoundResult out;
  MaxIndependentResult gate = max_independent(f, n);
  if (gate.size >= n) {
    out.status = PolyBoundResult::Status::precondition_failed;
    out.precondition = std::move(gate);
    return out;
  }
  out.threshold = independence_threshold(n, p.arity());
  out.image = poly_image(f, p);
  out.image_best = max_independent(out.image, out.threshold);
  out.status = out.image_best.size >= out.threshold
                   ? PolyBoundResult::Status::violated
                   : PolyBoundResult::Status::holds;
  return out;
}

}  // namespace finbool

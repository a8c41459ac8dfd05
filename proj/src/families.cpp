#include "ng/families.hpp"

#include <cctype>
#include <numeric>

#include "ng/errors.hpp"
#include "ng/gf.hpp"

namespace ng {

PslParameters PslParameters::of(long q) {
  if (q < 2) throw std::invalid_argument("psl2: q must be >= 2");
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q itself is prime
  int f = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1)
    throw std::invalid_argument("psl2: " + std::to_string(q) +
                                " is not a prime power");
  PslParameters params;
  params.q = q;
  params.p = static_cast<int>(p);
  params.f = f;
  params.k = static_cast<int>(std::gcd(q - 1, 2l));
  params.r = (q - 1) / params.k;
  params.t = (q + 1) / params.k;
  return params;
}

PermGroup symmetric(int n, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("symmetric: n must be >= 1");
  std::size_t order = 1;
  for (int i = 2; i <= n; ++i) {
    order *= i;
    if (max_order && order > max_order)
      throw budget_error("S_" + std::to_string(n) +
                         " exceeds enumeration budget");
  }
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<int> full(n);
    std::iota(full.begin(), full.end(), 0);
    if (n >= 3) gens.push_back(Perm::from_cycles(n, {full}));
  }
  return PermGroup::generated(n, std::move(gens), max_order);
}

PermGroup dihedral(int n, std::size_t max_order) {
  if (n < 3) throw std::invalid_argument("dihedral: n must be >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup::generated(
      n, {Perm(std::move(rot)), Perm(std::move(refl))}, max_order);
}

PermGroup cyclic(int n, std::size_t max_order) {
  if (n < 1) throw std::invalid_argument("cyclic: n must be >= 1");
  if (n == 1) return PermGroup::generated(1, {Perm(1)}, max_order);
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return PermGroup::generated(n, {Perm(std::move(rot))}, max_order);
}

PermGroup psl2(long q, std::size_t max_order) {
  PslParameters params = PslParameters::of(q);
  FiniteField field(params.p, params.f);
  int points = static_cast<int>(q) + 1;
  int inf = static_cast<int>(q);

  FieldElement a = field.primitive_element();
  FieldElement a2 = field.mul(a, a);

  std::vector<int> translate(points), scale(points), invert(points);
  for (long k = 0; k < q; ++k) {
    FieldElement x = field.from_index(k);
    translate[k] = static_cast<int>(field.to_index(field.add(x, field.one())));
    scale[k] = static_cast<int>(field.to_index(field.mul(a2, x)));
    invert[k] = field.is_zero(x)
                    ? inf
                    : static_cast<int>(field.to_index(field.neg(field.inv(x))));
  }
  translate[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;

  std::vector<Perm> gens{Perm(std::move(translate)), Perm(std::move(scale)),
                         Perm(std::move(invert))};
  PermGroup g = PermGroup::generated(points, std::move(gens), max_order);

  std::size_t expected =
      static_cast<std::size_t>(q * (q * q - 1) / params.k);
  if (g.size() != expected)
    throw std::logic_error("psl2(" + std::to_string(q) +
                           "): closure size " + std::to_string(g.size()) +
                           " != " + std::to_string(expected));
  return g;
}

namespace {

struct SpecParser {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t max_order;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  long parse_int() {
    skip_ws();
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) throw spec_parse_error("parameter too large", start);
      ++pos;
    }
    if (pos == start) throw spec_parse_error("expected integer", pos);
    return value;
  }

  PermGroup parse_atom() {
    skip_ws();
    std::size_t start = pos;
    std::string head;
    while (pos < text.size() &&
           std::isalnum(static_cast<unsigned char>(text[pos])))
      head += text[pos++];
    skip_ws();
    if (pos >= text.size() || text[pos] != ':')
      throw spec_parse_error("expected ':' after family name", pos);
    ++pos;
    long n = parse_int();
    try {
      if (head == "S") return symmetric(static_cast<int>(n), max_order);
      if (head == "D") return dihedral(static_cast<int>(n), max_order);
      if (head == "C") return cyclic(static_cast<int>(n), max_order);
      if (head == "PSL2") return psl2(n, max_order);
    } catch (const budget_error&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw spec_parse_error(e.what(), start);
    }
    throw spec_parse_error("unknown family '" + head + "'", start);
  }

  PermGroup parse() {
    PermGroup g = parse_atom();
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] != 'x')
        throw spec_parse_error("expected 'x' between atoms", pos);
      ++pos;
      PermGroup h = parse_atom();
      if (max_order && g.size() * h.size() > max_order)
        throw budget_error("product exceeds enumeration budget");
      g = direct_product(g, h);
    }
    return g;
  }
};

}  // namespace

PermGroup parse_group_spec(const std::string& text, std::size_t max_order) {
  SpecParser parser{text, 0, max_order};
  return parser.parse();
}

}  // namespace ng

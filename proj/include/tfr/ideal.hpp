#pragma once

#include "tfr/errors.hpp"
#include "tfr/numeric.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tfr {

/// Exponent vector of a monomial; entry i is the exponent of X_{i+1}.
using Expo = std::vector<int>;

int degree(const Expo& e);
bool divides(const Expo& a, const Expo& b);
Expo expo_add(const Expo& a, const Expo& b);
Expo expo_sub(const Expo& a, const Expo& b); // requires divides(b, a)
Expo expo_lcm(const Expo& a, const Expo& b);
bool expo_coprime(const Expo& a, const Expo& b);
std::vector<int> support(const Expo& e);

enum class OrderKind { Lex, Grevlex };

/// Term order on monomials in a fixed number of variables: lex or grevlex on
/// a variable sequence, optionally preceded by elimination blocks.
class TermOrder {
public:
  static TermOrder lex(int nvars);
  static TermOrder grevlex(int nvars);
  /// sequence lists variable indices from greatest to least.
  static TermOrder lex(int nvars, std::vector<int> sequence);
  static TermOrder grevlex(int nvars, std::vector<int> sequence);
  /// Block order eliminating `lead_vars`: any monomial involving them is
  /// greater than any monomial that does not.
  static TermOrder elimination(const TermOrder& base, const std::vector<int>& lead_vars);

  int nvars() const { return nvars_; }
  /// -1 if a < b, 0 iff a == b, 1 if a > b.
  int compare(const Expo& a, const Expo& b) const;
  bool greater(const Expo& a, const Expo& b) const { return compare(a, b) > 0; }
  bool less(const Expo& a, const Expo& b) const { return compare(a, b) < 0; }

  /// Induced order on the subring of the listed variables (ascending global
  /// indices; position in the list becomes the local index).
  TermOrder restricted(const std::vector<int>& vars) const;

  /// Stable identifier used as a Groebner cache key.
  std::string key() const;

private:
  struct Block {
    OrderKind kind;
    std::vector<int> seq; // variable indices, greatest priority first
  };
  int nvars_ = 0;
  std::vector<Block> blocks_;
};

/// A squarefree-or-not monomial X^a, or a pure difference X^a - X^b of two
/// distinct monomials. The only coefficients in this engine are +1 and -1.
class IdealElement {
public:
  explicit IdealElement(Expo monomial);
  IdealElement(Expo a, Expo b); // X^a - X^b, a != b

  bool is_monomial() const { return !b_.has_value(); }
  const Expo& a() const { return a_; }
  const Expo& b() const { return *b_; }
  int max_degree() const;

  bool operator==(const IdealElement& o) const = default;
  bool operator<(const IdealElement& o) const; // storage order, for sorting

private:
  Expo a_;
  std::optional<Expo> b_; // if present: canonical storage, a_ > b_ lexicographically
};

/// Element of a reduced Groebner basis, oriented by the active order.
struct GBElement {
  Expo lead;
  std::optional<Expo> tail; // absent for monomial elements; tail < lead

  bool is_monomial() const { return !tail.has_value(); }
  bool operator==(const GBElement& o) const = default;
};

class GroebnerBasis {
public:
  GroebnerBasis(TermOrder order, std::vector<GBElement> elems)
      : order_(std::move(order)), elems_(std::move(elems)) {}

  const TermOrder& order() const { return order_; }
  const std::vector<GBElement>& elements() const { return elems_; }
  bool zero() const { return elems_.empty(); }
  int max_degree() const;

private:
  TermOrder order_;
  std::vector<GBElement> elems_;
};

/// Ideal generated by monomials and pure-difference binomials, with cached
/// reduced Groebner bases per term order. Value semantics; copies share the
/// write-once cache.
class PresentedIdeal {
public:
  PresentedIdeal(int nvars, std::vector<IdealElement> gens);
  static PresentedIdeal zero(int nvars) { return PresentedIdeal(nvars, {}); }

  int nvars() const { return nvars_; }
  const std::vector<IdealElement>& generators() const { return gens_; }
  bool has_binomial_generator() const;

  const GroebnerBasis& groebner(const TermOrder& order) const;

private:
  int nvars_;
  std::vector<IdealElement> gens_;
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> by_order;
  };
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis of monomial/binomial generators; by the closure
/// lemma for such ideals every basis element is again a monomial or a pure
/// difference, which the engine maintains structurally.
GroebnerBasis buchberger(int nvars, const std::vector<IdealElement>& gens, const TermOrder& order);

/// Unique remainder modulo a reduced basis; nullopt means it reduced to 0.
/// A monomial modulo a pure-binomial basis stays a single monomial.
std::optional<IdealElement> normal_form(const IdealElement& e, const GroebnerBasis& gb);
std::optional<Expo> normal_form_monomial(const Expo& m, const GroebnerBasis& gb);

bool in_ideal(const IdealElement& e, const GroebnerBasis& gb);

/// Toric ideal of the monoid generated by the given integer vectors: lattice
/// ideal of an integer kernel basis, saturated by the product of all
/// variables.
PresentedIdeal toric_ideal(const std::vector<std::vector<Int>>& monoid_generators);

/// I : f^inf via one auxiliary variable t, the ideal I + (t*f - 1), and a
/// block elimination order with t in the leading block.
PresentedIdeal saturate(const PresentedIdeal& ideal, const Expo& f);

/// I : f for a monomial f, as (1/f) * (I n (f)); the intersection is found by
/// eliminating one auxiliary variable from t*I + (1-t)*(f).
PresentedIdeal colon(const PresentedIdeal& ideal, const Expo& f);
PresentedIdeal colon_by_var(const PresentedIdeal& ideal, int var);

bool ideal_equal(const PresentedIdeal& lhs, const PresentedIdeal& rhs, const TermOrder& order);

/// Minimal monomial generators of the ideal of leading terms.
PresentedIdeal initial_ideal(const PresentedIdeal& ideal, const TermOrder& order);

PresentedIdeal ideal_sum(const PresentedIdeal& lhs, const PresentedIdeal& rhs);

/// Reinterpret an ideal in a larger polynomial ring; var_map sends local
/// variable i to its global index.
PresentedIdeal embed_ideal(const PresentedIdeal& ideal, int nvars, const std::vector<int>& var_map);

std::vector<Expo> minimal_monomial_generators(std::vector<Expo> monomials);

std::string render_monomial(const Expo& e);
std::string render_element(const IdealElement& e, const TermOrder& order);
std::string render_element(const GBElement& e);
std::string render_ideal(const PresentedIdeal& ideal, const TermOrder& order);
std::string render_basis(const GroebnerBasis& gb);

} // namespace tfr

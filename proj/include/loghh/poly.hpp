#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loghh/numeric.hpp"

namespace loghh {

// Exponent vector; length = number of ring variables.
using Mono = std::vector<int>;

// Block monomial order.  Variables are partitioned into blocks compared in
// sequence; inside a block the comparison is graded reverse lexicographic.
// One block covering everything = plain degrevlex; singleton blocks = lex;
// a leading elimination block + rest = the elimination orders used for
// saturation and syzygy extraction.
struct MonomialOrder {
  std::vector<std::vector<int>> blocks;

  static MonomialOrder degrevlex(int nvars);
  static MonomialOrder lex(int nvars);
  // first_block listed first (eliminated), remaining variables one block
  static MonomialOrder elimination(const std::vector<int>& first_block, int nvars);

  // -1 if a < b, 0 if equal, +1 if a > b
  int compare(const Mono& a, const Mono& b) const;
  bool valid_for(int nvars) const;
};

// Commutative polynomial ring k[vars] with optional unit variables: a unit v
// has a partner named v + "_inv" and every ideal-level computation adjoins
// v * v_inv - 1.  An optional integer weight per variable gives the grading.
class PolyRing {
 public:
  PolyRing() = default;
  PolyRing(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  int nvars() const { return (int)vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  std::optional<int> var_index(const std::string& name) const;

  void set_order(MonomialOrder o);
  const MonomialOrder& order() const { return order_; }

  // declare an existing variable pair (v, v_inv) as mutually inverse
  void set_unit(int v, int v_inv);
  const std::vector<std::pair<int, int>>& units() const { return units_; }
  bool is_unit_var(int i) const;

  void set_weights(std::vector<long> w);
  bool graded() const { return graded_; }
  const std::vector<long>& weights() const { return weights_; }

  // appends a fresh variable (weight 0 in graded mode), returns its index
  int add_var(const std::string& name);

  long mono_weight(const Mono& m) const;  // graded degree
  long mono_total_degree(const Mono& m) const;

  std::string mono_string(const Mono& m) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
  MonomialOrder order_;
  bool graded_ = false;
  std::vector<long> weights_;
  std::vector<std::pair<int, int>> units_;
};

// monomial helpers (component-free, shared by ring and module layers)
Mono mono_one(int nvars);
Mono mono_mul(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_div(const Mono& b, const Mono& a);      // b / a, requires a | b
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

// Polynomial: terms sorted strictly descending in the ring's order, no zero
// coefficients.  All arithmetic goes through the owning ring so that order
// and field stay consistent.
struct Poly {
  std::vector<std::pair<Mono, Rat>> t;

  bool is_zero() const { return t.empty(); }
  const Mono& lead_mono() const { return t.front().first; }
  const Rat& lead_coeff() const { return t.front().second; }
  bool operator==(const Poly&) const = default;
};

Poly p_zero();
Poly p_const(const PolyRing& r, const Rat& c);
Poly p_one(const PolyRing& r);
Poly p_var(const PolyRing& r, int i, int exp = 1);
Poly p_term(const PolyRing& r, const Mono& m, const Rat& c);

Poly p_add(const PolyRing& r, const Poly& a, const Poly& b);
Poly p_sub(const PolyRing& r, const Poly& a, const Poly& b);
Poly p_neg(const PolyRing& r, const Poly& a);
Poly p_scale(const PolyRing& r, const Poly& a, const Rat& c);
Poly p_mul_term(const PolyRing& r, const Poly& a, const Mono& m, const Rat& c);
Poly p_mul(const PolyRing& r, const Poly& a, const Poly& b);
Poly p_pow(const PolyRing& r, const Poly& a, long e);
Poly p_monic(const PolyRing& r, const Poly& a);

// re-sorts terms; used after changing the ring order or importing raw terms
Poly p_normalize(const PolyRing& r, std::vector<std::pair<Mono, Rat>> terms);

// substitute images[i] for variable i (every variable needs an image);
// the images live in the target ring
Poly p_substitute(const PolyRing& src, const Poly& p, const PolyRing& dst,
                  const std::vector<Poly>& images);

// polynomial mapped along a variable-index renaming into a larger ring
Poly p_rename(const PolyRing& src, const Poly& p, const PolyRing& dst,
              const std::vector<int>& var_map);

// formal partial derivative with respect to variable v
Poly p_partial(const PolyRing& r, const Poly& p, int v);

bool p_homogeneous(const PolyRing& r, const Poly& p, long* degree_out = nullptr);

std::string p_string(const PolyRing& r, const Poly& p);

// Shared expression grammar: integer literals, known variable identifiers,
// + - * ^, parentheses, unary minus; multiplication is always explicit and
// there is no division.  Unknown identifiers raise SchemaError; malformed
// syntax raises ParseError with line and column.
Poly p_parse(const PolyRing& r, const std::string& text);

}  // namespace loghh

#include "modgen/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modgen {

std::string MonomialOrder::name() const {
  switch (kind) {
    case Grevlex: return "grevlex";
    case Lex: return "lex";
    case Block: {
      std::string s = "block(";
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(blocks[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

RingPtr PolyRing::make(FieldSpec field, std::vector<std::string> vars,
                       MonomialOrder order) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw math_error("duplicate variable name: " + vars[i]);
  if (order.kind == MonomialOrder::Block) {
    int total = 0;
    for (int b : order.blocks) {
      if (b <= 0) throw math_error("block sizes must be positive");
      total += b;
    }
    if (total != static_cast<int>(vars.size()))
      throw math_error("block sizes must sum to the number of variables");
  }
  auto r = std::make_shared<PolyRing>();
  r->field = field;
  r->vars = std::move(vars);
  r->order = order;
  return r;
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

int cmp_grevlex_range(const Exp& a, const Exp& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // larger last exponent is smaller
  }
  return 0;
}

}  // namespace

int PolyRing::cmp(const Exp& a, const Exp& b) const {
  const std::size_t n = nvars();
  switch (order.kind) {
    case MonomialOrder::Grevlex:
      return cmp_grevlex_range(a, b, 0, n);
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Block: {
      std::size_t lo = 0;
      for (int bsz : order.blocks) {
        std::size_t hi = lo + static_cast<std::size_t>(bsz);
        int c = cmp_grevlex_range(a, b, lo, hi);
        if (c != 0) return c;
        lo = hi;
      }
      return 0;
    }
  }
  return 0;
}

long total_degree(const Exp& e) {
  long d = 0;
  for (auto x : e) d += x;
  return d;
}

bool exp_divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp exp_mul(const Exp& a, const Exp& b, const Limits& lim) {
  Exp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] > static_cast<std::uint32_t>(lim.max_exponent))
      throw cutoff_error("exponent overflow");
  }
  return r;
}

Exp exp_div(const Exp& b, const Exp& a) {
  Exp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Poly::Poly(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  for (auto& t : terms_) {
    if (t.exp.size() != ring_->nvars())
      throw ring_mismatch("exponent vector length mismatch");
    t.coeff = ring_->field.normalize(t.coeff);
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ring_->cmp(a.exp, b.exp) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = ring_->field.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : out)
    if (t.coeff != 0) terms_.push_back(std::move(t));
}

Poly Poly::constant(RingPtr ring, const mpq_class& c) {
  Exp e(ring->nvars(), 0);
  return monomial(std::move(ring), std::move(e), c);
}

Poly Poly::variable(RingPtr ring, int idx, std::uint32_t power) {
  if (idx < 0 || idx >= static_cast<int>(ring->nvars()))
    throw ring_mismatch("variable index out of range");
  Exp e(ring->nvars(), 0);
  e[idx] = power;
  return monomial(std::move(ring), std::move(e), 1);
}

Poly Poly::monomial(RingPtr ring, Exp e, const mpq_class& c) {
  Poly p(ring);
  mpq_class cc = ring->field.normalize(c);
  if (cc != 0) p.terms_.push_back(Term{std::move(e), std::move(cc)});
  return p;
}

long Poly::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.exp));
  return d;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw math_error("leading term of zero polynomial");
  return terms_.front();
}

void require_same_ring(const Poly& a, const Poly& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same_as(*b.ring()))
    throw ring_mismatch("operands belong to different rings");
}

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(*this, o);
  std::vector<Term> ts;
  ts.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& f = ring_->field;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ring_->cmp(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      ts.push_back(terms_[i++]);
    } else if (c < 0) {
      ts.push_back(o.terms_[j++]);
    } else {
      mpq_class s = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s != 0) ts.push_back(Term{terms_[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) ts.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) ts.push_back(o.terms_[j]);
  Poly r(ring_);
  r.terms_ = std::move(ts);
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_monomial(const Exp& e, const mpq_class& c, const Limits& lim) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  const auto& f = ring_->field;
  for (const auto& t : terms_) {
    mpq_class cc = f.mul(t.coeff, c);
    if (cc != 0) r.terms_.push_back(Term{exp_mul(t.exp, e, lim), std::move(cc)});
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(*this, o);
  Poly acc(ring_);
  for (const auto& t : o.terms_) acc = acc + times_monomial(t.exp, t.coeff);
  return acc;
}

Poly Poly::scaled(const mpq_class& c) const {
  Exp e(ring_->nvars(), 0);
  return times_monomial(e, ring_->field.normalize(c));
}

Poly Poly::pow(unsigned long n) const {
  Poly r = Poly::constant(ring_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
  require_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.ring_->cmp(a.terms_[i].exp, b.terms_[i].exp);
    if (c != 0) return c;
    if (a.terms_[i].coeff != b.terms_[i].coeff)
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field.inv(leading_term().coeff));
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = total_degree(terms_[0].exp);
  for (const auto& t : terms_)
    if (total_degree(t.exp) != d) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (neg) c = -c;
    bool has_vars = total_degree(t.exp) > 0;
    if (c != 1 || !has_vars) {
      os << coeff_to_string(c);
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << ring_->vars[i];
      if (t.exp[i] > 1) os << "^" << t.exp[i];
    }
  }
  return os.str();
}

Poly partial_derivative(const Poly& f, int var) {
  const auto& ring = f.ring();
  if (var < 0 || var >= static_cast<int>(ring->nvars()))
    throw ring_mismatch("unknown variable");
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    if (t.exp[var] == 0) continue;
    Term u = t;
    u.coeff = ring->field.mul(t.coeff, mpq_class(static_cast<long>(t.exp[var])));
    u.exp[var] -= 1;
    if (u.coeff != 0) ts.push_back(std::move(u));
  }
  return Poly(ring, std::move(ts));
}

Poly partial_derivative(const Poly& f, const std::string& var) {
  int idx = f.ring()->var_index(var);
  if (idx < 0) throw ring_mismatch("unknown variable: " + var);
  return partial_derivative(f, idx);
}

std::vector<std::vector<Poly>> jacobian_matrix(const std::vector<Poly>& gens) {
  if (gens.empty()) return {};
  const auto& ring = gens[0].ring();
  std::vector<std::vector<Poly>> m;
  for (const auto& g : gens) {
    require_same_ring(g, gens[0]);
    std::vector<Poly> row;
    for (std::size_t j = 0; j < ring->nvars(); ++j)
      row.push_back(partial_derivative(g, static_cast<int>(j)));
    m.push_back(std::move(row));
  }
  return m;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw math_error("determinant of empty matrix");
  const auto& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  Poly acc = Poly::zero(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Vec vec_zero(const RingPtr& ring, int rank) {
  return Vec(static_cast<std::size_t>(rank), Poly::zero(ring));
}

Vec unit_vec(const RingPtr& ring, int rank, int pos) {
  Vec v = vec_zero(ring, rank);
  v[static_cast<std::size_t>(pos)] = Poly::constant(ring, 1);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Vec vec_scaled(const Vec& a, const mpq_class& c) {
  Vec r = a;
  for (auto& p : r) p = p.scaled(c);
  return r;
}

Vec vec_times_poly(const Vec& a, const Poly& f) {
  Vec r = a;
  for (auto& p : r) p = p * f;
  return r;
}

Vec vec_times_monomial(const Vec& a, const Exp& e, const mpq_class& c,
                       const Limits& lim) {
  Vec r = a;
  for (auto& p : r) p = p.times_monomial(e, c, lim);
  return r;
}

bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

int vec_cmp(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = Poly::cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string vec_to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

Poly promote(const Poly& f, const RingPtr& bigger) {
  const auto& small = f.ring();
  if (bigger->nvars() < small->nvars())
    throw ring_mismatch("target ring has fewer variables");
  for (std::size_t i = 0; i < small->nvars(); ++i)
    if (small->vars[i] != bigger->vars[i])
      throw ring_mismatch("variable mismatch in ring extension");
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Term u;
    u.exp = t.exp;
    u.exp.resize(bigger->nvars(), 0);
    u.coeff = t.coeff;
    ts.push_back(std::move(u));
  }
  return Poly(bigger, std::move(ts));
}

}  // namespace modgen

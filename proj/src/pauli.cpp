#include "spinchain/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "spinchain/error.hpp"
#include "spinchain/format.hpp"

namespace spinchain {

namespace {

void require_same_length(int a, int b) {
  if (a != b) {
    throw DimensionError("operator length mismatch: " + std::to_string(a) +
                         " vs " + std::to_string(b));
  }
}

void require_position(int k, int n) {
  if (k < 1 || k > n) {
    throw IndexError("spin index " + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  }
}

// Phase of sigma_a * sigma_b, with the letter given by a ^ b.
Complex letter_phase(PauliLetter a, PauliLetter b) {
  if (a == PauliLetter::I || b == PauliLetter::I || a == b) return 1.0;
  const int d = (static_cast<int>(b) - static_cast<int>(a) + 3) % 3;
  return d == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
}

int first_position(const Letters& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] != PauliLetter::I) return static_cast<int>(i);
  }
  return static_cast<int>(l.size());
}

std::string coefficient_prefix(Complex d) {
  const std::string re = format_number(d.real());
  const std::string im = format_number(d.imag());
  if (im == "0") {
    if (re == "1") return "";
    if (re == "-1") return "-";
    return re + "*";
  }
  if (re == "0") {
    if (im == "1") return "i*";
    if (im == "-1") return "-i*";
    return im + "i*";
  }
  return format_complex(d) + "*";
}

std::string term_string(const Letters& letters, Complex c) {
  // Rounding residue in one part of an otherwise kept coefficient.
  const auto snap = [](double v) { return std::abs(v) < kPruneThreshold ? 0.0 : v; };
  c = {snap(c.real()), snap(c.imag())};
  const int w = weight(letters);
  if (w == 0) return format_complex(c);
  // Each sigma is 2 I, so the coefficient on prod I is c * 2^w.
  std::string out = coefficient_prefix(c * static_cast<double>(1L << w));
  bool first = true;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == PauliLetter::I) continue;
    if (!first) out += "*";
    first = false;
    out += "I" + std::to_string(i + 1);
    out += axis_char(static_cast<Axis>(letters[i]));
  }
  return out;
}

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

std::optional<Axis> parse_axis(std::string_view s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  return std::nullopt;
}

int levi_civita(Axis a, Axis b, Axis c) {
  if (a == b || b == c || a == c) return 0;
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  return (ib - ia + 3) % 3 == 1 ? 1 : -1;
}

int weight(const Letters& letters) {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(),
                                        [](PauliLetter l) { return l != PauliLetter::I; }));
}

bool commutes(const Letters& a, const Letters& b) {
  require_same_length(static_cast<int>(a.size()), static_cast<int>(b.size()));
  int clashes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != PauliLetter::I && b[i] != PauliLetter::I && a[i] != b[i]) ++clashes;
  }
  return clashes % 2 == 0;
}

PauliString PauliString::identity(int n, Complex c) {
  return PauliString{Letters(static_cast<std::size_t>(n), PauliLetter::I), c};
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  require_same_length(p.size(), q.size());
  PauliString r{Letters(p.letters.size()), p.coeff * q.coeff};
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    const auto a = p.letters[i], b = q.letters[i];
    r.letters[i] = static_cast<PauliLetter>(static_cast<int>(a) ^ static_cast<int>(b));
    r.coeff *= letter_phase(a, b);
  }
  return r;
}

OperatorSum::OperatorSum(int n) : n_(n) {
  if (n < 1) throw ArgumentError("operator needs at least one spin");
}

OperatorSum::OperatorSum(const PauliString& p) : OperatorSum(p.size()) {
  accumulate(p.letters, p.coeff);
  prune();
}

Complex OperatorSum::coefficient(const Letters& letters) const {
  auto it = terms_.find(letters);
  return it == terms_.end() ? Complex{} : it->second;
}

void OperatorSum::accumulate(const Letters& letters, Complex c) {
  require_same_length(n_, static_cast<int>(letters.size()));
  terms_[letters] += c;
}

void OperatorSum::prune(double threshold) {
  std::erase_if(terms_, [threshold](const auto& kv) { return std::abs(kv.second) < threshold; });
}

double OperatorSum::norm2() const {
  double s = 0.0;
  for (const auto& [_, c] : terms_) s += std::norm(c);
  return s;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  require_same_length(n_, other.n_);
  for (const auto& [l, c] : other.terms_) terms_[l] += c;
  prune();
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& other) {
  require_same_length(n_, other.n_);
  for (const auto& [l, c] : other.terms_) terms_[l] -= c;
  prune();
  return *this;
}

OperatorSum& OperatorSum::operator*=(Complex s) {
  for (auto& [_, c] : terms_) c *= s;
  prune();
  return *this;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  require_same_length(a.n_, b.n_);
  OperatorSum out(a.n_);
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      const auto r = multiply(PauliString{la, ca}, PauliString{lb, cb});
      out.accumulate(r.letters, r.coeff);
    }
  }
  out.prune();
  return out;
}

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b) {
  require_same_length(a.n(), b.n());
  OperatorSum out(a.n());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      if (commutes(la, lb)) continue;
      // Anticommuting strings: PQ - QP = 2PQ.
      const auto r = multiply(PauliString{la, ca}, PauliString{lb, cb});
      out.accumulate(r.letters, 2.0 * r.coeff);
    }
  }
  out.prune();
  return out;
}

OperatorSum adjoint(const OperatorSum& a) {
  OperatorSum out(a.n());
  for (const auto& [l, c] : a.terms()) out.accumulate(l, std::conj(c));
  return out;
}

Complex overlap(const OperatorSum& a, const OperatorSum& b) {
  require_same_length(a.n(), b.n());
  const double na = a.norm2(), nb = b.norm2();
  if (na == 0.0 || nb == 0.0) throw UndefinedOverlapError("overlap with the zero operator");
  Complex dot{};
  for (const auto& [l, cb] : b.terms()) {
    const Complex ca = a.coefficient(l);
    if (ca != Complex{}) dot += std::conj(cb) * ca;
  }
  return dot / std::sqrt(na * nb);
}

PauliString product_operator(std::span<const Factor> factors, int n) {
  if (factors.empty()) throw ArgumentError("product operator needs at least one factor");
  PauliString p = PauliString::identity(n, 0.5);
  for (const auto& f : factors) {
    require_position(f.position, n);
    auto& slot = p.letters[static_cast<std::size_t>(f.position - 1)];
    if (slot != PauliLetter::I) {
      throw ArgumentError("duplicate position " + std::to_string(f.position) +
                          " in product operator");
    }
    slot = letter_of(f.axis);
  }
  return p;
}

PauliString product_operator(std::initializer_list<Factor> factors, int n) {
  return product_operator(std::span<const Factor>(factors.begin(), factors.size()), n);
}

PauliString spin_operator(int k, Axis axis, int n) { return product_operator({{k, axis}}, n); }

PauliString lambda_op(int k, Axis axis, int n) {
  if (k < 3 || k > n) {
    throw IndexError("soliton operator index " + std::to_string(k) + " outside 3.." +
                     std::to_string(n));
  }
  switch (axis) {
    case Axis::X: return product_operator({{k - 2, Axis::X}, {k - 1, Axis::Z}}, n);
    case Axis::Y: return product_operator({{k - 1, Axis::X}, {k, Axis::Z}}, n);
    case Axis::Z:
      return product_operator({{k - 2, Axis::X}, {k - 1, Axis::Y}, {k, Axis::Z}}, n);
  }
  throw ArgumentError("bad axis");
}

OperatorSum ladder_minus(int k, int n) {
  require_position(k, n);
  OperatorSum out(spin_operator(k, Axis::X, n));
  out -= Complex{0.0, 1.0} * OperatorSum(spin_operator(k, Axis::Y, n));
  return out;
}

OperatorSum lambda_minus(int k, int n) {
  OperatorSum out(lambda_op(k, Axis::X, n));
  out -= Complex{0.0, 1.0} * OperatorSum(lambda_op(k, Axis::Y, n));
  return out;
}

bool display_less(const Letters& a, const Letters& b) {
  const int wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  const int fa = first_position(a), fb = first_position(b);
  if (fa != fb) return fa < fb;
  return a < b;
}

std::string to_product_notation(const OperatorSum& a) {
  if (a.empty()) return "0";
  std::vector<const OperatorSum::TermMap::value_type*> order;
  for (const auto& kv : a.terms()) order.push_back(&kv);
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return display_less(x->first, y->first); });
  std::string out;
  for (const auto* kv : order) {
    std::string t = term_string(kv->first, kv->second);
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

std::string to_product_notation(const PauliString& p) { return to_product_notation(OperatorSum(p)); }

std::string letters_string(const Letters& letters) {
  std::string s;
  for (auto l : letters) s += "_XYZ"[static_cast<int>(l)];
  return s;
}

}  // namespace spinchain

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spinchain {

using Complex = std::complex<double>;

// Coefficients below this magnitude are dropped whenever an OperatorSum is
// collected.
inline constexpr double kPruneThreshold = 1e-14;

// Encoding is load-bearing: the product letter of two Paulis is the XOR of
// their codes.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

inline constexpr Axis kAxes[] = {Axis::X, Axis::Y, Axis::Z};

constexpr PauliLetter letter_of(Axis a) { return static_cast<PauliLetter>(a); }

char axis_char(Axis a);
std::optional<Axis> parse_axis(std::string_view s);

// Levi-Civita symbol over {x, y, z}.
int levi_civita(Axis a, Axis b, Axis c);

// Spin k (1-based) lives at letters[k - 1].
using Letters = std::vector<PauliLetter>;

int weight(const Letters& letters);

// True iff the two strings commute as matrices (even number of positions
// where both are non-identity and differ).
bool commutes(const Letters& a, const Letters& b);

// Tensor product of Pauli matrices (sigma level, not spin-1/2 operators)
// with a complex prefactor.
struct PauliString {
  Letters letters;
  Complex coeff{1.0, 0.0};

  int size() const { return static_cast<int>(letters.size()); }
  int weight() const { return spinchain::weight(letters); }

  static PauliString identity(int n, Complex c = 1.0);

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

// Matrix product P*Q with the single-site phases absorbed into the
// coefficient.
PauliString multiply(const PauliString& p, const PauliString& q);

// Sparse linear combination of Pauli strings on an n-spin chain.
class OperatorSum {
 public:
  using TermMap = std::map<Letters, Complex>;

  explicit OperatorSum(int n);
  OperatorSum(const PauliString& p);  // NOLINT(google-explicit-constructor)

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Zero when the string is absent.
  Complex coefficient(const Letters& letters) const;

  // Accumulates without pruning; call prune() when the batch is complete.
  void accumulate(const Letters& letters, Complex c);
  void prune(double threshold = kPruneThreshold);

  // Sum of |c|^2; proportional to Tr(A^dagger A).
  double norm2() const;

  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator-=(const OperatorSum& other);
  OperatorSum& operator*=(Complex s);

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(OperatorSum a, Complex s) { return a *= s; }
  friend OperatorSum operator*(Complex s, OperatorSum a) { return a *= s; }
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);

  friend bool operator==(const OperatorSum&, const OperatorSum&) = default;

 private:
  int n_;
  TermMap terms_;
};

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b);
OperatorSum adjoint(const OperatorSum& a);

// Normalized trace overlap Tr(B^dagger A) / sqrt(Tr(A^dagger A) Tr(B^dagger B)).
// Distinct Pauli strings are trace-orthogonal, so this is a coefficient dot
// product.
Complex overlap(const OperatorSum& a, const OperatorSum& b);

struct Factor {
  int position;
  Axis axis;
};

// 2^(w-1) * prod I_{k alpha}; every such product operator has sigma-level
// coefficient 1/2.
PauliString product_operator(std::span<const Factor> factors, int n);
PauliString product_operator(std::initializer_list<Factor> factors, int n);

// I_{k alpha}
PauliString spin_operator(int k, Axis axis, int n);

// Soliton operators:
//   x: 2 I_{k-2,x} I_{k-1,z}
//   y: 2 I_{k-1,x} I_{k,z}
//   z: 4 I_{k-2,x} I_{k-1,y} I_{k,z}
// Valid for 3 <= k <= n.
PauliString lambda_op(int k, Axis axis, int n);

// I_k^- = I_kx - i I_ky
OperatorSum ladder_minus(int k, int n);
// Lambda_k^- = Lambda_kx - i Lambda_ky
OperatorSum lambda_minus(int k, int n);

// Product-operator notation, e.g. "I1x - i*I1y" or "-2*I1y*I2z". Terms are
// ordered by weight, first position, then axis.
std::string to_product_notation(const OperatorSum& a);
std::string to_product_notation(const PauliString& p);

// Canonical display order used by to_product_notation.
bool display_less(const Letters& a, const Letters& b);

// Compact letter form such as "X_Z__".
std::string letters_string(const Letters& letters);

}  // namespace spinchain

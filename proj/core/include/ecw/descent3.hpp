#pragma once

// 3-isogeny descent bound for Type-I curves y^2 = x^3 + a, with 3-ranks of
// quadratic class groups computed from binary quadratic forms.

#include <cstdint>
#include <string>
#include <vector>

#include "ecw/arith.hpp"

namespace ecw {

struct SPrimeSet {
  Integer a;
  std::vector<Integer> primes;
};

/// {2, 3} together with p != 2, 3 such that nu_p(a) is 2 or 4 and p = 1 mod 3.
SPrimeSet s_set(const Integer& a);

/// Primitive positive definite form a x^2 + b xy + c y^2.
struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

QuadraticForm reduce(QuadraticForm f);
QuadraticForm identity_form(std::int64_t D);
/// Gauss composition of forms of equal discriminant, reduced.
QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g);

/// Reduced primitive forms of discriminant D < 0, i.e. the class group.
std::vector<QuadraticForm> reduced_forms(std::int64_t D);
std::size_t class_number(std::int64_t D);

/// 3-rank of the form class group of discriminant D. DomainError unless D < 0
/// and D = 0, 1 mod 4.
unsigned r3_imaginary(std::int64_t D);

/// d if d = 1 mod 4, otherwise 4d.
Integer fundamental_discriminant(const Integer& kernel);

enum class ClassMethod { ExactImaginary, ScholzBound, RationalTrivial };
std::string to_string(ClassMethod m);

struct ClassGroup3 {
  Integer field_kernel;  // 1 stands for Q itself
  bool rational = false;
  unsigned r3 = 0;
  ClassMethod method = ClassMethod::RationalTrivial;
};

/// `kernel` is a square-free integer, 1 meaning the field is Q. Real fields
/// are bounded through the imaginary field Q(sqrt(-3d)).
ClassGroup3 class_bound(const Integer& kernel);

/// dim over F_3 of units modulo cubes for Q(sqrt(kernel)).
unsigned unit_3dim(const Integer& kernel);

struct Type1Bound {
  int bound = 0;
  ClassGroup3 k_a;       // Q(sqrt(-3a))
  ClassGroup3 k_27a;     // Q(sqrt(a))
  unsigned unit_a = 0;
  unsigned unit_27a = 0;
  SPrimeSet s_a;
  SPrimeSet s_27a;

  /// Class-group and unit part of the bound.
  int class_unit_part() const { return static_cast<int>(k_a.r3 + unit_a + k_27a.r3 + unit_27a); }
};

Type1Bound rank_upper_type1(const Integer& a);

}  // namespace ecw

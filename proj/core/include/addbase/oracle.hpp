#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "addbase/intset.hpp"

namespace addbase {

/// Exact membership of the h-fold sumset hA over [lo, hi).
class SumsetWindow {
 public:
  SumsetWindow(Int h, Int lo, Int hi);

  Int h() const noexcept { return h_; }
  Int lo() const noexcept { return lo_; }
  Int hi() const noexcept { return hi_; }

  bool test(Int n) const noexcept;
  void set(Int n) noexcept;
  std::size_t count() const noexcept;
  bool full() const noexcept { return count() == static_cast<std::size_t>(hi_ - lo_); }
  std::vector<Int> members() const;
  std::vector<Int> missing() const;

  /// Bit n - lo lives in byte (n - lo) / 8 at position (n - lo) % 8, LSB
  /// first; bytes are written in order as two lowercase hex digits.
  std::string hex() const;

 private:
  Int h_, lo_, hi_;
  std::vector<std::uint64_t> words_;
};

/// Dynamic programming over h rounds on an element pool large enough that
/// no representable sum in the window is missed. Throws EmptySet, InvalidRange.
SumsetWindow sumset_window(const PeriodicSet& s, Int h, Int lo, Int hi);

/// Windows for h = 1..h_max, computed incrementally.
std::vector<SumsetWindow> sumset_ladder(const PeriodicSet& s, Int h_max, Int lo, Int hi);

/// h elements of s summing to n, if n ∈ hA.
std::optional<std::vector<Int>> sumset_witness(const PeriodicSet& s, Int h, Int n);

/// Windowed evidence only: coverage of a finite window never proves
/// cofiniteness.
struct EmpiricalOrder {
  std::optional<Int> order;  // none means NoneUpTo(h_max)
  Int h_max = 0;

  std::string to_string() const;
};

/// Least h <= h_max whose sumset covers [lo, hi). The window must span at
/// least 3·m·h_max integers.
EmpiricalOrder empirical_order(const PeriodicSet& s, Int h_max, Int lo, Int hi);

struct WindowBasisVerdict {
  Int window_gcd = 0;          // gcd of differences of all elements in [min, hi)
  bool upper_nonempty = false;  // elements in the top half of the window

  bool basis() const noexcept { return window_gcd == 1 && upper_nonempty; }
};

/// Brute-force basis evidence from enumerated elements, independent of the
/// residue-class shortcut in diff_gcd(). The window [lo, hi) is shifted up
/// past the largest exceptional element before looking for members.
WindowBasisVerdict windowed_basis_verdict(const PeriodicSet& s, Int lo, Int hi);

/// Every P ⊆ pool that is minimal with s \ P not a basis, by increasing size.
std::vector<std::vector<Int>> brute_essential_subsets(const PeriodicSet& s, std::span<const Int> pool);

}  // namespace addbase

#pragma once

#include "jamflow/errors.hpp"
#include "jamflow/rational.hpp"

namespace jamflow {

// One lattice site: empty (a hole) or a particle carrying an exact velocity.
// Holes are a distinct tag, never a sentinel velocity, because general-mode
// dynamics has genuine velocity -1 particles.
class Cell {
 public:
  constexpr Cell() = default;  // hole

  static Cell hole() { return Cell(); }
  static Cell particle(Rational velocity) {
    Cell c;
    c.hole_ = false;
    c.velocity_ = velocity;
    return c;
  }

  bool is_hole() const { return hole_; }
  bool is_particle() const { return !hole_; }

  const Rational& velocity() const {
    if (hole_) throw DomainError("velocity of a hole");
    return velocity_;
  }

  friend bool operator==(const Cell& a, const Cell& b) {
    if (a.hole_ != b.hole_) return false;
    return a.hole_ || a.velocity_ == b.velocity_;
  }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }

 private:
  Rational velocity_;
  bool hole_ = true;
};

}  // namespace jamflow

#pragma once
#include <memory>
#include <mutex>
#include <vector>

#include "linklab/polynomial.hpp"

namespace linklab {

// Write-once cache cell shared across copies of a value type. call_once keeps
// concurrent readers safe; a throwing computation releases the flag for retry.
template <class T>
class OnceCell {
 public:
  template <class F>
  const T& get(F&& compute) const {
    std::call_once(flag_, [&] { value_ = std::make_shared<const T>(compute()); });
    return *value_;
  }
  bool ready() const { return static_cast<bool>(value_); }

 private:
  mutable std::once_flag flag_;
  mutable std::shared_ptr<const T> value_;
};

class RingPresentation;
using PresPtr = std::shared_ptr<const RingPresentation>;

// A quotient of a polynomial ring: ambient ring plus defining relations (the
// empty list presents the polynomial ring itself). Every ideal operation
// adjoins the relations upstairs, so ideals are always preimages in the
// ambient ring. Local statements at the ideal of variables are certified by
// these global computations.
class RingPresentation {
 public:
  static PresPtr make(RingPtr ambient, std::vector<Polynomial> quotient = {});

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& quotient() const { return quotient_; }
  bool has_quotient() const { return !quotient_.empty(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  FieldSpec field() const { return ambient_->field(); }
  bool same_as(const RingPresentation& o) const;

  RingPresentation(RingPtr ambient, std::vector<Polynomial> quotient);

 private:
  RingPtr ambient_;
  std::vector<Polynomial> quotient_;
};

void check_same_presentation(const RingPresentation& a, const RingPresentation& b);

}  // namespace linklab

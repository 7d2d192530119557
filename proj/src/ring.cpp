#include "linklab/ring.hpp"

namespace linklab {

RingPresentation::RingPresentation(RingPtr ambient, std::vector<Polynomial> quotient)
    : ambient_(std::move(ambient)) {
  for (Polynomial& q : quotient) {
    if (!q.ring() || !q.ring()->same_as(*ambient_))
      throw StructuralError("quotient relation from a different ring");
    if (q.is_zero()) continue;
    quotient_.push_back(std::move(q));
  }
}

PresPtr RingPresentation::make(RingPtr ambient, std::vector<Polynomial> quotient) {
  return std::make_shared<const RingPresentation>(std::move(ambient), std::move(quotient));
}

bool RingPresentation::same_as(const RingPresentation& o) const {
  if (this == &o) return true;
  if (!ambient_->same_as(*o.ambient_)) return false;
  if (quotient_.size() != o.quotient_.size()) return false;
  for (std::size_t i = 0; i < quotient_.size(); ++i)
    if (!(quotient_[i] == o.quotient_[i])) return false;
  return true;
}

void check_same_presentation(const RingPresentation& a, const RingPresentation& b) {
  if (!a.same_as(b)) throw StructuralError("objects from different ring presentations");
}

}  // namespace linklab

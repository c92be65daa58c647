#ifndef CORECALC_RING_HPP
#define CORECALC_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "corecalc/errors.hpp"
#include "corecalc/field.hpp"
#include "corecalc/monomial.hpp"

namespace corecalc {

// Ambient polynomial ring descriptor. Polynomials and ideals hold a shared
// pointer to one of these; two descriptors are interchangeable when their
// contents agree.
struct Ring {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool operator==(const Ring& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field field, std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::grevlex()) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw PreconditionError("duplicate variable name '" + vars[i] + "'");
  return std::make_shared<Ring>(Ring{std::move(field), std::move(vars), order});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw PreconditionError("mismatched rings");
}

// Ring with `count` fresh elimination variables prepended, under the block
// order that eliminates them. Fresh names avoid clashes with user names.
inline RingPtr extend_ring_front(const RingPtr& base, std::size_t count) {
  if (base->order.kind() == MonomialOrder::Kind::elim)
    throw PreconditionError("cannot extend an elimination ring");
  std::vector<std::string> vars;
  vars.reserve(base->nvars() + count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = "t" + std::to_string(i) + "_";
    while (base->var_index(name) >= 0) name += "_";
    vars.push_back(name);
  }
  vars.insert(vars.end(), base->vars.begin(), base->vars.end());
  return make_ring(base->field, std::move(vars),
                   MonomialOrder::elim_block(count, base->order.kind()));
}

}  // namespace corecalc

#endif  // CORECALC_RING_HPP

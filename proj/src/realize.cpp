#include <string>

#include "cc2/error.hpp"
#include "cc2/group.hpp"
#include "cc2/subgroups.hpp"

namespace cc2 {

ConcreteGroup realize(const Presentation& p, const RealizeOptions& opts,
                      std::optional<GroupSpec> spec) {
  const CosetTable table = enumerate_cosets(p, opts.enumeration);
  if (opts.check_order_claim && p.order_claim != 0 && table.size != p.order_claim) {
    throw ConsistencyError("enumeration gave order " + std::to_string(table.size) +
                           ", presentation claims " + std::to_string(p.order_claim));
  }
  return ConcreteGroup(table, p.generators, std::move(spec));
}

ConcreteGroup realize(const GroupSpec& spec, const RealizeOptions& opts) {
  const Presentation p = build_presentation(spec);
  try {
    ConcreteGroup g = realize(p, opts, spec);
    const int cls = nilpotency_class(g);
    if (cls != spec.n - 2) {
      throw ConsistencyError("nilpotency class " + std::to_string(cls) + ", expected " +
                             std::to_string(spec.n - 2));
    }
    return g;
  } catch (const ConsistencyError& e) {
    throw ConsistencyError(spec.label() + ": " + e.what());
  }
}

}  // namespace cc2

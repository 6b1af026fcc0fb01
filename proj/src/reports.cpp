#include "selberg/reports.hpp"

namespace selberg {
// Report builders are implemented incrementally; see reports.hpp.
} // namespace selberg

#include "shortwell/energy_series.hpp"

namespace shortwell {

std::string_view to_string(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::implicit: return "implicit";
    case SeriesMethod::tmethod: return "tmethod";
    case SeriesMethod::beta: return "beta";
    case SeriesMethod::lseries: return "lseries";
    case SeriesMethod::rspt: return "rspt";
  }
  return "unknown";
}

}  // namespace shortwell

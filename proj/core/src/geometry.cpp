#include "wakevec/geometry.hpp"

// Header-only for now; translation unit kept so the target always has the
// geometry symbols if anything moves out of line later.

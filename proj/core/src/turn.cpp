#include "instanton/turn.hpp"

// Turn is header-only apart from this translation unit, which keeps the
// library's source list aligned with the public headers.

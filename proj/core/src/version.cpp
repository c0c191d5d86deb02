#include "fakepolisher/fakepolisher.hpp"

namespace fakepolisher {

const char* version() noexcept { return FAKEPOLISHER_VERSION; }

} // namespace fakepolisher

#pragma once

#include "fakepolisher/dictionary.hpp"
#include "fakepolisher/dictionary_io.hpp"
#include "fakepolisher/dictlearn.hpp"
#include "fakepolisher/errors.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher/filters.hpp"
#include "fakepolisher/image.hpp"
#include "fakepolisher/image_io.hpp"
#include "fakepolisher/masking.hpp"
#include "fakepolisher/metrics.hpp"
#include "fakepolisher/parallel.hpp"
#include "fakepolisher/patches.hpp"
#include "fakepolisher/polish.hpp"
#include "fakepolisher/random.hpp"
#include "fakepolisher/sparse_coding.hpp"
#include "fakepolisher/spectrum.hpp"
#include "fakepolisher/synth.hpp"
#include "fakepolisher/toy.hpp"

namespace fakepolisher {
const char* version() noexcept;
}

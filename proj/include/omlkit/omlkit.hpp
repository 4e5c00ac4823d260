#pragma once

#include "omlkit/bits.hpp"
#include "omlkit/catalog.hpp"
#include "omlkit/error.hpp"
#include "omlkit/functorial.hpp"
#include "omlkit/io.hpp"
#include "omlkit/iso_lifting.hpp"
#include "omlkit/lattice.hpp"
#include "omlkit/poset.hpp"
#include "omlkit/reconstruction.hpp"
#include "omlkit/sachs.hpp"
#include "omlkit/subalgebras.hpp"

#pragma once

#include "brc/checked.hpp"
#include "brc/cryptanalysis.hpp"
#include "brc/element.hpp"
#include "brc/equivariant.hpp"
#include "brc/error.hpp"
#include "brc/generator.hpp"
#include "brc/key.hpp"
#include "brc/protocol.hpp"
#include "brc/verify.hpp"

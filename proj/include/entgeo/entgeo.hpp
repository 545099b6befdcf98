// Umbrella header.

#pragma once

#include "entgeo/catalog.hpp"
#include "entgeo/entropy.hpp"
#include "entgeo/errors.hpp"
#include "entgeo/geometry.hpp"
#include "entgeo/ket_parser.hpp"
#include "entgeo/random.hpp"
#include "entgeo/state.hpp"
#include "entgeo/teleport.hpp"

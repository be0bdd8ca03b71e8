#pragma once

#include "rb3lie/rational.hpp"
#include "rb3lie/matrix.hpp"
#include "rb3lie/tuples.hpp"
#include "rb3lie/three_lie.hpp"
#include "rb3lie/rota_baxter.hpp"
#include "rb3lie/representation.hpp"
#include "rb3lie/cochain.hpp"
#include "rb3lie/differentials.hpp"
#include "rb3lie/cohomology.hpp"
#include "rb3lie/deformation.hpp"
#include "rb3lie/extensions.hpp"
#include "rb3lie/two_algebra.hpp"
#include "rb3lie/io.hpp"
#include "rb3lie/cli.hpp"

#pragma once

#include "gcpres/determinant.hpp"
#include "gcpres/errors.hpp"
#include "gcpres/format.hpp"
#include "gcpres/gcd.hpp"
#include "gcpres/gcp.hpp"
#include "gcpres/parser.hpp"
#include "gcpres/poly.hpp"
#include "gcpres/pres.hpp"
#include "gcpres/resultant.hpp"
#include "gcpres/system.hpp"

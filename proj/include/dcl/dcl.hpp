#pragma once

#include "dcl/bounds.hpp"
#include "dcl/construction.hpp"
#include "dcl/error.hpp"
#include "dcl/exactform.hpp"
#include "dcl/gadget.hpp"
#include "dcl/graph.hpp"
#include "dcl/oracle.hpp"

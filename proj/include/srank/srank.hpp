#pragma once

#include "srank/contraction.hpp"
#include "srank/decompositions.hpp"
#include "srank/entanglement.hpp"
#include "srank/error.hpp"
#include "srank/jamiolkowski.hpp"
#include "srank/linalg.hpp"
#include "srank/permutation.hpp"
#include "srank/symmetry.hpp"
#include "srank/tableau.hpp"
#include "srank/tensor.hpp"
#include "srank/young.hpp"

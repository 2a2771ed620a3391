#pragma once

#include "polyseq/error.hpp"
#include "polyseq/families.hpp"
#include "polyseq/hspec.hpp"
#include "polyseq/io.hpp"
#include "polyseq/linearization.hpp"
#include "polyseq/matrix.hpp"
#include "polyseq/oracle.hpp"
#include "polyseq/orthogonal.hpp"
#include "polyseq/polynomial.hpp"
#include "polyseq/rational.hpp"
#include "polyseq/sequences.hpp"
#include "polyseq/tensor.hpp"
#include "polyseq/verify.hpp"

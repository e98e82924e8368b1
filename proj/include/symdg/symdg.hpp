#ifndef SYMDG_SYMDG_HPP
#define SYMDG_SYMDG_HPP

#include "symdg/coset.hpp"
#include "symdg/cyclotomic.hpp"
#include "symdg/digraph.hpp"
#include "symdg/errors.hpp"
#include "symdg/gamma.hpp"
#include "symdg/gamma_rep.hpp"
#include "symdg/group.hpp"
#include "symdg/involutions.hpp"
#include "symdg/io.hpp"
#include "symdg/jordan.hpp"
#include "symdg/matrix.hpp"
#include "symdg/matrix_io.hpp"
#include "symdg/minpoly.hpp"
#include "symdg/permutation.hpp"
#include "symdg/polynomial.hpp"
#include "symdg/projective.hpp"
#include "symdg/rational.hpp"
#include "symdg/sigma.hpp"
#include "symdg/sigma_rep.hpp"
#include "symdg/tables.hpp"
#include "symdg/verify.hpp"
#include "symdg/words.hpp"

#endif // SYMDG_SYMDG_HPP

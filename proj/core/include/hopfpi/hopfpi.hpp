#ifndef HOPFPI_HOPFPI_HPP
#define HOPFPI_HOPFPI_HPP

#include "hopfpi/comodule.hpp"
#include "hopfpi/commpoly.hpp"
#include "hopfpi/error.hpp"
#include "hopfpi/exactnum.hpp"
#include "hopfpi/hopf.hpp"
#include "hopfpi/identities.hpp"
#include "hopfpi/ncalg.hpp"
#include "hopfpi/parse.hpp"

#endif  // HOPFPI_HOPFPI_HPP

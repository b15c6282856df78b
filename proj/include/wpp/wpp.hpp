#ifndef WPP_WPP_HPP
#define WPP_WPP_HPP

#include "wpp/algebra.hpp"
#include "wpp/complex.hpp"
#include "wpp/error.hpp"
#include "wpp/integer.hpp"
#include "wpp/io.hpp"
#include "wpp/lemmas.hpp"
#include "wpp/oracle.hpp"
#include "wpp/parallel.hpp"
#include "wpp/ring.hpp"
#include "wpp/search.hpp"
#include "wpp/sequences.hpp"

#endif  // WPP_WPP_HPP

#ifndef WRONSK_HPP
#define WRONSK_HPP

#include "wronsk/bundle.hpp"
#include "wronsk/divisor.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/matrix.hpp"
#include "wronsk/ode.hpp"
#include "wronsk/parse.hpp"
#include "wronsk/poly.hpp"
#include "wronsk/random.hpp"
#include "wronsk/rat.hpp"
#include "wronsk/ratfunc.hpp"
#include "wronsk/squarefree.hpp"
#include "wronsk/verify.hpp"
#include "wronsk/wronskian.hpp"

#endif  // WRONSK_HPP

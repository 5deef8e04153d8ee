#ifndef LOGINT_LOGINT_HPP
#define LOGINT_LOGINT_HPP

#include "logint/errors.hpp"
#include "logint/integral.hpp"
#include "logint/quad.hpp"
#include "logint/specfun.hpp"
#include "logint/verify.hpp"

#endif // LOGINT_LOGINT_HPP

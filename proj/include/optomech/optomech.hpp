// optomech.hpp — Umbrella header

#pragma once

#include "optomech/config.hpp"
#include "optomech/displacement.hpp"
#include "optomech/expm.hpp"
#include "optomech/fock.hpp"
#include "optomech/hamiltonians.hpp"
#include "optomech/hilbert.hpp"
#include "optomech/io.hpp"
#include "optomech/laguerre.hpp"
#include "optomech/open_dynamics.hpp"
#include "optomech/operator_matrix.hpp"
#include "optomech/params.hpp"
#include "optomech/report.hpp"
#include "optomech/schrodinger.hpp"
#include "optomech/sideband.hpp"
#include "optomech/transforms.hpp"
#include "optomech/util.hpp"
#include "optomech/verify_suites.hpp"

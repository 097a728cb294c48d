#pragma once

#include "repstab/errors.hpp"
#include "repstab/rational.hpp"
#include "repstab/partition.hpp"
#include "repstab/symcore.hpp"
#include "repstab/permutation.hpp"
#include "repstab/ficombinat.hpp"
#include "repstab/linsolve.hpp"
#include "repstab/charpoly.hpp"
#include "repstab/xkpoly.hpp"
#include "repstab/modcalc.hpp"
#include "repstab/stability.hpp"
#include "repstab/json_io.hpp"

#include "support/pell_oracles.hpp"

#include "shearmix/torus.hpp"

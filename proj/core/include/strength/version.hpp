#pragma once

#define STRENGTH_VERSION "0.3.0"

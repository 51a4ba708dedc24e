#include "coheyt/scan.hpp"

#include <atomic>

namespace coheyt {

static std::atomic<scan_mode> g_mode{scan_mode::auto_pick};

scan_mode default_scan_mode() { return g_mode.load(); }

void set_default_scan_mode(scan_mode m) { g_mode.store(m); }

}

#pragma once

namespace vdw {
class RationalCurve;
}

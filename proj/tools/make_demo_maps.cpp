// Writes the synthetic two-corridor maps bundled under scenarios/.
//
// Layout for size N: a straight good-road corridor three cells wide along
// row N/2, and a bad-road detour three cells wide along row N/8 joined to
// the ends of the good corridor by vertical bad-road connectors. Start and
// goal sit on the two ends of the good corridor.

#include <iostream>
#include <string>

#include "escape/png_io.hpp"

namespace {

escape::RgbImage two_corridor(int n)
{
  using escape::legend::kBadRoad;
  using escape::legend::kGoodRoad;

  const int margin = n * 5 / 64;
  const int mid = n / 2;
  const int top = n / 8;
  escape::RgbImage img(n, n, escape::legend::kBackground);

  for (int x = margin - 1; x <= n - 1 - margin + 1; ++x) {
    for (int y = top - 1; y <= top + 1; ++y)
      img.set(x, y, kBadRoad);
  }
  for (const int cx : {margin, n - 1 - margin}) {
    for (int x = cx - 1; x <= cx + 1; ++x) {
      for (int y = top - 1; y <= mid + 1; ++y)
        img.set(x, y, kBadRoad);
    }
  }
  for (int x = margin; x <= n - 1 - margin; ++x) {
    for (int y = mid - 1; y <= mid + 1; ++y)
      img.set(x, y, kGoodRoad);
  }
  return img;
}

}  // namespace

int main(int argc, char** argv)
{
  const std::string dir = argc > 1 ? argv[1] : "scenarios";
  for (const int n : {128, 256}) {
    const std::string path = dir + "/two_corridor_" + std::to_string(n) + ".png";
    escape::write_png(path, two_corridor(n));
    std::cout << path << "\n";
  }
  return 0;
}

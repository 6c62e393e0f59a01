#!/usr/bin/env python3
# Copyright 2026 The Gapnav Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the ASCII fixture maps under fixtures/.

All maps use 0.1 m cells. Coordinates below are in meters with the origin at
the bottom-left corner, matching the map loader.
"""

import argparse
import pathlib

RES = 0.1


class Map:
    def __init__(self, width_m, height_m):
        self.w = round(width_m / RES)
        self.h = round(height_m / RES)
        self.cells = [["."] * self.w for _ in range(self.h)]  # [y][x], y up

    def _span(self, lo, hi, n):
        return range(max(0, round(lo / RES)), min(n, round(hi / RES)))

    def fill(self, x0, y0, x1, y1, symbol):
        for y in self._span(y0, y1, self.h):
            for x in self._span(x0, x1, self.w):
                self.cells[y][x] = symbol

    def wall(self, x0, y0, x1, y1):
        self.fill(x0, y0, x1, y1, "#")

    def clear(self, x0, y0, x1, y1):
        self.fill(x0, y0, x1, y1, ".")

    def border(self, thickness=0.2):
        wm, hm = self.w * RES, self.h * RES
        self.wall(0, 0, wm, thickness)
        self.wall(0, hm - thickness, wm, hm)
        self.wall(0, 0, thickness, hm)
        self.wall(wm - thickness, 0, wm, hm)

    def text(self):
        rows = ["".join(self.cells[y]) for y in range(self.h - 1, -1, -1)]
        return f"{self.w} {self.h} {RES}\n" + "\n".join(rows) + "\n"


def empty():
    return Map(20, 20)


def corridor():
    # A 7 x 8 m room on the left opens into a 1.2 m wide corridor that runs
    # east and is closed at x = 17.
    m = Map(18, 8)
    m.border()
    m.wall(7.0, 0.0, 7.2, 3.4)
    m.wall(7.0, 4.6, 7.2, 8.0)
    m.wall(7.2, 0.0, 18.0, 3.4)
    m.wall(7.2, 4.6, 18.0, 8.0)
    m.wall(16.8, 3.4, 18.0, 4.6)
    return m


def room_door():
    # A 7 x 7 m room with a single 0.9 m door centred in its east wall, inside
    # a larger open hall.
    m = Map(16, 12)
    m.border()
    x0, y0, x1, y1 = 2.0, 2.0, 9.4, 9.4
    m.wall(x0, y0, x1, y0 + 0.2)
    m.wall(x0, y1 - 0.2, x1, y1)
    m.wall(x0, y0, x0 + 0.2, y1)
    m.wall(x1 - 0.2, y0, x1, y1)
    m.clear(x1 - 0.2, 5.25, x1, 6.15)
    return m


def apartment():
    # Five 7 x 7 m rooms on a 3 x 2 plan; the north-east block belongs to a
    # neighbour and is solid. The south-middle room is the hub: doors lead
    # west, east and north from it, and the south-west room has a second door
    # north. Every doorway is 0.9 m wide and centred on its wall.
    m = Map(21.8, 14.6)
    m.border()
    m.wall(0.0, 7.2, 21.8, 7.4)    # between the rows
    m.wall(7.2, 0.0, 7.4, 14.6)    # between the west and middle columns
    m.wall(14.4, 0.0, 14.6, 7.2)   # between the middle and east columns
    m.wall(14.4, 7.2, 21.8, 14.6)  # neighbour's block
    m.clear(7.2, 3.25, 7.4, 4.15)
    m.clear(14.4, 3.25, 14.6, 4.15)
    m.clear(3.25, 7.2, 4.15, 7.4)
    m.clear(10.45, 7.2, 11.35, 7.4)
    # A sofa against the south-west room's north wall.
    m.wall(1.0, 5.2, 2.6, 6.2)
    return m


def single_room():
    m = Map(10, 8)
    m.border()
    return m


def walled_off():
    # An open area plus a sealed 3.6 x 3 m room against the east wall that no
    # path reaches.
    m = Map(12, 8)
    m.border()
    m.wall(7.8, 2.0, 12.0, 2.2)
    m.wall(7.8, 5.2, 12.0, 5.4)
    m.wall(7.8, 2.0, 8.0, 5.4)
    return m


def bend():
    # L-shaped 1.6 m corridor forcing a 90 degree left turn.
    m = Map(12, 12)
    m.fill(0, 0, 12, 12, "#")
    m.clear(0.2, 1.0, 9.6, 2.6)
    m.clear(8.0, 1.0, 9.6, 11.8)
    return m


def clutter():
    # Open hall with scattered pillars.
    m = Map(14, 10)
    m.border()
    for cx, cy in [(3.0, 3.0), (6.5, 6.5), (10.0, 3.5), (4.0, 7.5),
                   (8.5, 2.0), (11.5, 7.0)]:
        m.wall(cx - 0.3, cy - 0.3, cx + 0.3, cy + 0.3)
    m.wall(6.0, 0.0, 6.2, 3.5)
    return m


FIXTURES = {
    "empty.grid": empty,
    "corridor.grid": corridor,
    "room_door.grid": room_door,
    "apartment.grid": apartment,
    "single_room.grid": single_room,
    "walled_off.grid": walled_off,
    "bend.grid": bend,
    "clutter.grid": clutter,
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", type=pathlib.Path)
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for name, build in FIXTURES.items():
        (args.out_dir / name).write_text(build().text())


if __name__ == "__main__":
    main()

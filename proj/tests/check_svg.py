# Copyright 2026 The Kolam Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Renders every N=2 solution with the CLI and parses each SVG as XML.

usage: check_svg.py KOLAM_BINARY WORK_DIR
"""

import pathlib
import shutil
import subprocess
import sys
import xml.etree.ElementTree as ET

SVG = "{http://www.w3.org/2000/svg}"


def main():
    binary, work = sys.argv[1], pathlib.Path(sys.argv[2])
    shutil.rmtree(work, ignore_errors=True)
    subprocess.run([binary, "solutions", "--diamond", "2", "--out", str(work), "--render"],
                   check=True, stdout=subprocess.DEVNULL)
    hexes = (work / "solutions.txt").read_text().split()
    if len(hexes) != 240:
        sys.exit(f"expected 240 solutions, got {len(hexes)}")
    for h in hexes:
        root = ET.parse(work / f"{h}.svg").getroot()
        if root.tag != SVG + "svg":
            sys.exit(f"{h}.svg: root element is {root.tag}")
        paths = root.findall(f".//{SVG}path[@class='curve']")
        dots = root.findall(f".//{SVG}circle[@class='dot']")
        if len(paths) != 1 or len(dots) != 13:
            sys.exit(f"{h}.svg: {len(paths)} curves, {len(dots)} dots")
    for extra in ("0", "9"):
        out = subprocess.run([binary, "render", "--diamond", "1", "--assignment", extra, "--out", "-"],
                             check=True, capture_output=True).stdout
        ET.fromstring(out)
    print(f"{len(hexes)} drawings parsed")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate src/joe_kuo_table.cpp from the published Joe-Kuo direction numbers.

Reads the new-joe-kuo-6 data as shipped with SciPy (scipy.stats._sobol),
which is the table from https://web.maths.unsw.edu.au/~fkuo/sobol/, and
emits the first MAX_DIM dimensions in the original file format:

    d s a m_1 ... m_s

SciPy stores the full primitive polynomial p; the file format's `a` keeps
only the interior coefficients: a = (p - 2^s - 1) / 2 with s = deg(p).
"""
import os

import numpy as np
from scipy.stats import _sobol

MAX_DIM = 128

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, os.pardir, "src", "joe_kuo_table.cpp")


def main() -> None:
    npz = np.load(os.path.join(os.path.dirname(_sobol.__file__),
                               "_sobol_direction_numbers.npz"))
    poly, vinit = npz["poly"], npz["vinit"]

    lines = ["d s a m_i"]
    for dim in range(2, MAX_DIM + 1):
        p = int(poly[dim - 1])
        s = p.bit_length() - 1
        a = (p - (1 << s) - 1) >> 1
        m = [int(x) for x in vinit[dim - 1][:s]]
        lines.append(" ".join(str(v) for v in [dim, s, a] + m))
    text = "\n".join(lines) + "\n"

    with open(OUT, "w") as f:
        f.write('#include "qmcnet/direction_numbers.hpp"\n\n')
        f.write("namespace qmcnet::detail {\n\n")
        f.write("// Joe-Kuo new-joe-kuo-6 direction numbers, dimensions 2..%d.\n" % MAX_DIM)
        f.write("const char* const kJoeKuoTable =\n")
        for line in text.splitlines():
            f.write('    "%s\\n"\n' % line)
        f.write(";\n\n}  // namespace qmcnet::detail\n")
    print("wrote", os.path.normpath(OUT))


if __name__ == "__main__":
    main()

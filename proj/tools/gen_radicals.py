#!/usr/bin/env python3
"""Regenerate src/catalog_radicals.inc: catalog schemes whose coefficients are radicals,
rounded to 36 significant digits with mpmath."""
import sys
from mpmath import mp, mpf, sqrt, cbrt, nstr

mp.dps = 60
DIGITS = 36


def fmt(x):
    return nstr(x, DIGITS, min_fixed=-3, max_fixed=3, strip_zeros=True)


def twon_entry(name, A, B, c, note):
    return '    {"%s", "2n", {%s}, {%s}, {%s}, {}, %s},' % (
        name, ", ".join('"%s"' % fmt(x) for x in A), ", ".join('"%s"' % fmt(x) for x in B),
        ", ".join('"%s"' % fmt(x) for x in c), note)


def dform_entry(name, c, d, note):
    return '    {"%s", "dform", {}, {}, {%s}, {%s}, %s},' % (
        name, ", ".join('"%s"' % fmt(x) for x in c), ", ".join('"%s"' % fmt(x) for x in d), note)


def main():
    s3 = sqrt(3)
    q = sqrt(4 / s3 - 1)
    out = []
    for k, sg in ((1, 1), (2, -1)):
        A = [0, -4 * (1 - 1 / s3) / (2 + s3 - sg * q),
             (9 + s3 * (2 + sg * q)) / (15 - s3 * (8 + sg * (5 - 2 * s3) * q)), -1,
             (15 - s3 * (8 + sg * (5 - 2 * s3) * q)) / (9 + s3 * (2 + sg * q))]
        B = [(1 - 1 / s3) / 2, (2 + s3 - sg * q) / (7 - s3 * (2 + sg * q)), (2 - s3 + sg * q) / 4,
             (2 - s3 + sg * q) / (1 + s3 * (2 + sg * q)), (2 + s3 - sg * q) / 8]
        c = [0, (1 - 1 / s3) / 2, (1 + 1 / s3) / 2, (1 - 1 / s3) / 2, (1 + 1 / s3) / 2]
        out.append(twon_entry("(5,4)_%d" % k, A, B, c, '"nodes (1 -+ 1/sqrt3)/2; tallTree(4) = (3 - sqrt3)/144"'))
    r2 = sqrt(2)
    u = sqrt(12 * r2 + 6)
    v = sqrt(24 * r2 - 30)
    for k, sg in ((3, 1), (4, -1)):
        A = [0, mpf(-1) / 2, -1, -1, -1]
        B = [mpf(1) / 4 + r2 / 8 - sg * u / 24, mpf(1) / 2 + sg * (u + v) / 12, -1 / r2,
             mpf(1) / 2 - sg * (u + v) / 12, mpf(1) / 2 + r2 / 4 + sg * u / 12]
        c = [0, mpf(1) / 4 + r2 / 8 - sg * u / 24, mpf(1) / 2 + r2 / 8 + sg * v / 24,
             mpf(1) / 2 - r2 / 8 + sg * v / 24, mpf(3) / 4 - r2 / 8 - sg * u / 24]
        out.append(twon_entry("(5,4)_%d" % k, A, B, c, '"every d_i = 2; tallTree(4) = 1/72"'))
    p2 = cbrt(6 * s3 + 9)
    psi2 = p2 - 3 / p2 + 14
    p3 = cbrt(6 * s3 - 9)
    psi3 = p3 - 3 / p3 + 2
    c2 = mpf(1) / 3 + sqrt(2 * psi2) / 24 - sqrt((42 - psi2) / 8 + 19 / sqrt(2 * psi2)) / 6
    c3 = mpf(1) / 3 + sqrt(2 * psi3) / 24 + sqrt((6 - psi3) / 8 + 1 / sqrt(2 * psi3)) / 6
    out.append(dform_entry("(6,4)_1", [0, c2, c3, mpf(1) / 2, 1 - c3, 1 - c2, 1], [1, 2, 2, 2, 2, 2, 1],
                           '"self-reflected, every d_i = 2"'))
    c2 = mpf(1) / 2 - r2 / 4
    c3 = mpf(1) / 2 - cbrt(r2 - mpf(4) / 3) / 4
    out.append(dform_entry("(8,4)_1", [0, c2, c3, 1 - c3, mpf(1) / 2, c3, 1 - c3, 1 - c2, 1],
                           [1] + [2] * 7 + [1], '"self-reflected, every d_i = 2, c3 + c4 = 1"'))
    sys.stdout.write("// generated by tools/gen_radicals.py\n" + "\n".join(out) + "\n")


if __name__ == "__main__":
    main()
